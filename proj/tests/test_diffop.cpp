#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kolmosym/diffop.hpp"
#include "kolmosym/matrix.hpp"
#include "kolmosym/named.hpp"

using namespace kolmosym;

namespace {

Poly t() { return Poly::variable("t"); }
Poly x() { return Poly::variable("x"); }
Poly y() { return Poly::variable("y"); }

WeylElem random_elem(std::mt19937_64& rng, uint32_t max_deg, int terms) {
    WeylElem e;
    std::uniform_int_distribution<int> dc(-4, 4), dden(1, 2);
    std::uniform_int_distribution<uint32_t> dd(0, max_deg);
    for (int i = 0; i < terms; ++i) {
        uint32_t d = dd(rng);
        std::uniform_int_distribution<uint32_t> part(0, d);
        uint32_t i3 = part(rng);
        std::uniform_int_distribution<uint32_t> part2(0, d - i3);
        uint32_t i2 = part2(rng);
        std::uniform_int_distribution<uint32_t> part3(0, d - i3 - i2);
        uint32_t i1 = part3(rng);
        e.add_term(PMonomial{i3, i2, i1, d - i3 - i2 - i1}, Rational(dc(rng), dden(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("compose implements the Leibniz rule") {
    // Dx o x = x Dx + 1
    DiffOp lhs = compose(DiffOp::dx(), DiffOp::from_poly(x()));
    DiffOp rhs = DiffOp::derivative(0, 1, 0, x()) + DiffOp::identity();
    CHECK(lhs == rhs);

    // A o identity = A, identity o A = A
    DiffOp A = ops::K();
    CHECK(compose(A, DiffOp::identity()) == A);
    CHECK(compose(DiffOp::identity(), A) == A);

    // (P1)^2 = Dx^2 + 2t DxDy + t^2 Dy^2
    DiffOp p1sq = compose(ops::P1(), ops::P1());
    DiffOp expect = DiffOp::derivative(0, 2, 0) +
                    DiffOp::derivative(0, 1, 1, Rational(2) * t()) +
                    DiffOp::derivative(0, 0, 2, t() * t());
    CHECK(p1sq == expect);
    CHECK(realize(WeylElem::p1() * WeylElem::p1()) == p1sq);
}

TEST_CASE("compose is associative") {
    std::mt19937_64 rng(4);
    std::vector<DiffOp> pool = {ops::P3(), ops::P2(), ops::P1(), ops::P0(),
                                ops::Pt(), ops::D(),  ops::K(),  op_F()};
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int iter = 0; iter < 60; ++iter) {
        const DiffOp &A = pool[pick(rng)], &B = pool[pick(rng)], &C = pool[pick(rng)];
        CHECK(compose(compose(A, B), C) == compose(A, compose(B, C)));
    }
}

TEST_CASE("realize is an algebra homomorphism") {
    // examples pinned by the operator displays
    DiffOp hat_pt = realize(named::hat_pt());
    CHECK(hat_pt == DiffOp::derivative(0, 2, 0) - DiffOp::derivative(0, 0, 1, x()));

    DiffOp hat_d = realize(named::hat_d());
    DiffOp hat_d_expect = DiffOp::derivative(0, 2, 0, Rational(2) * t()) +
                          DiffOp::derivative(0, 1, 0, x()) +
                          DiffOp::derivative(0, 0, 1, Rational(3) * y() - Rational(2) * (t() * x())) +
                          DiffOp::from_poly(Poly::constant(Rational(2)));
    CHECK(hat_d == hat_d_expect);

    DiffOp hat_k = realize(named::hat_k());
    DiffOp hat_k_expect = DiffOp::derivative(0, 2, 0, t() * t()) +
                          DiffOp::derivative(0, 1, 0, Rational(3) * y() + t() * x()) +
                          DiffOp::derivative(0, 0, 1, t() * (Rational(3) * y() - t() * x())) +
                          DiffOp::from_poly(x() * x() + Rational(2) * t());
    CHECK(hat_k == hat_k_expect);

    CHECK(realize(WeylElem::one()) == DiffOp::identity());

    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 500; ++iter) {
        WeylElem a = random_elem(rng, 3, 2), b = random_elem(rng, 3, 2);
        CHECK(realize(a * b) == compose(realize(a), realize(b)));
    }
}

TEST_CASE("realized casimir matches the third-order operator display") {
    // -12y Dx^3 - 3x^2 Dx^2 + 18xy DxDy + 9y^2 Dy^2 + 3x Dx + (4x^3 + 27y) Dy
    DiffOp c = realize(named::casimir());
    DiffOp expect = DiffOp::derivative(0, 3, 0, Rational(-12) * y()) +
                    DiffOp::derivative(0, 2, 0, Rational(-3) * (x() * x())) +
                    DiffOp::derivative(0, 1, 1, Rational(18) * (x() * y())) +
                    DiffOp::derivative(0, 0, 2, Rational(9) * (y() * y())) +
                    DiffOp::derivative(0, 1, 0, Rational(3) * x()) +
                    DiffOp::derivative(0, 0, 1, Rational(4) * x().pow(3) + Rational(27) * y());
    CHECK(c == expect);

    // degree four as a polynomial, order three as an operator
    CHECK(named::casimir().degree() == 4);
    CHECK(c.order() == 3);
    CHECK(c.str() ==
          "-12*y*Dx^3 - 3*x^2*Dx^2 + 18*x*y*Dx*Dy + 9*y^2*Dy^2 + 3*x*Dx + (4*x^3 + 27*y)*Dy");
}

TEST_CASE("op_F and commutation with the algebra") {
    CHECK(op_F() == DiffOp::dt() + DiffOp::derivative(0, 0, 1, x()) - DiffOp::derivative(0, 2, 0));

    for (unsigned g = 0; g < 4; ++g) CHECK(commutes_with_F(realize(WeylElem::generator(g))));

    std::mt19937_64 rng(60);
    for (int iter = 0; iter < 60; ++iter)
        CHECK(commutes_with_F(realize(random_elem(rng, 4, 3))));

    // x Dx is not a recursion operator: the commutator has a -2 Dx^2 term
    DiffOp xdx = DiffOp::derivative(0, 1, 0, x());
    DiffOp comm = diffop_commutator(op_F(), xdx);
    CHECK(!commutes_with_F(xdx));
    CHECK(comm.coeff(DMulti{0, 2, 0}) == Poly::constant(Rational(-2)));
}

TEST_CASE("reduce_mod_F maps the sl(2) operators to their hats") {
    CHECK(reduce_mod_F(ops::Pt()) == realize(named::hat_pt()));
    CHECK(reduce_mod_F(ops::D()) == realize(named::hat_d()));
    CHECK(reduce_mod_F(ops::K()) == realize(named::hat_k()));

    // no Dt present: fixed point; idempotence
    CHECK(reduce_mod_F(DiffOp::dx()) == DiffOp::dx());
    CHECK(reduce_mod_F(reduce_mod_F(ops::K())) == reduce_mod_F(ops::K()));

    // exact division identities: Pt - hatPt = 1 o F, D - hatD = 2t o F,
    // K - hatK = t^2 o F
    CHECK(ops::Pt() - realize(named::hat_pt()) == op_F());
    CHECK(ops::D() - realize(named::hat_d()) ==
          compose(DiffOp::from_poly(Rational(2) * t()), op_F()));
    CHECK(ops::K() - realize(named::hat_k()) ==
          compose(DiffOp::from_poly(t() * t()), op_F()));

    // quotient bookkeeping: A = A' + G o F exactly
    for (const DiffOp& A : {ops::D(), ops::K(), compose(ops::K(), ops::Pt())}) {
        auto [reduced, quotient] = reduce_mod_F_full(A);
        CHECK(reduced.dt_order() == 0);
        CHECK(A == reduced + compose(quotient, op_F()));
    }
}

TEST_CASE("structure constants of the realized Lie operators") {
    auto rep = structure_constants_check();
    CHECK(rep.all_ok);
    CHECK(rep.nonzero_count == 15);

    // spot checks from the table
    CHECK(diffop_commutator(ops::Pt(), ops::D()) == Rational(2) * ops::Pt());
    CHECK(diffop_commutator(ops::P1(), ops::P2()) == DiffOp::identity());  // image of -I
    CHECK(diffop_commutator(ops::P0(), ops::P3()) ==
          DiffOp::from_poly(Poly::constant(Rational(-3))));  // image of 3I
    CHECK(diffop_commutator(ops::Pt(), ops::K()) == ops::D());
    CHECK(diffop_commutator(ops::K(), ops::P0()) == Rational(-3) * ops::P1());
}

TEST_CASE("order equals degree on pure monomials; the casimir breaks it") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<uint32_t> de(0, 2);
    for (int iter = 0; iter < 40; ++iter) {
        PMonomial m{de(rng), de(rng), de(rng), de(rng)};
        CHECK(realize(WeylElem::monomial(m)).order() == static_cast<int>(m.degree()));
    }
}

TEST_CASE("brute-force order oracle at small n") {
    // dim { Q in span(monomials of degree <= n + n/3) : ord realize(Q) <= n }
    // must equal the closed formula
    for (uint32_t n = 0; n <= 3; ++n) {
        uint32_t cap = n + n / 3;
        auto monos = monomials_up_to_degree(cap);
        std::vector<DiffOp> realized;
        for (const auto& m : monos) realized.push_back(realize(WeylElem::monomial(m)));
        // rows: coefficients of derivative terms of order > n
        std::map<std::pair<std::array<uint32_t, 3>, std::vector<uint32_t>>, size_t> rows;
        for (const auto& d : realized)
            for (const auto& [dm, p] : d.terms()) {
                if (dm.order() <= n) continue;
                for (const auto& [mono, c] : p.terms()) {
                    (void)c;
                    rows.try_emplace({dm.tuple(), mono.exps}, rows.size());
                }
            }
        MatrixQ sys(rows.size(), realized.size());
        for (size_t j = 0; j < realized.size(); ++j)
            for (const auto& [dm, p] : realized[j].terms()) {
                if (dm.order() <= n) continue;
                for (const auto& [mono, c] : p.terms())
                    sys.at(rows[{dm.tuple(), mono.exps}], j) = c;
            }
        size_t dim = realized.size() - sys.rank();
        CHECK(dim == static_cast<size_t>(dim_ord_closed(n)));
    }
}

TEST_CASE("diffop canonical printing") {
    CHECK(ops::P0().str() == "Dy");
    CHECK(ops::P1().str() == "Dx + t*Dy");
    CHECK(realize(named::hat_pt()).str() == "Dx^2 - x*Dy");
    CHECK(op_F().str() == "-Dx^2 + Dt + x*Dy");
    CHECK(DiffOp().str() == "0");
}
