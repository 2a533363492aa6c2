#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kolmosym/determining.hpp"
#include "kolmosym/diffop.hpp"
#include "kolmosym/named.hpp"

using namespace kolmosym;

namespace {

Poly t() { return Poly::variable("t"); }
Poly x() { return Poly::variable("x"); }
Poly y() { return Poly::variable("y"); }

// characteristic tuple of the linear symmetry (realize(a) u) du, valid when
// realize(a) has no Dt part
std::map<std::pair<uint32_t, uint32_t>, Poly> tuple_of(const WeylElem& a) {
    std::map<std::pair<uint32_t, uint32_t>, Poly> out;
    DiffOp d = realize(a);
    for (const auto& [m, p] : d.terms()) {
        REQUIRE(m.dt == 0);
        out[{m.dx, m.dy}] = p;
    }
    return out;
}

}  // namespace

TEST_CASE("sparse elimination matches the dense route on random sparse systems") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> dim(2, 10), val(-3, 3), fill(0, 9);
    for (int iter = 0; iter < 80; ++iter) {
        size_t r = dim(rng), c = dim(rng);
        MatrixQ dense(r, c);
        SparseSystemQ sparse(c);
        for (size_t i = 0; i < r; ++i) {
            SparseSystemQ::Row row;
            for (size_t j = 0; j < c; ++j) {
                if (fill(rng) < 4) {
                    Rational v(val(rng));
                    if (v.is_zero()) continue;
                    dense.at(i, j) = v;
                    row.emplace_back(j, v);
                }
            }
            sparse.add_row(row);
        }
        auto res = sparse.eliminate(true);
        CHECK(res.rank == dense.rank());
        auto dk = span_canonical_basis(dense.nullspace(), c);
        CHECK(res.kernel == dk);
        for (const auto& v : res.kernel) CHECK(sparse.in_kernel(v));
    }
}

TEST_CASE("determining dimensions at low order with cap stabilization") {
    // n = 0: only the constant eta^00 (the symmetry u du)
    for (uint32_t cap : {0u, 1u, 4u}) {
        auto res = solve_determining(0, cap);
        CHECK(res.complete);
        CHECK(res.dimension == 1);
    }

    // n = 1: dimension 5
    CHECK(solve_determining(1, determining_default_cap(1)).dimension == 5);
    CHECK(solve_determining(1, determining_default_cap(1) + 1).dimension == 5);

    // n = 2: dimension 15
    CHECK(solve_determining(2, determining_default_cap(2)).dimension == 15);
    CHECK(solve_determining(2, determining_default_cap(2) + 1).dimension == 15);
}

TEST_CASE("determining basis elements satisfy the system exactly") {
    DeterminingOptions opt;
    opt.want_basis = true;
    auto res = solve_determining(1, 4, opt);
    REQUIRE(res.dimension == 5);
    REQUIRE(res.basis.size() == 5);
    for (const auto& tuple : res.basis) CHECK(determining_residual_zero(1, tuple));
}

TEST_CASE("closed-form characteristics solve the determining system") {
    // u du
    std::map<std::pair<uint32_t, uint32_t>, Poly> seed = {{{0, 0}, Poly::constant(Rational(1))}};
    CHECK(determining_residual_zero(0, seed));

    // P3 u: eta^{10} = 3t^2, eta^{01} = t^3, eta^{00} = 3tx - 3y
    std::map<std::pair<uint32_t, uint32_t>, Poly> p3 = {
        {{1, 0}, Rational(3) * (t() * t())},
        {{0, 1}, t().pow(3)},
        {{0, 0}, Rational(3) * (t() * x()) - Rational(3) * y()}};
    CHECK(determining_residual_zero(1, p3));
    CHECK(tuple_of(WeylElem::p3()) == p3);

    // arbitrary algebra elements give solutions at their realized order
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<uint32_t> de(0, 2);
    for (int iter = 0; iter < 25; ++iter) {
        PMonomial m{de(rng), de(rng), de(rng), de(rng)};
        WeylElem a = WeylElem::monomial(m) + WeylElem::generator(iter % 4);
        uint32_t n = static_cast<uint32_t>(std::max(realize(a).order(), 0));
        CHECK(determining_residual_zero(n, tuple_of(a)));
    }

    // a perturbed tuple must fail
    auto bad = p3;
    bad[{0, 0}] += x();
    CHECK(!determining_residual_zero(1, bad));
}

TEST_CASE("deadline support reports incompleteness") {
    DeterminingOptions opt;
    opt.deadline = [] { return true; };
    auto res = solve_determining(2, 8, opt);
    CHECK(!res.complete);
}
