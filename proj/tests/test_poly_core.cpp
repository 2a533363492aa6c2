#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kolmosym/matrix.hpp"
#include "kolmosym/parse.hpp"
#include "kolmosym/poly.hpp"

using namespace kolmosym;

namespace {

Poly var(const char* n) { return Poly::variable(n); }
Poly cpoly(long n, long d = 1) { return Poly::constant(Rational(n, d)); }

// Independent term-by-term oracles, used to freeze the derived expectations.
Poly oracle_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<uint32_t> e(3);
            for (size_t i = 0; i < 3; ++i) e[i] = ma.exps[i] + mb.exps[i];
            r += Poly::term(ca * cb, Monomial(e));
        }
    return r;
}

Poly oracle_diff(const Poly& p, size_t v) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        if (!m.exps[v]) continue;
        std::vector<uint32_t> e = m.exps;
        --e[v];
        r += Poly::term(c * Rational(static_cast<long>(m.exps[v])), Monomial(e));
    }
    return r;
}

Poly random_poly(std::mt19937_64& rng, int max_deg, int terms) {
    Poly p;
    std::uniform_int_distribution<int> dd(0, max_deg), dc(-5, 5), dden(1, 3);
    for (int i = 0; i < terms; ++i) {
        int d = dd(rng);
        std::uniform_int_distribution<int> ds(0, d);
        int a = ds(rng);
        std::uniform_int_distribution<int> ds2(0, d - a);
        int b = ds2(rng);
        int c = d - a - b;
        p += Poly::term(Rational(dc(rng), dden(rng)),
                        Monomial({static_cast<uint32_t>(a), static_cast<uint32_t>(b),
                                  static_cast<uint32_t>(c)}));
    }
    return p;
}

}  // namespace

TEST_CASE("rational canonical form and printing") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, -2) == Rational(-3, 2));
    CHECK(Rational(3, -2).denominator() == 2);
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::parse(" -7/2 ") == Rational(-7, 2));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
}

TEST_CASE("poly arithmetic identities") {
    Poly t = var("t"), x = var("x"), y = var("y");

    // (x + t)(x - t) = x^2 - t^2
    CHECK((x + t) * (x - t) == x * x - t * t);

    // p + 0 = p
    Poly p = cpoly(3) * t * x - cpoly(3) * y;
    CHECK(p + Poly() == p);

    // (3tx - 3y) * x, frozen from the term-by-term oracle
    Poly expected = oracle_mul(p, x);
    CHECK(p * x == expected);
    CHECK(expected == cpoly(3) * t * x * x - cpoly(3) * x * y);

    CHECK_THROWS_AS(p + Poly(std::make_shared<const Ring>(std::vector<std::string>{"z"})),
                    std::domain_error);
}

TEST_CASE("poly degree and zero sentinel") {
    Poly x = var("x"), t = var("t");
    CHECK(Poly().degree() == kDegNegInf);
    CHECK(cpoly(5).degree() == 0);
    CHECK((t * x * x).degree() == 3);
    CHECK((x * x - x * x).degree() == kDegNegInf);
}

TEST_CASE("poly differentiation") {
    Poly t = var("t"), x = var("x"), y = var("y");
    CHECK((t * x * x).diff("x") == cpoly(2) * t * x);
    CHECK((x * x + cpoly(2) * t).diff("y").is_zero());

    // d/dt (3t^2 + 3tx^2 - 3xy), frozen from the oracle
    Poly p = cpoly(3) * t * t + cpoly(3) * t * x * x - cpoly(3) * x * y;
    CHECK(p.diff("t") == oracle_diff(p, 0));
    CHECK(p.diff("t") == cpoly(6) * t + cpoly(3) * x * x);

    CHECK_THROWS_AS(p.diff("u"), std::domain_error);
}

TEST_CASE("poly substitution") {
    Poly t = var("t"), x = var("x"), y = var("y");
    Rational l2(7, 2);

    CHECK(x.subst({{"x", x + cpoly(2) * l2 * t}}) == x + cpoly(7) * t);
    Poly p = y - t * x;
    CHECK(p.subst({{"t", t}, {"x", x}, {"y", y}}) == p);

    // binomial oracle: (x + t)^2
    CHECK((x * x).subst({{"x", x + t}}) == x * x + cpoly(2) * t * x + t * t);
}

TEST_CASE("poly ring axioms and derivation property on random inputs") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 1000; ++iter) {
        Poly a = random_poly(rng, 6, 4), b = random_poly(rng, 6, 4), c = random_poly(rng, 6, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
    for (int iter = 0; iter < 200; ++iter) {
        Poly a = random_poly(rng, 5, 4), b = random_poly(rng, 5, 4);
        for (size_t v = 0; v < 3; ++v)
            CHECK((a * b).diff(v) == a.diff(v) * b + a * b.diff(v));
    }
    // substitution is a ring homomorphism
    std::map<std::string, Poly> sub = {{"t", var("t") + var("x")},
                                       {"x", var("x") * var("x") - cpoly(2)},
                                       {"y", var("y") + var("t") * var("x")}};
    for (int iter = 0; iter < 100; ++iter) {
        Poly a = random_poly(rng, 4, 3), b = random_poly(rng, 4, 3);
        CHECK((a * b).subst(sub) == a.subst(sub) * b.subst(sub));
        CHECK((a + b).subst(sub) == a.subst(sub) + b.subst(sub));
    }
}

TEST_CASE("poly canonical printing and parse round-trip") {
    Poly t = var("t"), x = var("x"), y = var("y");
    Poly p = cpoly(3) * t * x * x - cpoly(3) * x * y;
    CHECK(p.str() == "3*t*x^2 - 3*x*y");
    CHECK((x * x + cpoly(2) * t).str() == "x^2 + 2*t");
    CHECK(Poly().str() == "0");
    CHECK(cpoly(-1, 2).str() == "-1/2");

    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        Poly a = random_poly(rng, 6, 5);
        CHECK(parse_poly(a.str()) == a);
    }
    CHECK(parse_poly("3*t*x^2 - 3*x*y") == p);
    CHECK_THROWS_AS(parse_poly("x +"), ParseError);
    CHECK_THROWS_AS(parse_poly("q + 1"), ParseError);
}

TEST_CASE("nullspace canonical form") {
    // identity 3x3 -> empty
    CHECK(MatrixQ::identity(3).nullspace().empty());

    // zero 2x3 -> basis of size 3
    MatrixQ z(2, 3);
    CHECK(z.nullspace().size() == 3);

    // [[1,1],[2,2]] -> one vector proportional to (1,-1)
    MatrixQ m(2, 2);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(1);
    m.at(1, 0) = Rational(2);
    m.at(1, 1) = Rational(2);
    auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] * Rational(-1) == ns[0][1]);
    CHECK(!ns[0][0].is_zero());
}

TEST_CASE("rank and solve") {
    CHECK(MatrixQ::identity(4).rank() == 4);

    // rows = coefficient vectors of {1, x, 3tx - 3y} in the monomial basis
    Poly t = var("t"), x = var("x"), y = var("y");
    std::vector<Poly> polys = {cpoly(1), x, cpoly(3) * t * x - cpoly(3) * y};
    std::map<std::vector<uint32_t>, size_t> cols;
    for (const auto& p : polys)
        for (const auto& [mo, c] : p.terms()) {
            (void)c;
            cols.try_emplace(mo.exps, cols.size());
        }
    MatrixQ m(polys.size(), cols.size());
    for (size_t i = 0; i < polys.size(); ++i)
        for (const auto& [mo, c] : polys[i].terms()) m.at(i, cols[mo.exps]) = c;
    CHECK(m.rank() == 3);

    MatrixQ s(1, 1);
    s.at(0, 0) = Rational(2);
    auto sol = s.solve({Rational(3)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(3, 2));

    // inconsistent system
    MatrixQ bad(2, 1);
    bad.at(0, 0) = Rational(1);
    bad.at(1, 0) = Rational(1);
    CHECK(!bad.solve({Rational(1), Rational(2)}).has_value());

    CHECK_THROWS_AS(s.solve({Rational(1), Rational(1)}), std::domain_error);
}

TEST_CASE("rank + nullity = cols and exact kernel residuals on random matrices") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 8), val(-4, 4);
    for (int iter = 0; iter < 120; ++iter) {
        size_t r = dim(rng), c = dim(rng);
        MatrixQ m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                if (val(rng) > 1) m.at(i, j) = Rational(val(rng));
        auto ns = m.nullspace();
        CHECK(m.rank() + ns.size() == c);
        for (const auto& v : ns)
            for (const auto& entry : m.apply(v)) CHECK(entry.is_zero());
    }
}
