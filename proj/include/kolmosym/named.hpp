#pragma once

#include <map>
#include <string>
#include <vector>

#include "kolmosym/weyl.hpp"

namespace kolmosym {

// Named elements of the algebra. Each is re-derived from its defining recipe
// at construction; the explicit normal forms from the literature are kept in
// the regression tests only.
namespace named {

inline const WeylElem& hat_pt() {  // (P1)^2 - P2*P0
    static const WeylElem e = WeylElem::p1() * WeylElem::p1() - WeylElem::p2() * WeylElem::p0();
    return e;
}

inline const WeylElem& hat_d() {  // P2*P1 - P3*P0 + 2
    static const WeylElem e = WeylElem::p2() * WeylElem::p1() - WeylElem::p3() * WeylElem::p0() +
                              WeylElem::constant(Rational(2));
    return e;
}

inline const WeylElem& hat_k() {  // (P2)^2 - P3*P1
    static const WeylElem e = WeylElem::p2() * WeylElem::p2() - WeylElem::p3() * WeylElem::p1();
    return e;
}

// Casimir element of the sl(2) copy: hatD^2 - 2(hatK hatPt + hatPt hatK),
// expanded by the engine.
inline const WeylElem& casimir() {
    static const WeylElem e = hat_d() * hat_d() -
                              Rational(2) * (hat_k() * hat_pt() + hat_pt() * hat_k());
    return e;
}

// Grading element: ad-eigenvalue on a basis monomial is -(i3+i2-i1-i0).
inline const WeylElem& s_grading() {  // (1/3) P3*P0 - P2*P1
    static const WeylElem e = Rational(1, 3) * (WeylElem::p3() * WeylElem::p0()) -
                              WeylElem::p2() * WeylElem::p1();
    return e;
}

// Centralizer generators for the one-dimensional subalgebra blocks.

inline const WeylElem& h1_s11() {  // P1 - 1/6 (P0)^2
    static const WeylElem e = WeylElem::p1() -
                              Rational(1, 6) * (WeylElem::p0() * WeylElem::p0());
    return e;
}

inline const WeylElem& h2_s11() {  // P2 + 2/27 (P0)^3 - 2/3 P1*P0
    static const WeylElem e = WeylElem::p2() +
                              Rational(2, 27) * WeylElem::p0().pow(3) -
                              Rational(2, 3) * (WeylElem::p1() * WeylElem::p0());
    return e;
}

inline const WeylElem& h_s12() {  // P3 (P0)^2 - 3 P2 P1 P0 + 2 (P1)^3
    static const WeylElem e = WeylElem::p3() * WeylElem::p0().pow(2) -
                              Rational(3) * (WeylElem::p2() * WeylElem::p1() * WeylElem::p0()) +
                              Rational(2) * WeylElem::p1().pow(3);
    return e;
}

inline const WeylElem& h_s14() {  // (P3)^2 + 3 P3 P1 + 3 P2 P0 + (P0)^2
    static const WeylElem e = WeylElem::p3().pow(2) +
                              Rational(3) * (WeylElem::p3() * WeylElem::p1()) +
                              Rational(3) * (WeylElem::p2() * WeylElem::p0()) +
                              WeylElem::p0().pow(2);
    return e;
}

inline const WeylElem& s_s14() {
    static const WeylElem e = [] {
        const WeylElem P3 = WeylElem::p3(), P2 = WeylElem::p2(), P1 = WeylElem::p1(),
                       P0 = WeylElem::p0();
        WeylElem e = P3.pow(3) * P0;
        e -= Rational(3) * (P3.pow(2) * P2 * P1);
        e += Rational(2) * (P3 * P2.pow(3));
        e += Rational(3) * (P3 * P2.pow(2) * P0);
        e -= Rational(6) * (P3 * P2 * P1.pow(2));
        e -= Rational(3) * (P3 * P1.pow(2) * P0);
        e -= P3 * P0.pow(3);
        e += Rational(3) * (P2.pow(3) * P1);
        e += Rational(6) * (P2.pow(2) * P1 * P0);
        e -= Rational(3) * (P2 * P1.pow(3));
        e += Rational(3) * (P2 * P1 * P0.pow(2));
        e -= Rational(2) * (P1.pow(3) * P0);
        e -= Rational(4) * P3.pow(2);
        e += Rational(8) * P0.pow(2);
        e += Rational(12) * (P2 * P0);
        return e;
    }();
    return e;
}

// Subalgebra operators B whose centralizers the named elements live in.
inline WeylElem b_s11() { return hat_pt() + WeylElem::p3(); }
inline WeylElem b_s12() { return hat_pt(); }               // up to the scalar delta
inline WeylElem b_s14() { return hat_pt() + hat_k(); }     // up to the scalar mu

// The two-generation pair: P3 P0 + 5 P2 P1 and
// ((P3)^3 + (P0)^2 + 1)((P2)^3 + (P1)^2 + 1).
inline std::vector<WeylElem> two_generation_generators() {
    const WeylElem P3 = WeylElem::p3(), P2 = WeylElem::p2(), P1 = WeylElem::p1(),
                   P0 = WeylElem::p0();
    WeylElem g1 = P3 * P0 + Rational(5) * (P2 * P1);
    WeylElem g2 = (P3.pow(3) + P0.pow(2) + WeylElem::one()) *
                  (P2.pow(3) + P1.pow(2) + WeylElem::one());
    return {g1, g2};
}

// Identifier table shared by the expression grammar.
inline const std::map<std::string, WeylElem>& table() {
    static const std::map<std::string, WeylElem> t = {
        {"P0", WeylElem::p0()},   {"P1", WeylElem::p1()},   {"P2", WeylElem::p2()},
        {"P3", WeylElem::p3()},   {"hatPt", hat_pt()},      {"hatD", hat_d()},
        {"hatK", hat_k()},        {"C", casimir()},         {"S", s_grading()},
        {"H1", h1_s11()},         {"H2", h2_s11()},         {"Hs12", h_s12()},
        {"Hs14", h_s14()},        {"Ss14", s_s14()},
    };
    return t;
}

}  // namespace named

// Basis element of the order filtration: C^m * monomial, kept with its
// provenance so enumeration order is reproducible.
struct OrdBasisElem {
    uint32_t c_power;
    PMonomial mono;
    WeylElem value;  // expanded normal form
};

// Basis of the subspace of operators of order <= n: all monomials with
// |i| <= n plus C^m * monomial with m >= 1, |i| + 3m = n. Enumeration order:
// ascending m, then graded-lex on (i3,i2,i1,i0).
inline std::vector<OrdBasisElem> basis_ord(uint32_t n) {
    std::vector<OrdBasisElem> out;
    for (const auto& m : monomials_up_to_degree(n))
        out.push_back({0, m, WeylElem::monomial(m)});
    std::vector<WeylElem> c_pows = {WeylElem::one()};
    for (uint32_t m = 1; 3 * m <= n; ++m) {
        c_pows.push_back(c_pows.back() * named::casimir());
        uint32_t rem = n - 3 * m;
        for (const auto& mono : monomials_up_to_degree(rem)) {
            if (mono.degree() != rem) continue;
            out.push_back({m, mono, c_pows[m] * WeylElem::monomial(mono)});
        }
    }
    return out;
}

// Pure-monomial basis of the degree filtration, |i| <= n.
inline std::vector<WeylElem> basis_deg(uint32_t n) {
    std::vector<WeylElem> out;
    for (const auto& m : monomials_up_to_degree(n)) out.push_back(WeylElem::monomial(m));
    return out;
}

}  // namespace kolmosym
