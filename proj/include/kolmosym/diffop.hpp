#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kolmosym/poly.hpp"
#include "kolmosym/weyl.hpp"

namespace kolmosym {

// Derivative multi-index (Dt^a, Dx^b, Dy^c).
struct DMulti {
    uint32_t dt = 0, dx = 0, dy = 0;

    uint32_t order() const { return dt + dx + dy; }
    std::array<uint32_t, 3> tuple() const { return {dt, dx, dy}; }
    friend bool operator==(const DMulti& a, const DMulti& b) { return a.tuple() == b.tuple(); }
};

struct DMultiLess {
    bool operator()(const DMulti& a, const DMulti& b) const {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.tuple() < b.tuple();
    }
};

// Differential operator sum c_abc(t,x,y) Dt^a Dx^b Dy^c with polynomial
// coefficients. Operators carry Dt even though realized algebra elements
// never produce it: the equation operator F and the Lie operators Pt, D, K
// need it, and reduce_mod_F eliminates it.
class DiffOp {
public:
    using TermMap = std::map<DMulti, Poly, DMultiLess>;

    DiffOp() = default;

    static DiffOp zero() { return DiffOp(); }
    static DiffOp identity() { return from_poly(Poly::constant(Rational(1))); }
    static DiffOp from_poly(const Poly& p) {
        DiffOp d;
        if (!p.is_zero()) d.terms_[DMulti{}] = p;
        return d;
    }
    static DiffOp derivative(uint32_t a, uint32_t b, uint32_t c,
                             const Poly& coeff = Poly::constant(Rational(1))) {
        DiffOp d;
        if (!coeff.is_zero()) d.terms_[DMulti{a, b, c}] = coeff;
        return d;
    }
    static DiffOp dt() { return derivative(1, 0, 0); }
    static DiffOp dx() { return derivative(0, 1, 0); }
    static DiffOp dy() { return derivative(0, 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int order() const {
        if (terms_.empty()) return -0x7fffffff;
        return static_cast<int>(terms_.rbegin()->first.order());
    }
    uint32_t dt_order() const {
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) {
            (void)c;
            d = std::max(d, m.dt);
        }
        return d;
    }

    Poly coeff(const DMulti& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Poly() : it->second;
    }

    DiffOp& operator+=(const DiffOp& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    DiffOp& operator-=(const DiffOp& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    DiffOp operator-() const {
        DiffOp r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend DiffOp operator*(const Rational& c, const DiffOp& d) {
        DiffOp r;
        if (c.is_zero()) return r;
        for (const auto& [m, dc] : d.terms_) r.terms_[m] = c * dc;
        return r;
    }

    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    // Canonical text: terms by descending (a,b,c) graded-lex; multi-term
    // coefficients parenthesized, e.g. "(4*x^3+27*y)*Dy".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, p] = *it;
            bool multi = p.term_count() > 1;
            std::string cs;
            if (multi) {
                cs = "(" + p.str() + ")";
                os << (first ? "" : " + ") << cs;
            } else {
                Rational c = p.terms().begin()->second;
                Poly mono = Poly::term(c.sign() < 0 ? -c : c, p.terms().begin()->first, p.ring());
                std::string body = mono.str();
                if (first)
                    os << (c.sign() < 0 ? "-" : "");
                else
                    os << (c.sign() < 0 ? " - " : " + ");
                bool unit_body = body == "1";
                if (!unit_body || m.order() == 0) os << body;
                cs = body;
                if (unit_body && m.order() > 0) {
                    // coefficient 1: derivative factors only
                    print_derivs(os, m, false);
                    first = false;
                    continue;
                }
            }
            print_derivs(os, m, true);
            first = false;
        }
        return os.str();
    }

    void add_term(const DMulti& m, const Poly& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    static void print_derivs(std::ostringstream& os, const DMulti& m, bool leading_star) {
        const char* names[3] = {"Dt", "Dx", "Dy"};
        uint32_t exps[3] = {m.dt, m.dx, m.dy};
        bool first = !leading_star;
        for (int i = 0; i < 3; ++i) {
            if (!exps[i]) continue;
            if (!first) os << "*";
            first = false;
            os << names[i];
            if (exps[i] > 1) os << "^" << exps[i];
        }
    }

    TermMap terms_;
};

// Exact operator product A(B(.)) via the generalized Leibniz rule:
// D^alpha (q .) = sum_{gamma <= alpha} C(alpha,gamma) (D^gamma q) D^(alpha-gamma).
inline DiffOp compose(const DiffOp& A, const DiffOp& B) {
    DiffOp r;
    for (const auto& [ma, pa] : A.terms()) {
        for (const auto& [mb, pb] : B.terms()) {
            // derivatives of pb up to ma, computed incrementally
            for (uint32_t gt = 0; gt <= ma.dt; ++gt) {
                for (uint32_t gx = 0; gx <= ma.dx; ++gx) {
                    for (uint32_t gy = 0; gy <= ma.dy; ++gy) {
                        Poly dq = pb;
                        for (uint32_t i = 0; i < gt && !dq.is_zero(); ++i) dq = dq.diff(0);
                        for (uint32_t i = 0; i < gx && !dq.is_zero(); ++i) dq = dq.diff(1);
                        for (uint32_t i = 0; i < gy && !dq.is_zero(); ++i) dq = dq.diff(2);
                        if (dq.is_zero()) continue;
                        Rational c = binomial_q(ma.dt, gt) * binomial_q(ma.dx, gx) *
                                     binomial_q(ma.dy, gy);
                        DMulti m{ma.dt - gt + mb.dt, ma.dx - gx + mb.dx, ma.dy - gy + mb.dy};
                        r.add_term(m, (c * pa) * dq);
                    }
                }
            }
        }
    }
    return r;
}

inline DiffOp diffop_commutator(const DiffOp& a, const DiffOp& b) {
    return compose(a, b) - compose(b, a);
}

namespace ops {

inline Poly tp() { return Poly::variable("t"); }
inline Poly xp() { return Poly::variable("x"); }
inline Poly yp() { return Poly::variable("y"); }

// The four Lie-symmetry operators generating the algebra.
inline const DiffOp& P0() {
    static const DiffOp d = DiffOp::dy();
    return d;
}
inline const DiffOp& P1() {  // Dx + t Dy
    static const DiffOp d = DiffOp::derivative(0, 1, 0) + DiffOp::derivative(0, 0, 1, tp());
    return d;
}
inline const DiffOp& P2() {  // 2t Dx + t^2 Dy + x
    static const DiffOp d = DiffOp::derivative(0, 1, 0, Rational(2) * tp()) +
                            DiffOp::derivative(0, 0, 1, tp() * tp()) + DiffOp::from_poly(xp());
    return d;
}
inline const DiffOp& P3() {  // 3t^2 Dx + t^3 Dy - 3(y - tx)
    static const DiffOp d = DiffOp::derivative(0, 1, 0, Rational(3) * (tp() * tp())) +
                            DiffOp::derivative(0, 0, 1, tp() * tp() * tp()) +
                            DiffOp::from_poly(Rational(3) * (tp() * xp()) - Rational(3) * yp());
    return d;
}
inline const DiffOp& Pt() {
    static const DiffOp d = DiffOp::dt();
    return d;
}
inline const DiffOp& D() {  // 2t Dt + x Dx + 3y Dy + 2
    static const DiffOp d = DiffOp::derivative(1, 0, 0, Rational(2) * tp()) +
                            DiffOp::derivative(0, 1, 0, xp()) +
                            DiffOp::derivative(0, 0, 1, Rational(3) * yp()) +
                            DiffOp::from_poly(Poly::constant(Rational(2)));
    return d;
}
inline const DiffOp& K() {  // t^2 Dt + (tx + 3y) Dx + 3ty Dy + x^2 + 2t
    static const DiffOp d = DiffOp::derivative(1, 0, 0, tp() * tp()) +
                            DiffOp::derivative(0, 1, 0, tp() * xp() + Rational(3) * yp()) +
                            DiffOp::derivative(0, 0, 1, Rational(3) * (tp() * yp())) +
                            DiffOp::from_poly(xp() * xp() + Rational(2) * tp());
    return d;
}

}  // namespace ops

// The equation operator F = Dt + x Dy - Dx^2.
inline const DiffOp& op_F() {
    static const DiffOp d = DiffOp::dt() + DiffOp::derivative(0, 0, 1, ops::xp()) -
                            DiffOp::derivative(0, 2, 0);
    return d;
}

// Algebra homomorphism: normal-ordered monomials map to compositions of the
// realized generators in the written order.
inline DiffOp realize(const WeylElem& a) {
    auto pow_op = [](const DiffOp& g, uint32_t e) {
        DiffOp r = DiffOp::identity();
        for (uint32_t i = 0; i < e; ++i) r = compose(r, g);
        return r;
    };
    DiffOp r;
    for (const auto& [m, c] : a.terms()) {
        DiffOp t = DiffOp::from_poly(Poly::constant(c));
        if (m.i3) t = compose(t, pow_op(ops::P3(), m.i3));
        if (m.i2) t = compose(t, pow_op(ops::P2(), m.i2));
        if (m.i1) t = compose(t, pow_op(ops::P1(), m.i1));
        if (m.i0) t = compose(t, pow_op(ops::P0(), m.i0));
        r += t;
    }
    return r;
}

inline bool commutes_with_F(const DiffOp& A) { return diffop_commutator(op_F(), A).is_zero(); }

// Right division by F: the unique A' free of Dt with A - A' = G o F.
// Eliminates highest Dt powers first; terminates because the Dt coefficient
// of F is the constant 1.
struct ReduceModFResult {
    DiffOp reduced;   // A'
    DiffOp quotient;  // G
};

inline ReduceModFResult reduce_mod_F_full(const DiffOp& A) {
    DiffOp rem = A, quot;
    while (rem.dt_order() > 0) {
        // highest Dt-power term (map order puts it at neither end; scan)
        DMulti top{};
        bool found = false;
        for (const auto& [m, c] : rem.terms()) {
            (void)c;
            if (m.dt == 0) continue;
            if (!found || m.dt > top.dt || (m.dt == top.dt && DMultiLess{}(top, m))) {
                top = m;
                found = true;
            }
        }
        if (!found) break;
        DiffOp g = DiffOp::derivative(top.dt - 1, top.dx, top.dy, rem.coeff(top));
        quot += g;
        rem -= compose(g, op_F());
    }
    return {rem, quot};
}

inline DiffOp reduce_mod_F(const DiffOp& A) { return reduce_mod_F_full(A).reduced; }

// ---- Structure constants of the essential Lie invariance algebra ----

// Basis order: Pt, D, K, P3, P2, P1, P0, I. The scalar operator -1 realizes I.
inline const std::vector<std::string>& lie_basis_names() {
    static const std::vector<std::string> n = {"Pt", "D", "K", "P3", "P2", "P1", "P0", "I"};
    return n;
}

inline const std::vector<DiffOp>& lie_basis_ops() {
    static const std::vector<DiffOp> v = {
        ops::Pt(), ops::D(),  ops::K(),  ops::P3(),
        ops::P2(), ops::P1(), ops::P0(), DiffOp::from_poly(Poly::constant(Rational(-1)))};
    return v;
}

// Nonzero commutation relations [e_i, e_j] = sum c_k e_k, i < j, from the
// essential Lie invariance algebra.
inline const std::map<std::pair<int, int>, std::vector<std::pair<Rational, int>>>&
lie_structure_table() {
    enum { iPt = 0, iD, iK, iP3, iP2, iP1, iP0, iI };
    static const std::map<std::pair<int, int>, std::vector<std::pair<Rational, int>>> t = {
        {{iPt, iD}, {{Rational(2), iPt}}},  {{iPt, iK}, {{Rational(1), iD}}},
        {{iD, iK}, {{Rational(2), iK}}},    {{iPt, iP3}, {{Rational(3), iP2}}},
        {{iPt, iP2}, {{Rational(2), iP1}}}, {{iPt, iP1}, {{Rational(1), iP0}}},
        {{iD, iP3}, {{Rational(3), iP3}}},  {{iD, iP2}, {{Rational(1), iP2}}},
        {{iD, iP1}, {{Rational(-1), iP1}}}, {{iD, iP0}, {{Rational(-3), iP0}}},
        {{iK, iP2}, {{Rational(-1), iP3}}}, {{iK, iP1}, {{Rational(-2), iP2}}},
        {{iK, iP0}, {{Rational(-3), iP1}}}, {{iP1, iP2}, {{Rational(-1), iI}}},
        {{iP0, iP3}, {{Rational(3), iI}}},
    };
    return t;
}

struct StructureCheckEntry {
    int i, j;
    bool ok;
    bool nonzero;  // expected commutator nonzero
};

struct StructureCheckReport {
    std::vector<StructureCheckEntry> entries;
    size_t nonzero_count = 0;
    bool all_ok = true;
};

// Verifies every pairwise commutator of the eight realized operators against
// the structure-constant table under Pj -> Pj, I -> -1.
inline StructureCheckReport structure_constants_check() {
    const auto& ops_v = lie_basis_ops();
    const auto& table = lie_structure_table();
    StructureCheckReport rep;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            DiffOp lhs = diffop_commutator(ops_v[i], ops_v[j]);
            DiffOp rhs;
            auto fill = [&](int a, int b, const Rational& sign) {
                auto it = table.find({a, b});
                if (it == table.end()) return;
                for (const auto& [c, k] : it->second) rhs += (sign * c) * ops_v[k];
            };
            fill(i, j, Rational(1));
            fill(j, i, Rational(-1));
            bool ok = (lhs == rhs);
            bool nz = !rhs.is_zero();
            rep.entries.push_back({i, j, ok, nz});
            if (nz && i < j) ++rep.nonzero_count;
            rep.all_ok = rep.all_ok && ok;
        }
    }
    return rep;
}

}  // namespace kolmosym
