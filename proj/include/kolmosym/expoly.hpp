#pragma once

#include <map>
#include <sstream>
#include <string>

#include "kolmosym/diffop.hpp"
#include "kolmosym/poly.hpp"

namespace kolmosym {

// Finite sum of e^{q_i} p_i with polynomial exponents q_i and prefactors p_i.
// Exponents are grouped by exact polynomial equality; e^{q+c} p and
// e^q (e^c p) are deliberately distinct forms, since e^c is irrational for
// nonzero rational c. The implemented operations never produce such mixed
// forms. The pure-polynomial case is the single summand with q = 0.
class ExpPoly {
public:
    using SummandMap = std::map<Poly, Poly, PolyLess>;  // exponent -> prefactor

    ExpPoly() = default;

    static ExpPoly zero() { return ExpPoly(); }
    static ExpPoly from_poly(const Poly& p) {
        ExpPoly e;
        if (!p.is_zero()) e.summands_[Poly(p.ring())] = p;
        return e;
    }
    static ExpPoly exp_term(const Poly& q, const Poly& p) {
        ExpPoly e;
        if (!p.is_zero()) e.summands_[q] = p;
        return e;
    }
    static ExpPoly constant(const Rational& c) { return from_poly(Poly::constant(c)); }
    static ExpPoly one() { return constant(Rational(1)); }

    const SummandMap& summands() const { return summands_; }
    bool is_zero() const { return summands_.empty(); }

    bool is_polynomial() const {
        return summands_.empty() ||
               (summands_.size() == 1 && summands_.begin()->first.is_zero());
    }
    Poly polynomial_part() const {
        if (summands_.empty()) return Poly();
        if (!is_polynomial()) throw std::domain_error("ExpPoly: not a pure polynomial");
        return summands_.begin()->second;
    }

    ExpPoly& operator+=(const ExpPoly& o) {
        for (const auto& [q, p] : o.summands_) add_summand(q, p);
        return *this;
    }
    ExpPoly& operator-=(const ExpPoly& o) {
        for (const auto& [q, p] : o.summands_) add_summand(q, -p);
        return *this;
    }
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    ExpPoly operator-() const {
        ExpPoly r;
        for (const auto& [q, p] : summands_) r.summands_[q] = -p;
        return r;
    }
    friend ExpPoly operator*(const Rational& c, const ExpPoly& e) {
        ExpPoly r;
        if (c.is_zero()) return r;
        for (const auto& [q, p] : e.summands_) r.summands_[q] = c * p;
        return r;
    }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
        ExpPoly r;
        for (const auto& [qa, pa] : a.summands_)
            for (const auto& [qb, pb] : b.summands_) r.add_summand(qa + qb, pa * pb);
        return r;
    }
    ExpPoly& operator*=(const ExpPoly& o) { return *this = *this * o; }

    friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
        return a.summands_ == b.summands_;
    }
    friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

    // d/dv (e^q p) = e^q (q_v p + p_v)
    ExpPoly diff(size_t v) const {
        ExpPoly r;
        for (const auto& [q, p] : summands_) r.add_summand(q, q.diff(v) * p + p.diff(v));
        return r;
    }

    // Substitute variables in both exponents and prefactors.
    ExpPoly subst(const std::map<std::string, Poly>& assignments) const {
        ExpPoly r;
        for (const auto& [q, p] : summands_)
            r.add_summand(q.subst(assignments), p.subst(assignments));
        return r;
    }

    // Canonical text: "exp(<poly>)*(<poly>)", pure polynomials written bare,
    // summands ordered by exponent polynomial.
    std::string str() const {
        if (summands_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [q, p] : summands_) {
            if (!first) os << " + ";
            first = false;
            if (q.is_zero())
                os << p.str();
            else
                os << "exp(" << q.str() << ")*(" << p.str() << ")";
        }
        return os.str();
    }

    void add_summand(const Poly& q, const Poly& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = summands_.try_emplace(q, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) summands_.erase(it);
        }
    }

private:
    SummandMap summands_;
};

// Exact application of a differential operator; the class is closed under
// the action.
inline ExpPoly apply_op(const DiffOp& A, const ExpPoly& u) {
    ExpPoly r;
    for (const auto& [m, coeff] : A.terms()) {
        ExpPoly d = u;
        for (uint32_t i = 0; i < m.dt; ++i) d = d.diff(0);
        for (uint32_t i = 0; i < m.dx; ++i) d = d.diff(1);
        for (uint32_t i = 0; i < m.dy; ++i) d = d.diff(2);
        r += ExpPoly::from_poly(coeff) * d;
    }
    return r;
}

// F u; u solves the equation iff the residual is zero.
inline ExpPoly residual(const ExpPoly& u) { return apply_op(op_F(), u); }

}  // namespace kolmosym
