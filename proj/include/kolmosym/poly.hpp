#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "kolmosym/rational.hpp"

namespace kolmosym {

// Ambient polynomial ring descriptor: an ordered list of variable names.
// The main ring is (t, x, y); the arity is generic so other engines can use
// their own rings.
class Ring {
public:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static const std::shared_ptr<const Ring>& txy() {
        static const auto r = std::make_shared<const Ring>(std::vector<std::string>{"t", "x", "y"});
        return r;
    }

    size_t arity() const { return vars_.size(); }
    const std::string& var_name(size_t i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }

    // Index of a variable name, or -1.
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Exponent vector; one slot per ring variable.
struct Monomial {
    std::vector<uint32_t> exps;

    Monomial() = default;
    explicit Monomial(size_t arity) : exps(arity, 0) {}
    explicit Monomial(std::vector<uint32_t> e) : exps(std::move(e)) {}

    uint32_t degree() const {
        uint32_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    bool is_constant() const {
        for (auto e : exps)
            if (e) return false;
        return true;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

// Graded-lexicographic order, first variable most significant in ties.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        uint32_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps < b.exps;  // lexicographic tie-break
    }
};

inline constexpr int kDegNegInf = -0x7fffffff;  // degree of the zero polynomial

// Exact multivariate polynomial with rational coefficients, canonical form
// (no stored zero terms). Immutable in spirit: operations return new values.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Poly() : ring_(Ring::txy()) {}
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly constant(const Rational& c, RingPtr ring = Ring::txy()) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_[Monomial(p.ring_->arity())] = c;
        return p;
    }
    static Poly variable(const std::string& name, RingPtr ring = Ring::txy()) {
        Poly p(std::move(ring));
        int i = p.ring_->var_index(name);
        if (i < 0) throw std::domain_error("Poly: unknown variable '" + name + "'");
        Monomial m(p.ring_->arity());
        m.exps[static_cast<size_t>(i)] = 1;
        p.terms_[m] = Rational(1);
        return p;
    }
    static Poly term(const Rational& c, const Monomial& m, RingPtr ring = Ring::txy()) {
        Poly p(std::move(ring));
        if (m.exps.size() != p.ring_->arity()) throw std::domain_error("Poly: bad monomial arity");
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int degree() const {
        if (terms_.empty()) return kDegNegInf;
        return static_cast<int>(terms_.rbegin()->first.degree());
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("Poly: not a constant");
        return terms_.begin()->second;
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += mb.exps[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r(p.ring_);
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }
    friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const {
        Poly r = constant(Rational(1), ring_), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    // Exact partial derivative with respect to variable index v.
    Poly diff(size_t v) const {
        if (v >= ring_->arity()) throw std::domain_error("Poly::diff: variable out of range");
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m.exps[v] == 0) continue;
            Monomial d = m;
            --d.exps[v];
            r.add_term(d, c * Rational(static_cast<long>(m.exps[v])));
        }
        return r;
    }
    Poly diff(const std::string& var) const {
        int i = ring_->var_index(var);
        if (i < 0) throw std::domain_error("Poly::diff: unknown variable '" + var + "'");
        return diff(static_cast<size_t>(i));
    }

    // Substitute each variable by a polynomial (identity for unlisted vars,
    // which requires the target ring to contain the variable by name).
    // All assigned polynomials must share one target ring.
    Poly subst(const std::map<std::string, Poly>& assignments) const {
        RingPtr target;
        for (const auto& [name, q] : assignments) {
            (void)name;
            if (!target)
                target = q.ring();
            else if (!same_ring(target, q.ring()))
                throw std::domain_error("Poly::subst: mixed target rings");
        }
        if (!target) target = ring_;

        std::vector<Poly> images;
        images.reserve(ring_->arity());
        for (size_t i = 0; i < ring_->arity(); ++i) {
            auto it = assignments.find(ring_->var_name(i));
            if (it != assignments.end())
                images.push_back(it->second);
            else
                images.push_back(variable(ring_->var_name(i), target));
        }

        Poly r(target);
        for (const auto& [m, c] : terms_) {
            Poly t = constant(c, target);
            for (size_t i = 0; i < m.exps.size(); ++i)
                if (m.exps[i]) t *= images[i].pow(m.exps[i]);
            r += t;
        }
        return r;
    }

    // Canonical text: terms in descending graded-lex order, e.g. "3*t*x^2 - 3*x*y".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (first) {
                if (a.sign() < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            first = false;
            bool printed_coeff = false;
            if (!a.is_one() || m.is_constant()) {
                os << a.str();
                printed_coeff = true;
            }
            bool first_var = !printed_coeff;
            for (size_t i = 0; i < m.exps.size(); ++i) {
                if (!m.exps[i]) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << ring_->var_name(i);
                if (m.exps[i] > 1) os << "^" << m.exps[i];
            }
        }
        return os.str();
    }

private:
    void check_ring(const Poly& o) const {
        if (!same_ring(ring_, o.ring_)) throw std::domain_error("Poly: ring mismatch");
    }
    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RingPtr ring_;
    TermMap terms_;
};

// Deterministic total order on polynomials of one ring (used to key maps).
struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const {
        auto ia = a.terms().rbegin(), ib = b.terms().rbegin();  // compare from leading term
        for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
            GrlexLess lt;
            if (lt(ia->first, ib->first)) return true;
            if (lt(ib->first, ia->first)) return false;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ib != b.terms().rend();
    }
};

}  // namespace kolmosym
