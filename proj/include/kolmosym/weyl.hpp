#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kolmosym/rational.hpp"

namespace kolmosym {

// Exponents of the normal-ordered monomial (P3)^i3 (P2)^i2 (P1)^i1 (P0)^i0.
struct PMonomial {
    uint32_t i3 = 0, i2 = 0, i1 = 0, i0 = 0;

    uint32_t degree() const { return i3 + i2 + i1 + i0; }
    // Grading weight m: P3 and P2 raise, P1 and P0 lower.
    int weight() const {
        return static_cast<int>(i3) + static_cast<int>(i2) - static_cast<int>(i1) -
               static_cast<int>(i0);
    }
    std::array<uint32_t, 4> tuple() const { return {i3, i2, i1, i0}; }

    friend bool operator==(const PMonomial& a, const PMonomial& b) {
        return a.tuple() == b.tuple();
    }
};

// Graded-lex on (i3, i2, i1, i0).
struct PMonomialLess {
    bool operator()(const PMonomial& a, const PMonomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.tuple() < b.tuple();
    }
};

// One term of a reordered pair power: coefficient * A^a_rem B^b_rem.
struct ReorderTerm {
    uint32_t a_rem, b_rem;
    Rational coeff;
};

// Normal ordering of B^b A^a for a pair with central commutator [A,B] = c:
//   B^b A^a = sum_k k! C(b,k) C(a,k) (-c)^k A^(a-k) B^(b-k).
inline std::vector<ReorderTerm> pair_reorder(uint32_t b_exp, uint32_t a_exp, const Rational& c) {
    std::vector<ReorderTerm> out;
    uint32_t kmax = std::min(a_exp, b_exp);
    if (c.is_zero()) kmax = 0;
    out.reserve(kmax + 1);
    for (uint32_t k = 0; k <= kmax; ++k) {
        Rational coeff = factorial_q(k) * binomial_q(b_exp, k) * binomial_q(a_exp, k) *
                         rational_pow(-c, k);
        out.push_back({a_exp - k, b_exp - k, coeff});
    }
    return out;
}

// Element of the algebra generated by P3, P2, P1, P0 with [P3,P0] = 3,
// [P1,P2] = 1 and the other four commutators zero, stored in the
// normal-ordered monomial basis. The presentation decouples into the two
// independent pairs (P3,P0) and (P2,P1), so products need no generic
// rewriting machinery.
class WeylElem {
public:
    using TermMap = std::map<PMonomial, Rational, PMonomialLess>;

    WeylElem() = default;

    static WeylElem zero() { return WeylElem(); }
    static WeylElem constant(const Rational& c) {
        WeylElem e;
        if (!c.is_zero()) e.terms_[PMonomial{}] = c;
        return e;
    }
    static WeylElem one() { return constant(Rational(1)); }
    static WeylElem monomial(const PMonomial& m, const Rational& c = Rational(1)) {
        WeylElem e;
        if (!c.is_zero()) e.terms_[m] = c;
        return e;
    }
    static WeylElem p3() { return monomial(PMonomial{1, 0, 0, 0}); }
    static WeylElem p2() { return monomial(PMonomial{0, 1, 0, 0}); }
    static WeylElem p1() { return monomial(PMonomial{0, 0, 1, 0}); }
    static WeylElem p0() { return monomial(PMonomial{0, 0, 0, 1}); }
    // generator(j) = P^j
    static WeylElem generator(unsigned j) {
        switch (j) {
            case 0: return p0();
            case 1: return p1();
            case 2: return p2();
            case 3: return p3();
            default: throw std::domain_error("WeylElem: generator index out of range");
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int degree() const {
        if (terms_.empty()) return -0x7fffffff;
        return static_cast<int>(terms_.rbegin()->first.degree());
    }

    Rational coeff(const PMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("WeylElem: not a constant");
        return terms_.begin()->second;
    }

    WeylElem& operator+=(const WeylElem& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    WeylElem& operator-=(const WeylElem& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend WeylElem operator+(WeylElem a, const WeylElem& b) { return a += b; }
    friend WeylElem operator-(WeylElem a, const WeylElem& b) { return a -= b; }
    WeylElem operator-() const {
        WeylElem r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend WeylElem operator*(const Rational& c, const WeylElem& e) {
        WeylElem r;
        if (c.is_zero()) return r;
        for (const auto& [m, ec] : e.terms_) r.terms_[m] = c * ec;
        return r;
    }

    // Normal-ordered product. The P0-block of the left factor passes the
    // P3-block of the right one ([P3,P0] = 3), and the P1-block passes the
    // P2-block ([P2,P1] = -1); everything else commutes.
    friend WeylElem operator*(const WeylElem& a, const WeylElem& b) {
        WeylElem r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Rational cab = ca * cb;
                auto swaps30 = pair_reorder(ma.i0, mb.i3, Rational(3));
                auto swaps21 = pair_reorder(ma.i1, mb.i2, Rational(-1));
                for (const auto& s : swaps30)
                    for (const auto& t : swaps21) {
                        PMonomial m{ma.i3 + s.a_rem, ma.i2 + t.a_rem, t.b_rem + mb.i1,
                                    s.b_rem + mb.i0};
                        r.add_term(m, cab * s.coeff * t.coeff);
                    }
            }
        return r;
    }
    WeylElem& operator*=(const WeylElem& o) { return *this = *this * o; }

    friend bool operator==(const WeylElem& a, const WeylElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const WeylElem& a, const WeylElem& b) { return !(a == b); }

    WeylElem pow(unsigned e) const {
        WeylElem r = one(), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    // Splits by grading weight of each monomial; the parts sum back to *this.
    std::map<int, WeylElem> grading_decompose() const {
        std::map<int, WeylElem> parts;
        for (const auto& [m, c] : terms_) parts[m.weight()].add_term(m, c);
        return parts;
    }
    bool is_homogeneous(int* weight_out = nullptr) const {
        if (terms_.empty()) return true;
        int w = terms_.begin()->first.weight();
        for (const auto& [m, c] : terms_) {
            (void)c;
            if (m.weight() != w) return false;
        }
        if (weight_out) *weight_out = w;
        return true;
    }

    // Canonical text, e.g. "P3^2*P0^2 - 6*P3*P2*P1*P0 + 3*P2*P1".
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
            bool printed = false;
            if (!a.is_one() || m.degree() == 0) {
                os << a.str();
                printed = true;
            }
            const char* names[4] = {"P3", "P2", "P1", "P0"};
            uint32_t exps[4] = {m.i3, m.i2, m.i1, m.i0};
            for (int i = 0; i < 4; ++i) {
                if (!exps[i]) continue;
                if (printed) os << "*";
                printed = true;
                os << names[i];
                if (exps[i] > 1) os << "^" << exps[i];
            }
        }
        return os.str();
    }

    void add_term(const PMonomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    TermMap terms_;
};

inline WeylElem weyl_commutator(const WeylElem& a, const WeylElem& b) { return a * b - b * a; }

inline bool centralizer_check(const WeylElem& a, const WeylElem& b) {
    return weyl_commutator(a, b).is_zero();
}

// ---- Dimension formulas for the order filtration ----

// dim of the subspace of differential operators of order <= n.
inline long dim_ord_closed(long n) {
    if (n < 0) return 0;
    if (n % 3 == 1) return (n + 2) * (n + 2) * (n * n + 4 * n + 5) / 18;
    return (n + 1) * (n + 3) * (n * n + 4 * n + 6) / 18;
}

// dim of the order-n layer (quotient by order <= n-1).
inline long dim_layer_closed(long n) {
    if (n < 0) return 0;
    switch (n % 3) {
        case 0: return (2 * n + 3) * (n * n + 3 * n + 3) / 9;
        case 1: return (n + 2) * (2 * n * n + 5 * n + 5) / 9;
        default: return (n + 1) * (2 * n * n + 7 * n + 8) / 9;
    }
}

// Same dimension as a binomial sum (independent route).
inline long dim_ord_sum(long n) {
    if (n < 0) return 0;
    auto c3 = [](long m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; };
    long s = 0;
    for (long k = 0; k <= n; ++k) s += c3(k + 3);
    for (long k = 1; k <= n / 3; ++k) s += c3(n - 3 * (k - 1));
    return s;
}

// All monomials with total degree <= n, ascending graded-lex.
inline std::vector<PMonomial> monomials_up_to_degree(uint32_t n) {
    std::vector<PMonomial> out;
    for (uint32_t d = 0; d <= n; ++d)
        for (uint32_t i3 = 0; i3 <= d; ++i3)
            for (uint32_t i2 = 0; i3 + i2 <= d; ++i2)
                for (uint32_t i1 = 0; i3 + i2 + i1 <= d; ++i1)
                    out.push_back(PMonomial{i3, i2, i1, d - i3 - i2 - i1});
    std::sort(out.begin(), out.end(), [](const PMonomial& a, const PMonomial& b) {
        return PMonomialLess{}(a, b);
    });
    return out;
}

}  // namespace kolmosym
