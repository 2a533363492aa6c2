#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kolmosym/rational.hpp"
#include "kolmosym/weyl.hpp"

namespace kolmosym {

// Exponent pair of a canonical basis monomial q^kappa p^lambda of W(n).
struct GWMonomial {
    std::vector<uint32_t> kappa, lambda;

    uint32_t degree() const {
        uint32_t d = 0;
        for (auto e : kappa) d += e;
        for (auto e : lambda) d += e;
        return d;
    }
    friend bool operator==(const GWMonomial& a, const GWMonomial& b) {
        return a.kappa == b.kappa && a.lambda == b.lambda;
    }
};

struct GWMonomialLess {
    bool operator()(const GWMonomial& a, const GWMonomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.kappa != b.kappa) return a.kappa < b.kappa;
        return a.lambda < b.lambda;
    }
};

// Element of the n-th Weyl algebra W(n) in the basis q^kappa p^lambda,
// with [p_i, q_j] = delta_ij. Cross-validation engine for the main algebra.
class GenWeylElem {
public:
    using TermMap = std::map<GWMonomial, Rational, GWMonomialLess>;

    explicit GenWeylElem(unsigned rank) : n_(rank) {}

    static GenWeylElem constant(unsigned rank, const Rational& c) {
        GenWeylElem e(rank);
        if (!c.is_zero()) e.terms_[e.unit_mono()] = c;
        return e;
    }
    static GenWeylElem one(unsigned rank) { return constant(rank, Rational(1)); }
    static GenWeylElem q(unsigned rank, unsigned i) {
        GenWeylElem e(rank);
        GWMonomial m = e.unit_mono();
        m.kappa.at(i) = 1;
        e.terms_[m] = Rational(1);
        return e;
    }
    static GenWeylElem p(unsigned rank, unsigned i) {
        GenWeylElem e(rank);
        GWMonomial m = e.unit_mono();
        m.lambda.at(i) = 1;
        e.terms_[m] = Rational(1);
        return e;
    }
    static GenWeylElem monomial(unsigned rank, const GWMonomial& m,
                                const Rational& c = Rational(1)) {
        GenWeylElem e(rank);
        if (m.kappa.size() != rank || m.lambda.size() != rank)
            throw std::domain_error("GenWeylElem: bad multiindex length");
        if (!c.is_zero()) e.terms_[m] = c;
        return e;
    }

    unsigned rank() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        if (terms_.empty()) return -0x7fffffff;
        int d = 0;
        for (const auto& [m, c] : terms_) {
            (void)c;
            d = std::max(d, static_cast<int>(m.degree()));
        }
        return d;
    }

    Rational coeff(const GWMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    GenWeylElem& operator+=(const GenWeylElem& o) {
        check_rank(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    GenWeylElem& operator-=(const GenWeylElem& o) {
        check_rank(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend GenWeylElem operator+(GenWeylElem a, const GenWeylElem& b) { return a += b; }
    friend GenWeylElem operator-(GenWeylElem a, const GenWeylElem& b) { return a -= b; }
    friend GenWeylElem operator*(const Rational& c, const GenWeylElem& e) {
        GenWeylElem r(e.n_);
        if (c.is_zero()) return r;
        for (const auto& [m, ec] : e.terms_) r.terms_[m] = c * ec;
        return r;
    }

    // Normal-ordered product: p^lambda q^kappa' is rewritten via
    //   sum_nu nu! C(lambda,nu) C(kappa',nu) q^(kappa'-nu) p^(lambda-nu).
    friend GenWeylElem operator*(const GenWeylElem& a, const GenWeylElem& b) {
        a.check_rank(b);
        GenWeylElem r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                std::vector<uint32_t> numax(a.n_);
                for (unsigned i = 0; i < a.n_; ++i)
                    numax[i] = std::min(ma.lambda[i], mb.kappa[i]);
                std::vector<uint32_t> nu(a.n_, 0);
                for (;;) {
                    Rational coeff = ca * cb;
                    for (unsigned i = 0; i < a.n_; ++i)
                        coeff *= factorial_q(nu[i]) * binomial_q(ma.lambda[i], nu[i]) *
                                 binomial_q(mb.kappa[i], nu[i]);
                    GWMonomial m;
                    m.kappa.resize(a.n_);
                    m.lambda.resize(a.n_);
                    for (unsigned i = 0; i < a.n_; ++i) {
                        m.kappa[i] = ma.kappa[i] + mb.kappa[i] - nu[i];
                        m.lambda[i] = ma.lambda[i] + mb.lambda[i] - nu[i];
                    }
                    r.add_term(m, coeff);
                    // advance the multi-index nu through the box [0, numax]
                    unsigned i = 0;
                    for (; i < a.n_; ++i) {
                        if (nu[i] < numax[i]) {
                            ++nu[i];
                            break;
                        }
                        nu[i] = 0;
                    }
                    if (i == a.n_) break;
                }
            }
        return r;
    }
    GenWeylElem& operator*=(const GenWeylElem& o) { return *this = *this * o; }

    friend bool operator==(const GenWeylElem& a, const GenWeylElem& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GenWeylElem& a, const GenWeylElem& b) { return !(a == b); }

    GenWeylElem pow(unsigned e) const {
        GenWeylElem r = one(n_), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

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
            for (unsigned i = 0; i < n_; ++i) {
                if (!m.kappa[i]) continue;
                if (printed) os << "*";
                printed = true;
                os << "q" << (i + 1);
                if (m.kappa[i] > 1) os << "^" << m.kappa[i];
            }
            for (unsigned i = 0; i < n_; ++i) {
                if (!m.lambda[i]) continue;
                if (printed) os << "*";
                printed = true;
                os << "p" << (i + 1);
                if (m.lambda[i] > 1) os << "^" << m.lambda[i];
            }
        }
        return os.str();
    }

    void add_term(const GWMonomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    GWMonomial unit_mono() const {
        GWMonomial m;
        m.kappa.assign(n_, 0);
        m.lambda.assign(n_, 0);
        return m;
    }
    void check_rank(const GenWeylElem& o) const {
        if (n_ != o.n_) throw std::domain_error("GenWeylElem: rank mismatch");
    }

    unsigned n_;
    TermMap terms_;
};

inline GenWeylElem gen_weyl_commutator(const GenWeylElem& a, const GenWeylElem& b) {
    return a * b - b * a;
}

// The closed commutator formula
//   [q^k p^l, q^k' p^l'] =
//     sum_nu nu! (C(k',nu)C(l,nu) - C(k,nu)C(l',nu)) q^(k+k'-nu) p^(l+l'-nu),
// evaluated directly; independent of the product-based route.
inline GenWeylElem gen_weyl_commutator_formula(unsigned rank, const GWMonomial& a,
                                               const GWMonomial& b) {
    GenWeylElem r(rank);
    std::vector<uint32_t> numax(rank);
    for (unsigned i = 0; i < rank; ++i)
        numax[i] = std::max(std::min(a.lambda[i], b.kappa[i]), std::min(b.lambda[i], a.kappa[i]));
    std::vector<uint32_t> nu(rank, 0);
    for (;;) {
        Rational c1(1), c2(1), fac(1);
        for (unsigned i = 0; i < rank; ++i) {
            fac *= factorial_q(nu[i]);
            c1 *= binomial_q(b.kappa[i], nu[i]) * binomial_q(a.lambda[i], nu[i]);
            c2 *= binomial_q(a.kappa[i], nu[i]) * binomial_q(b.lambda[i], nu[i]);
        }
        Rational coeff = fac * (c1 - c2);
        if (!coeff.is_zero()) {
            GWMonomial m;
            m.kappa.resize(rank);
            m.lambda.resize(rank);
            for (unsigned i = 0; i < rank; ++i) {
                m.kappa[i] = a.kappa[i] + b.kappa[i] - nu[i];
                m.lambda[i] = a.lambda[i] + b.lambda[i] - nu[i];
            }
            r.add_term(m, coeff);
        }
        unsigned i = 0;
        for (; i < rank; ++i) {
            if (nu[i] < numax[i]) {
                ++nu[i];
                break;
            }
            nu[i] = 0;
        }
        if (i == rank) break;
    }
    return r;
}

// Isomorphism onto W(2): P3 -> 3 p1, P2 -> q2, P1 -> p2, P0 -> q1.
inline GenWeylElem to_w2(const WeylElem& a) {
    const GenWeylElem P3 = Rational(3) * GenWeylElem::p(2, 0);
    const GenWeylElem P2 = GenWeylElem::q(2, 1);
    const GenWeylElem P1 = GenWeylElem::p(2, 1);
    const GenWeylElem P0 = GenWeylElem::q(2, 0);
    GenWeylElem r(2);
    for (const auto& [m, c] : a.terms()) {
        GenWeylElem t = GenWeylElem::constant(2, c);
        t *= P3.pow(m.i3);
        t *= P2.pow(m.i2);
        t *= P1.pow(m.i1);
        t *= P0.pow(m.i0);
        r += t;
    }
    return r;
}

// Inverse of to_w2: q1 -> P0, q2 -> P2, p1 -> (1/3) P3, p2 -> P1.
inline WeylElem from_w2(const GenWeylElem& a) {
    if (a.rank() != 2) throw std::domain_error("from_w2: rank must be 2");
    const WeylElem q1 = WeylElem::p0();
    const WeylElem q2 = WeylElem::p2();
    const WeylElem p1 = Rational(1, 3) * WeylElem::p3();
    const WeylElem p2 = WeylElem::p1();
    WeylElem r;
    for (const auto& [m, c] : a.terms()) {
        WeylElem t = WeylElem::constant(c);
        t *= q1.pow(m.kappa[0]);
        t *= q2.pow(m.kappa[1]);
        t *= p1.pow(m.lambda[0]);
        t *= p2.pow(m.lambda[1]);
        r += t;
    }
    return r;
}

}  // namespace kolmosym
