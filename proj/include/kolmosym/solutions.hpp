#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kolmosym/expoly.hpp"
#include "kolmosym/matrix.hpp"
#include "kolmosym/named.hpp"

namespace kolmosym {

// ---- Polynomial solution spaces ----

// The (n+1)(n+2)/2 solutions (P3)^k (P2)^l 1 with k+l <= n, ascending k+l
// then ascending k. Every element has zero residual; the family is linearly
// independent.
inline std::vector<ExpPoly> poly_solution_basis(uint32_t n) {
    // seed column: (P2)^l 1, then apply P3 repeatedly
    std::vector<std::vector<ExpPoly>> table;  // table[k][l] = (P3)^k (P2)^l 1
    std::vector<ExpPoly> row = {ExpPoly::one()};
    for (uint32_t l = 1; l <= n; ++l) row.push_back(apply_op(ops::P2(), row.back()));
    table.push_back(row);
    for (uint32_t k = 1; k <= n; ++k) {
        std::vector<ExpPoly> next;
        for (uint32_t l = 0; l + k <= n; ++l)
            next.push_back(apply_op(ops::P3(), table[k - 1][l]));
        table.push_back(next);
    }
    std::vector<ExpPoly> out;
    for (uint32_t d = 0; d <= n; ++d)
        for (uint32_t k = 0; k <= d; ++k) out.push_back(table[k][d - k]);
    return out;
}

// Particular solution of F u = t^r (P3)^i (P2)^j 1, namely
// u = (r+1)^{-1} t^{r+1} (P3)^i (P2)^j 1.
inline ExpPoly particular_inhom(uint32_t i, uint32_t j, uint32_t r) {
    ExpPoly h = ExpPoly::one();
    for (uint32_t a = 0; a < j; ++a) h = apply_op(ops::P2(), h);
    for (uint32_t a = 0; a < i; ++a) h = apply_op(ops::P3(), h);
    Poly tpow = Poly::variable("t").pow(r + 1);
    return Rational(1, static_cast<long>(r) + 1) * (ExpPoly::from_poly(tpow) * h);
}

// ---- Point-symmetry group action, gamma = 0 stratum ----

// Parameters of the gamma = 0 stratum with delta = 1/alpha (so that
// alpha*delta - beta*gamma = 1). exp_shift is an additive rational constant
// in the exponent of the multiplier; the identity has shift 0. It is needed
// for exact closure of the stratum under composition: composing two
// parameter tuples produces a constant in the exponent that cannot be
// folded into sigma without leaving the rationals.
struct GroupParams {
    Rational alpha{1}, beta{0};
    Rational l0{0}, l1{0}, l2{0}, l3{0};
    Rational sigma{1};
    Rational exp_shift{0};

    void validate() const {
        if (alpha.is_zero()) throw std::domain_error("GroupParams: alpha must be nonzero");
        if (sigma.is_zero()) throw std::domain_error("GroupParams: sigma must be nonzero");
    }
    static GroupParams identity() { return GroupParams{}; }
};

namespace detail {

// Substitution target triple (T, X, Y) of the transformed arguments.
struct GroupSubst {
    Poly T, X, Y;
};

inline GroupSubst group_subst(const GroupParams& g) {
    const Poly t = Poly::variable("t"), x = Poly::variable("x"), y = Poly::variable("y");
    // delta = 1/alpha
    const Rational inv_delta = g.alpha;
    Poly xhat = x + Rational(3) * g.l3 * (t * t) + Rational(2) * g.l2 * t +
                Poly::constant(g.l1);
    Poly yhat = y + g.l3 * (t * t * t) + g.l2 * (t * t) + g.l1 * t + Poly::constant(g.l0);
    GroupSubst s;
    s.T = (g.alpha * t + Poly::constant(g.beta)) * inv_delta;
    s.X = xhat * inv_delta;
    s.Y = yhat * rational_pow(inv_delta, 3);
    return s;
}

// Exponent polynomial of the solution-generation multiplier:
// l2*x - 3*l3*(y - t*x) + 3*l3^2*t^3 + 3*l3*l2*t^2 + l2^2*t (+ shift).
inline Poly group_exponent(const GroupParams& g) {
    const Poly t = Poly::variable("t"), x = Poly::variable("x"), y = Poly::variable("y");
    Poly e = g.l2 * x - Rational(3) * g.l3 * (y - t * x);
    e += Rational(3) * (g.l3 * g.l3) * (t * t * t);
    e += Rational(3) * (g.l3 * g.l2) * (t * t);
    e += (g.l2 * g.l2) * t;
    e += Poly::constant(g.exp_shift);
    return e;
}

}  // namespace detail

// New solution from a known one under the gamma = 0 point symmetries:
//   u = sigma^{-1} delta^{-2} e^{E} h(T, X, Y)
// with polynomial substitutions; exact, and residual-zero preserving.
inline ExpPoly group_act(const GroupParams& g, const ExpPoly& h) {
    g.validate();
    auto s = detail::group_subst(g);
    std::map<std::string, Poly> m = {{"t", s.T}, {"x", s.X}, {"y", s.Y}};
    ExpPoly transformed = h.subst(m);
    Rational scale = (Rational(1) / g.sigma) * (g.alpha * g.alpha);  // delta^{-2} = alpha^2
    ExpPoly mult = ExpPoly::exp_term(detail::group_exponent(g), Poly::constant(scale));
    return mult * transformed;
}

// Composition in action order: group_act(compose(g2, g1), h) equals
// group_act(g2, group_act(g1, h)). Derived symbolically from the composed
// substitutions, with consistency checks on the stratum shape.
inline GroupParams group_compose(const GroupParams& g2, const GroupParams& g1) {
    g1.validate();
    g2.validate();
    auto s1 = detail::group_subst(g1);
    auto s2 = detail::group_subst(g2);
    std::map<std::string, Poly> m2 = {{"t", s2.T}, {"x", s2.X}, {"y", s2.Y}};
    // inner spatial map of the composed action: Phi1 o Phi2
    Poly T = s1.T.subst(m2), X = s1.X.subst(m2), Y = s1.Y.subst(m2);

    const Poly t = Poly::variable("t"), x = Poly::variable("x"), y = Poly::variable("y");
    auto coeff_of = [](const Poly& p, std::initializer_list<uint32_t> exps) {
        Monomial m{std::vector<uint32_t>(exps)};
        return p.coeff(m);
    };

    GroupParams g;
    g.alpha = coeff_of(X, {0, 1, 0});
    if (g.alpha.is_zero()) throw std::domain_error("group_compose: degenerate composition");
    Rational inv_alpha = Rational(1) / g.alpha;
    g.l3 = coeff_of(X, {2, 0, 0}) * inv_alpha / Rational(3);
    g.l2 = coeff_of(X, {1, 0, 0}) * inv_alpha / Rational(2);
    g.l1 = coeff_of(X, {0, 0, 0}) * inv_alpha;
    g.l0 = coeff_of(Y, {0, 0, 0}) * rational_pow(inv_alpha, 3);
    g.beta = coeff_of(T, {0, 0, 0}) * inv_alpha;
    g.sigma = g1.sigma * g2.sigma;
    auto s = detail::group_subst(g);
    if (s.T != T || s.X != X || s.Y != Y)
        throw std::domain_error("group_compose: composition left the gamma = 0 stratum");

    // exponent: E2 + E1 o Phi2 must match the parameter shape up to a constant
    Poly e_raw = detail::group_exponent(g2) + detail::group_exponent(g1).subst(m2);
    g.exp_shift = Rational(0);
    Poly diff = e_raw - detail::group_exponent(g);
    if (!diff.is_constant())
        throw std::domain_error("group_compose: non-constant exponent defect");
    g.exp_shift = diff.constant_value();
    return g;
}

// ---- Finite-dimensional restrictions and kernel decompositions ----

// Coordinates of exp-polynomials: one slot per (exponent, monomial) pair.
class ExpPolyCoords {
public:
    void collect(const ExpPoly& e) {
        for (const auto& [q, p] : e.summands())
            for (const auto& [m, c] : p.terms()) {
                (void)c;
                index_.try_emplace(Key{q, m}, 0);
            }
    }
    void freeze() {
        size_t i = 0;
        for (auto& [k, v] : index_) v = i++;
        frozen_ = true;
    }
    size_t dim() const { return index_.size(); }
    // nullopt when e uses a coordinate outside the frozen space
    std::optional<std::vector<Rational>> coords(const ExpPoly& e) const {
        std::vector<Rational> v(index_.size());
        for (const auto& [q, p] : e.summands())
            for (const auto& [m, c] : p.terms()) {
                auto it = index_.find(Key{q, m});
                if (it == index_.end()) return std::nullopt;
                v[it->second] = c;
            }
        return v;
    }

private:
    struct Key {
        Poly q;
        Monomial m;
    };
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            PolyLess pl;
            if (pl(a.q, b.q)) return true;
            if (pl(b.q, a.q)) return false;
            return GrlexLess{}(a.m, b.m);
        }
    };
    std::map<Key, size_t, KeyLess> index_;
    bool frozen_ = false;
};

// An operator restricted to finite spans: matrix columns are the exact
// coordinates of the operator applied to each source element in the target
// basis. Construction fails if an image leaves the target span.
struct RestrictedOp {
    std::vector<ExpPoly> src, tgt;
    MatrixQ matrix;  // tgt.size() x src.size()
};

inline RestrictedOp restricted_matrix(const DiffOp& A, const std::vector<ExpPoly>& src,
                                      const std::vector<ExpPoly>& tgt) {
    std::vector<ExpPoly> images;
    images.reserve(src.size());
    for (const auto& u : src) images.push_back(apply_op(A, u));

    ExpPolyCoords coords;
    for (const auto& u : tgt) coords.collect(u);
    coords.freeze();

    MatrixQ tmat(coords.dim(), tgt.size());
    for (size_t j = 0; j < tgt.size(); ++j) {
        auto c = coords.coords(tgt[j]);
        for (size_t i = 0; i < coords.dim(); ++i) tmat.at(i, j) = (*c)[i];
    }

    RestrictedOp r;
    r.src = src;
    r.tgt = tgt;
    r.matrix = MatrixQ(tgt.size(), src.size());
    for (size_t j = 0; j < images.size(); ++j) {
        auto c = coords.coords(images[j]);
        std::optional<std::vector<Rational>> sol;
        if (c) sol = tmat.solve(*c);
        if (!sol)
            throw std::domain_error("restricted_matrix: image of source element #" +
                                    std::to_string(j) + " is outside the target span");
        for (size_t i = 0; i < tgt.size(); ++i) r.matrix.at(i, j) = (*sol)[i];
    }
    return r;
}

// Coordinates of e in the basis `basis` (ambient coordinate map `coords`),
// or nullopt if outside the span.
inline std::optional<std::vector<Rational>> restricted_coords(const std::vector<ExpPoly>& basis,
                                                              const ExpPolyCoords& coords,
                                                              const ExpPoly& e) {
    MatrixQ m(coords.dim(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        auto c = coords.coords(basis[j]);
        if (!c) return std::nullopt;
        for (size_t i = 0; i < coords.dim(); ++i) m.at(i, j) = (*c)[i];
    }
    auto ec = coords.coords(e);
    if (!ec) return std::nullopt;
    return m.solve(*ec);
}

// ---- ker A^r = directsum B^i ker A, within polynomial-solution truncations ----

struct KernelPowerReport {
    std::string a_name, b_name;
    uint32_t r = 0, n = 0;
    uint32_t degree_shift = 0;          // d: B raises solution degree by d
    bool containment_ok = true;         // B^i(ker A cap P_{N-di}) in ker A^{i+1}
    bool direct_sum_ok = true;          // the image sum is direct
    bool dimension_match = true;        // dim ker A^r = sum of image dimensions
    size_t lhs_dim = 0;
    std::vector<size_t> image_dims;
    bool ok() const { return containment_ok && direct_sum_ok && dimension_match; }
};

// Valid pairs: (P0, P3) with [A,B] = -3 and (P1, P2) with [A,B] = 1; degree
// shifts d = 2 and d = 1 respectively (B raises the total degree of
// polynomial solutions by d; asserted on the basis).
inline KernelPowerReport kernel_power_check(const std::string& a_name, const std::string& b_name,
                                            uint32_t r, uint32_t n) {
    DiffOp A, B;
    uint32_t d = 0;
    if (a_name == "P0" && b_name == "P3") {
        A = ops::P0();
        B = ops::P3();
        d = 2;
    } else if (a_name == "P1" && b_name == "P2") {
        A = ops::P1();
        B = ops::P2();
        d = 1;
    } else {
        throw std::domain_error("kernel_power_check: unsupported pair (" + a_name + ", " +
                                b_name + ")");
    }
    if (r < 1) throw std::domain_error("kernel_power_check: r must be >= 1");

    // polynomial solutions of total degree <= N (degree of (P3)^k (P2)^l 1 is 2k+l)
    auto solution_space = [&](uint32_t cap) {
        std::vector<ExpPoly> basis;
        for (uint32_t k = 0; 2 * k <= cap; ++k)
            for (uint32_t l = 0; 2 * k + l <= cap; ++l) {
                ExpPoly h = ExpPoly::one();
                for (uint32_t a = 0; a < l; ++a) h = apply_op(ops::P2(), h);
                for (uint32_t a = 0; a < k; ++a) h = apply_op(ops::P3(), h);
                basis.push_back(h);
            }
        return basis;
    };

    KernelPowerReport rep;
    rep.a_name = a_name;
    rep.b_name = b_name;
    rep.r = r;
    rep.n = n;
    rep.degree_shift = d;

    std::vector<ExpPoly> vn = solution_space(n);
    RestrictedOp a_on_vn = restricted_matrix(A, vn, vn);
    rep.lhs_dim = a_on_vn.matrix.pow(r).nullspace().size();

    ExpPolyCoords coords;
    for (const auto& u : vn) coords.collect(u);
    coords.freeze();

    std::vector<std::vector<Rational>> all_images;  // coordinates in the vn basis
    for (uint32_t i = 0; i < r; ++i) {
        size_t before = all_images.size();
        if (d * i <= n) {
            std::vector<ExpPoly> vsub = solution_space(n - d * i);
            RestrictedOp a_sub = restricted_matrix(A, vsub, vsub);
            auto ker = a_sub.matrix.nullspace();
            for (const auto& kv : ker) {
                // element of ker A inside P_{N-di}, pushed up by B^i
                ExpPoly e;
                for (size_t j = 0; j < vsub.size(); ++j)
                    if (!kv[j].is_zero()) e += kv[j] * vsub[j];
                for (uint32_t b = 0; b < i; ++b) e = apply_op(B, e);
                auto c = coords.coords(e);
                if (!c) {
                    rep.containment_ok = false;
                    continue;
                }
                // membership in ker A^{i+1}: solve for coordinates in vn first
                auto vcoords = restricted_coords(vn, coords, e);
                if (!vcoords) {
                    rep.containment_ok = false;
                    continue;
                }
                auto img = a_on_vn.matrix.pow(i + 1).apply(*vcoords);
                for (const auto& val : img)
                    if (!val.is_zero()) rep.containment_ok = false;
                all_images.push_back(*vcoords);
            }
        }
        rep.image_dims.push_back(all_images.size() - before);
    }

    // directness and matched dimensions
    MatrixQ stack(all_images.size(), vn.size());
    for (size_t i = 0; i < all_images.size(); ++i)
        for (size_t j = 0; j < vn.size(); ++j) stack.at(i, j) = all_images[i][j];
    size_t total_rank = stack.rank();
    size_t dim_sum = 0;
    for (auto dms : rep.image_dims) dim_sum += dms;
    rep.direct_sum_ok = (total_rank == dim_sum);
    rep.dimension_match = (rep.lhs_dim == dim_sum);
    return rep;
}

// ---- ker P(A) = directsum ker (A - lambda_i)^{k_i} on a restricted operator ----

struct FactorKernelReport {
    size_t lhs_dim = 0;
    std::vector<size_t> factor_dims;
    bool containment_ok = true;
    bool direct_sum_ok = true;
    bool dimension_match = true;
    bool ok() const { return containment_ok && direct_sum_ok && dimension_match; }
};

inline FactorKernelReport polynomial_factor_kernel_check(
    const MatrixQ& A, const std::vector<std::pair<Rational, uint32_t>>& roots) {
    if (A.rows() != A.cols())
        throw std::domain_error("polynomial_factor_kernel_check: matrix must be square");
    const size_t n = A.rows();
    MatrixQ pa = MatrixQ::identity(n);
    std::vector<MatrixQ> factors;
    for (const auto& [lambda, mult] : roots) {
        MatrixQ shifted = A + (-lambda) * MatrixQ::identity(n);
        MatrixQ f = shifted.pow(mult);
        factors.push_back(f);
        pa = pa * f;
    }

    FactorKernelReport rep;
    auto lhs_kernel = pa.nullspace();
    rep.lhs_dim = lhs_kernel.size();

    std::vector<std::vector<Rational>> all;
    for (const auto& f : factors) {
        auto ker = f.nullspace();
        rep.factor_dims.push_back(ker.size());
        for (const auto& v : ker) {
            auto img = pa.apply(v);
            for (const auto& val : img)
                if (!val.is_zero()) rep.containment_ok = false;
            all.push_back(v);
        }
    }
    MatrixQ stack(all.size(), n);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < n; ++j) stack.at(i, j) = all[i][j];
    size_t total = 0;
    for (auto dsz : rep.factor_dims) total += dsz;
    rep.direct_sum_ok = (stack.rank() == total);
    rep.dimension_match = (rep.lhs_dim == total);
    return rep;
}

}  // namespace kolmosym
