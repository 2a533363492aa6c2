#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <vector>

#include "kolmosym/poly.hpp"
#include "kolmosym/sparse.hpp"

namespace kolmosym {

// Brute-force oracle for the space of linear generalized symmetries of order
// <= n: polynomial ansatz eta^{kl}(t,x,y) of total degree <= degree_cap for
// k+l <= n, subject to the determining system
//   Delta_kl: F eta^{kl} - (k+1) eta^{k+1,l-1} - 2 d/dx eta^{k-1,l} = 0
// for k+l <= n+1, with eta^{kl} = 0 outside 0 <= k, 0 <= l, k+l <= n.
// Solved exactly as one sparse homogeneous linear system.
//
// The default cap 4n is sufficient: order-n symmetries realize operators of
// polynomial degree <= n + floor(n/3) whose coefficients have degree at most
// three times that. The cap is reported so stabilization under cap+1 can be
// tested.

struct DeterminingOptions {
    bool want_basis = false;
    std::function<bool()> deadline;  // true when the time budget expired
};

struct DeterminingResult {
    uint32_t n = 0;
    uint32_t degree_cap = 0;
    size_t unknowns = 0;
    size_t dimension = 0;
    bool complete = true;
    // basis[b] maps (k,l) to the coefficient polynomial eta^{kl}
    std::vector<std::map<std::pair<uint32_t, uint32_t>, Poly>> basis;
};

inline uint32_t determining_default_cap(uint32_t n) { return 4 * n; }

inline DeterminingResult solve_determining(uint32_t n, uint32_t degree_cap,
                                           const DeterminingOptions& opt = {}) {
    // monomial index for degree <= cap in (t, x, y)
    std::vector<Monomial> monos;
    for (uint32_t d = 0; d <= degree_cap; ++d)
        for (uint32_t a = 0; a <= d; ++a)
            for (uint32_t b = 0; a + b <= d; ++b)
                monos.push_back(Monomial(std::vector<uint32_t>{a, b, d - a - b}));
    std::map<std::vector<uint32_t>, size_t> mono_index;
    for (size_t i = 0; i < monos.size(); ++i) mono_index[monos[i].exps] = i;
    const size_t mcount = monos.size();

    // unknown blocks (k, l), k + l <= n
    std::vector<std::pair<uint32_t, uint32_t>> blocks;
    for (uint32_t s = 0; s <= n; ++s)
        for (uint32_t k = 0; k <= s; ++k) blocks.emplace_back(k, s - k);
    std::map<std::pair<uint32_t, uint32_t>, size_t> block_index;
    for (size_t i = 0; i < blocks.size(); ++i) block_index[blocks[i]] = i;

    auto col_of = [&](uint32_t k, uint32_t l, size_t mono) {
        return block_index.at({k, l}) * mcount + mono;
    };
    auto in_range = [&](int k, int l) {
        return k >= 0 && l >= 0 && static_cast<uint32_t>(k + l) <= n;
    };

    SparseSystemQ sys(blocks.size() * mcount);

    // Row group Delta_kl: for every result monomial t^a x^b y^c, collect the
    // unknown coefficients contributing to it.
    for (uint32_t s = 0; s <= n + 1; ++s) {
        for (uint32_t k = 0; k <= s; ++k) {
            uint32_t l = s - k;
            // rows indexed by result monomial
            std::map<size_t, SparseSystemQ::Row> rows;
            auto add = [&](const std::vector<uint32_t>& result_exps, size_t col, long coeff) {
                auto it = mono_index.find(result_exps);
                if (it == mono_index.end()) return;  // outside the capped space
                rows[it->second].emplace_back(col, Rational(coeff));
            };
            if (in_range(static_cast<int>(k), static_cast<int>(l))) {
                // F eta^{kl} = d/dt + x d/dy - d2/dx2 applied to each monomial
                for (size_t mi = 0; mi < mcount; ++mi) {
                    const auto& e = monos[mi].exps;
                    size_t col = col_of(k, l, mi);
                    if (e[0] > 0) add({e[0] - 1, e[1], e[2]}, col, static_cast<long>(e[0]));
                    if (e[2] > 0) add({e[0], e[1] + 1, e[2] - 1}, col, static_cast<long>(e[2]));
                    if (e[1] > 1)
                        add({e[0], e[1] - 2, e[2]}, col,
                            -static_cast<long>(e[1]) * static_cast<long>(e[1] - 1));
                }
            }
            if (in_range(static_cast<int>(k) + 1, static_cast<int>(l) - 1)) {
                // -(k+1) eta^{k+1, l-1}
                for (size_t mi = 0; mi < mcount; ++mi)
                    rows[mi].emplace_back(col_of(k + 1, l - 1, mi),
                                          Rational(-static_cast<long>(k + 1)));
            }
            if (in_range(static_cast<int>(k) - 1, static_cast<int>(l))) {
                // -2 d/dx eta^{k-1, l}
                for (size_t mi = 0; mi < mcount; ++mi) {
                    const auto& e = monos[mi].exps;
                    if (e[1] == 0) continue;
                    add({e[0], e[1] - 1, e[2]}, col_of(k - 1, l, mi),
                        -2 * static_cast<long>(e[1]));
                }
            }
            for (auto& [mi, row] : rows) {
                (void)mi;
                sys.add_row(std::move(row));
            }
        }
    }

    auto res = sys.eliminate(opt.want_basis, opt.deadline);

    DeterminingResult out;
    out.n = n;
    out.degree_cap = degree_cap;
    out.unknowns = blocks.size() * mcount;
    out.complete = res.complete;
    out.dimension = res.complete ? out.unknowns - res.rank : 0;
    if (opt.want_basis && res.complete) {
        for (const auto& v : res.kernel) {
            std::map<std::pair<uint32_t, uint32_t>, Poly> tuple;
            for (size_t bi = 0; bi < blocks.size(); ++bi) {
                Poly p;
                for (size_t mi = 0; mi < mcount; ++mi) {
                    const Rational& c = v[bi * mcount + mi];
                    if (!c.is_zero()) p += Poly::term(c, monos[mi]);
                }
                if (!p.is_zero()) tuple[blocks[bi]] = p;
            }
            out.basis.push_back(std::move(tuple));
        }
    }
    return out;
}

// Membership test used by regressions: does the characteristic tuple lie in
// the solution space of the determining system? Checked against the original
// equations directly (independent of the elimination path).
inline bool determining_residual_zero(uint32_t n,
                                      const std::map<std::pair<uint32_t, uint32_t>, Poly>& eta) {
    auto get = [&](int k, int l) -> Poly {
        if (k < 0 || l < 0 || static_cast<uint32_t>(k + l) > n) return Poly();
        auto it = eta.find({static_cast<uint32_t>(k), static_cast<uint32_t>(l)});
        return it == eta.end() ? Poly() : it->second;
    };
    const Poly x = Poly::variable("x");
    for (int s = 0; s <= static_cast<int>(n) + 1; ++s) {
        for (int k = 0; k <= s; ++k) {
            int l = s - k;
            Poly e = get(k, l);
            Poly delta = e.diff(size_t{0}) + x * e.diff(size_t{2}) - e.diff(size_t{1}).diff(size_t{1});
            delta -= Rational(k + 1) * get(k + 1, l - 1);
            delta -= Rational(2) * get(k - 1, l).diff(size_t{1});
            if (!delta.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace kolmosym
