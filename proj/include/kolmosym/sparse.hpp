#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "kolmosym/matrix.hpp"
#include "kolmosym/rational.hpp"

namespace kolmosym {

// Sparse exact Gaussian elimination for large, very sparse homogeneous
// systems (the determining-equation assembler produces rows with at most a
// handful of nonzeros). Pivots are chosen Markowitz-style: rows with fewest
// nonzeros first, then the column with the fewest occurrences. The kernel
// basis is canonicalized afterwards, so the pivot order does not leak into
// the output.
class SparseSystemQ {
public:
    using Row = std::vector<std::pair<size_t, Rational>>;  // sorted by column

    explicit SparseSystemQ(size_t ncols) : ncols_(ncols) {}

    size_t ncols() const { return ncols_; }
    size_t nrows() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }

    void add_row(Row r) {
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Row merged;
        for (auto& [c, v] : r) {
            if (v.is_zero()) continue;
            if (!merged.empty() && merged.back().first == c)
                merged.back().second += v;
            else
                merged.emplace_back(c, v);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& e) { return e.second.is_zero(); }),
                     merged.end());
        if (!merged.empty()) rows_.push_back(std::move(merged));
    }

    struct Result {
        size_t rank = 0;
        std::vector<std::vector<Rational>> kernel;  // canonical basis, if requested
        bool complete = true;                       // false when a budget expired
    };

    // deadline: optional predicate returning true when the time budget is
    // exhausted; elimination then stops early with complete = false.
    Result eliminate(bool want_kernel, const std::function<bool()>& deadline = {}) {
        std::vector<Row> work = rows_;
        std::vector<char> done(work.size(), 0);
        std::vector<size_t> col_count(ncols_, 0);
        for (const auto& r : work)
            for (const auto& [c, v] : r) {
                (void)v;
                ++col_count[c];
            }
        // col -> rows currently containing it
        std::vector<std::vector<size_t>> col_rows(ncols_);
        for (size_t i = 0; i < work.size(); ++i)
            for (const auto& [c, v] : work[i]) {
                (void)v;
                col_rows[c].push_back(i);
            }

        std::vector<std::pair<size_t, size_t>> pivot_seq;  // (row, col) in order
        std::vector<char> col_done(ncols_, 0);
        Result res;

        auto row_nnz = [&](size_t i) { return work[i].size(); };

        for (;;) {
            if (deadline && deadline()) {
                res.complete = false;
                break;
            }
            // pick the live row with fewest nonzeros (ties: lowest index)
            size_t best = work.size(), best_n = 0;
            for (size_t i = 0; i < work.size(); ++i) {
                if (done[i] || work[i].empty()) continue;
                size_t n = row_nnz(i);
                if (best == work.size() || n < best_n) {
                    best = i;
                    best_n = n;
                    if (n == 1) break;
                }
            }
            if (best == work.size()) break;
            // pick its column with fewest occurrences (ties: lowest column)
            size_t pcol = ncols_, pcount = 0;
            for (const auto& [c, v] : work[best]) {
                (void)v;
                if (pcol == ncols_ || col_count[c] < pcount) {
                    pcol = c;
                    pcount = col_count[c];
                }
            }
            const Rational pval = value_at(work[best], pcol);
            // eliminate pcol from every other row that contains it
            std::vector<size_t> victims;
            victims.swap(col_rows[pcol]);
            std::sort(victims.begin(), victims.end());
            victims.erase(std::unique(victims.begin(), victims.end()), victims.end());
            for (size_t i : victims) {
                if (i == best || done[i]) continue;
                Rational f = value_at(work[i], pcol);
                if (f.is_zero()) continue;  // stale index entry
                f /= pval;
                axpy_row(work[i], work[best], -f, col_count, col_rows, i, pcol);
            }
            done[best] = 1;
            col_done[pcol] = 1;
            for (const auto& [c, v] : work[best]) {
                (void)v;
                if (col_count[c]) --col_count[c];
            }
            pivot_seq.emplace_back(best, pcol);
        }

        res.rank = pivot_seq.size();
        if (want_kernel && res.complete) {
            for (size_t f = 0; f < ncols_; ++f) {
                if (col_done[f]) continue;
                std::vector<Rational> v(ncols_);
                v[f] = Rational(1);
                // Pivot rows were never reduced against later pivots, so
                // substitute in reverse elimination order.
                for (auto it = pivot_seq.rbegin(); it != pivot_seq.rend(); ++it) {
                    const auto& [ri, ci] = *it;
                    Rational s(0);
                    Rational diag(0);
                    for (const auto& [c, val] : work[ri]) {
                        if (c == ci)
                            diag = val;
                        else if (!v[c].is_zero())
                            s += val * v[c];
                    }
                    v[ci] = -s / diag;
                }
                res.kernel.push_back(std::move(v));
            }
            res.kernel = span_canonical_basis(res.kernel, ncols_);
        }
        return res;
    }

    // Exact residual check: M v == 0 for the original rows.
    bool in_kernel(const std::vector<Rational>& v) const {
        for (const auto& r : rows_) {
            Rational s(0);
            for (const auto& [c, val] : r) s += val * v[c];
            if (!s.is_zero()) return false;
        }
        return true;
    }

private:
    static Rational value_at(const Row& r, size_t col) {
        auto it = std::lower_bound(r.begin(), r.end(), col,
                                   [](const auto& e, size_t c) { return e.first < c; });
        if (it != r.end() && it->first == col) return it->second;
        return Rational(0);
    }

    // row_i += f * row_p, maintaining column counts and the column index.
    static void axpy_row(Row& ri, const Row& rp, const Rational& f,
                         std::vector<size_t>& col_count,
                         std::vector<std::vector<size_t>>& col_rows, size_t row_index,
                         size_t skip_col) {
        Row out;
        out.reserve(ri.size() + rp.size());
        auto a = ri.begin();
        auto b = rp.begin();
        while (a != ri.end() || b != rp.end()) {
            if (b == rp.end() || (a != ri.end() && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == ri.end() || b->first < a->first) {
                Rational nv = f * b->second;
                if (!nv.is_zero()) {
                    out.emplace_back(b->first, nv);
                    if (b->first != skip_col) {
                        ++col_count[b->first];
                        col_rows[b->first].push_back(row_index);
                    }
                }
                ++b;
            } else {
                Rational nv = a->second + f * b->second;
                if (!nv.is_zero())
                    out.emplace_back(a->first, nv);
                else if (col_count[a->first])
                    --col_count[a->first];
                ++a;
                ++b;
            }
        }
        ri = std::move(out);
    }

    size_t ncols_;
    std::vector<Row> rows_;
};

}  // namespace kolmosym
