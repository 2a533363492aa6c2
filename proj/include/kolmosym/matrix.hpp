#pragma once

#include <optional>
#include <vector>

#include "kolmosym/rational.hpp"

namespace kolmosym {

// Dense matrix over the rationals, row-major.
class MatrixQ {
public:
    MatrixQ() : rows_(0), cols_(0) {}
    MatrixQ(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static MatrixQ identity(size_t n) {
        MatrixQ m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const MatrixQ& x, const MatrixQ& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend MatrixQ operator*(const MatrixQ& x, const MatrixQ& y) {
        if (x.cols_ != y.rows_) throw std::domain_error("MatrixQ: dimension mismatch in product");
        MatrixQ r(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (size_t j = 0; j < y.cols_; ++j) {
                    if (y.at(k, j).is_zero()) continue;
                    r.at(i, j) += x.at(i, k) * y.at(k, j);
                }
            }
        return r;
    }
    friend MatrixQ operator+(const MatrixQ& x, const MatrixQ& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::domain_error("MatrixQ: dimension mismatch in sum");
        MatrixQ r = x;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
        return r;
    }
    friend MatrixQ operator*(const Rational& c, const MatrixQ& x) {
        MatrixQ r = x;
        for (auto& v : r.a_) v *= c;
        return r;
    }

    MatrixQ pow(unsigned e) const {
        if (rows_ != cols_) throw std::domain_error("MatrixQ: pow of non-square matrix");
        MatrixQ r = identity(rows_), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::domain_error("MatrixQ: dimension mismatch in apply");
        std::vector<Rational> r(rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    // In-place reduced row echelon form; returns pivot column per pivot row.
    // Columns are processed left to right, so the pivot set (and the result)
    // is unique; the row chosen within a column only affects intermediate
    // coefficient size, picked by smallest numerator+denominator bit length.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t best = rows_;
            size_t best_bits = 0;
            for (size_t i = r; i < rows_; ++i) {
                if (at(i, c).is_zero()) continue;
                size_t bits = at(i, c).bit_size();
                if (best == rows_ || bits < best_bits) {
                    best = i;
                    best_bits = bits;
                }
            }
            if (best == rows_) continue;
            if (best != r)
                for (size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(best, j));
            Rational inv = Rational(1) / at(r, c);
            for (size_t j = c; j < cols_; ++j) at(r, j) *= inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                Rational f = at(i, c);
                for (size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    size_t rank() const {
        MatrixQ m = *this;
        return m.rref().size();
    }

    // Basis of the right kernel in RREF-derived canonical form:
    // rank + basis.size() == cols, and M*v = 0 exactly for each vector.
    std::vector<std::vector<Rational>> nullspace() const {
        MatrixQ m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Rational>> basis;
        for (size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Rational> v(cols_);
            v[f] = Rational(1);
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
            basis.push_back(std::move(v));
        }
        // The free-column construction is already canonical given the
        // left-to-right pivot choice; normalize leading entries to 1.
        for (auto& v : basis) {
            size_t lead = 0;
            while (lead < v.size() && v[lead].is_zero()) ++lead;
            if (lead < v.size() && !v[lead].is_one()) {
                Rational inv = Rational(1) / v[lead];
                for (auto& x : v) x *= inv;
            }
        }
        return basis;
    }

    // One solution of M x = b, or nullopt when inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const {
        if (b.size() != rows_) throw std::domain_error("MatrixQ::solve: dimension mismatch");
        MatrixQ m(rows_, cols_ + 1);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
            m.at(i, cols_) = b[i];
        }
        auto pivots = m.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<Rational> x(cols_);
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.at(r, cols_);
        return x;
    }

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

// RREF of the row span of the given vectors: a canonical basis of the
// subspace they span (unique regardless of generator order).
inline std::vector<std::vector<Rational>> span_canonical_basis(
    const std::vector<std::vector<Rational>>& gens, size_t dim) {
    MatrixQ m(gens.size(), dim);
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < dim; ++j) m.at(i, j) = gens[i][j];
    auto pivots = m.rref();
    std::vector<std::vector<Rational>> rows;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<Rational> v(dim);
        for (size_t j = 0; j < dim; ++j) v[j] = m.at(r, j);
        rows.push_back(std::move(v));
    }
    return rows;
}

}  // namespace kolmosym
