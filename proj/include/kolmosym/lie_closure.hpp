#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "kolmosym/weyl.hpp"

namespace kolmosym {

// Reduced spanning set with unique leading monomials; supports exact span
// membership in one reduction pass. Rows are kept inter-reduced, so the row
// set is the canonical basis of the span regardless of insertion order.
class WeylSpan {
public:
    // Reduces e against the span in one monotone downward pass: subtracting
    // a pivot row eliminates its leading monomial and touches only strictly
    // smaller ones.
    WeylElem reduce(WeylElem e) const {
        std::optional<PMonomial> bound;  // everything above is irreducible
        for (;;) {
            const auto& terms = e.terms();
            auto it = terms.end();
            if (!bound) {
                if (terms.empty()) return e;
                it = std::prev(terms.end());
            } else {
                auto lb = terms.lower_bound(*bound);  // first >= bound
                if (lb == terms.begin()) return e;
                it = std::prev(lb);
            }
            PMonomial m = it->first;
            auto f = lead_.find(m);
            if (f == lead_.end()) {
                bound = m;
                continue;
            }
            e -= it->second * rows_[f->second];
            bound = m;  // m itself was eliminated; continue strictly below
        }
    }

    bool contains(const WeylElem& e) const { return reduce(e).is_zero(); }

    // Inserts e if independent of the span; returns true when the span grew.
    bool insert(const WeylElem& e) {
        WeylElem r = reduce(e);
        if (r.is_zero()) return false;
        Rational lead_coeff = r.terms().rbegin()->second;
        r = (Rational(1) / lead_coeff) * r;
        PMonomial lm = r.terms().rbegin()->first;
        for (size_t i = 0; i < rows_.size(); ++i) {
            Rational c = rows_[i].coeff(lm);
            if (!c.is_zero()) rows_[i] -= c * r;
        }
        lead_[lm] = rows_.size();
        rows_.push_back(std::move(r));
        return true;
    }

    size_t dim() const { return rows_.size(); }
    const std::vector<WeylElem>& rows() const { return rows_; }

    // Canonical basis: rows sorted by leading monomial.
    std::vector<WeylElem> canonical_basis() const {
        std::vector<WeylElem> out = rows_;
        std::sort(out.begin(), out.end(), [](const WeylElem& a, const WeylElem& b) {
            return PMonomialLess{}(a.terms().rbegin()->first, b.terms().rbegin()->first);
        });
        return out;
    }

private:
    std::vector<WeylElem> rows_;
    std::map<PMonomial, size_t, PMonomialLess> lead_;
};

struct LieClosureOptions {
    std::function<bool()> deadline;  // true when the time budget expired
};

struct LieClosureResult {
    std::vector<WeylElem> basis;  // canonical basis of the reached subspace
    size_t dropped = 0;           // commutators discarded by the degree cap
    size_t pairs_processed = 0;
    bool converged = false;  // every pair within the caps was processed
    bool complete = true;    // false when the time budget expired
};

// Iteratively closes the span of the generators under pairwise commutators.
// Commutators whose degree exceeds degree_cap are dropped (and counted).
// Pairs are processed in ascending combined degree (ties by insertion
// order), so low-degree structure is found before expensive high-degree
// products; iter_cap bounds the number of commutators evaluated. The result
// is deterministic.
inline LieClosureResult lie_closure(const std::vector<WeylElem>& gens, uint32_t degree_cap,
                                    uint64_t iter_cap, const LieClosureOptions& opt = {}) {
    if (degree_cap < 1 || iter_cap < 1)
        throw std::domain_error("lie_closure: caps must be >= 1");
    WeylSpan span;
    std::vector<WeylElem> elems;  // reduced representatives, insertion order
    LieClosureResult res;

    // (deg_i + deg_j, i, j) with j < i
    std::set<std::tuple<uint32_t, size_t, size_t>> queue;

    auto add = [&](const WeylElem& e) {
        if (e.is_zero()) return;
        if (e.degree() > static_cast<int>(degree_cap)) {
            ++res.dropped;
            return;
        }
        if (!span.insert(e)) return;
        size_t i = elems.size();
        elems.push_back(span.rows().back());
        uint32_t di = static_cast<uint32_t>(elems[i].degree());
        for (size_t j = 0; j < i; ++j)
            queue.insert({di + static_cast<uint32_t>(elems[j].degree()), i, j});
    };

    for (const auto& g : gens) add(g);

    while (!queue.empty() && res.pairs_processed < iter_cap) {
        if (opt.deadline && opt.deadline()) {
            res.complete = false;
            break;
        }
        auto [key, i, j] = *queue.begin();
        queue.erase(queue.begin());
        (void)key;
        ++res.pairs_processed;
        add(weyl_commutator(elems[i], elems[j]));
    }
    res.converged = queue.empty();
    res.basis = span.canonical_basis();
    return res;
}

// dim of the intersection of the closed span with the span of the given
// (linearly independent) probe elements.
inline size_t span_intersection_dim(const std::vector<WeylElem>& closure_basis,
                                    const std::vector<WeylElem>& probe) {
    WeylSpan span;
    for (const auto& e : closure_basis) span.insert(e);
    WeylSpan reduced_probe;
    size_t independent_of_span = 0;
    for (const auto& p : probe)
        if (reduced_probe.insert(span.reduce(p))) ++independent_of_span;
    return probe.size() - independent_of_span;
}

}  // namespace kolmosym
