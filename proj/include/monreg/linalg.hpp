#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "monreg/errors.hpp"
#include "monreg/field.hpp"

namespace monreg {

/// A sparse vector: (index, value) terms sorted by index, values nonzero.
template <class F>
using SparseVec = std::vector<std::pair<int, typename F::Elt>>;

template <class F>
SparseVec<F> sparse_add_scaled(const F& field, const SparseVec<F>& a, const typename F::Elt& c,
                               const SparseVec<F>& b) {
    // a + c*b
    SparseVec<F> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            auto v = field.mul(c, b[j].second);
            if (!field.is_zero(v)) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            auto v = field.add(a[i].second, field.mul(c, b[j].second));
            if (!field.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

template <class F>
typename F::Elt sparse_get(const F& field, const SparseVec<F>& v, int index) {
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const auto& term, int idx) { return term.first < idx; });
    if (it != v.end() && it->first == index) return it->second;
    return field.zero();
}

/// Reduced row echelon form over an exact field. Pivoting is deterministic:
/// below kDenseColumnCutoff columns the pivot is the remaining row with the
/// smallest leading index (ties by input order); at or above the cutoff a
/// Markowitz count (nnz_row - 1) * (nnz_col - 1) picks the pivot to limit
/// fill-in, ties again broken by index order.
template <class F>
class Rref {
public:
    static constexpr int kDenseColumnCutoff = 64;

    Rref(const F& field, int cols, std::vector<SparseVec<F>> rows) : field_(field), cols_(cols) {
        eliminate(std::move(rows));
    }

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Pivot columns, strictly increasing; rows_[i] has pivot pivot_cols()[i]
    /// with value one and zeros in every other pivot column.
    const std::vector<int>& pivot_cols() const { return pivots_; }

    std::vector<int> free_cols() const {
        std::vector<int> free;
        free.reserve(cols_ - rank());
        size_t k = 0;
        for (int c = 0; c < cols_; ++c) {
            if (k < pivots_.size() && pivots_[k] == c)
                ++k;
            else
                free.push_back(c);
        }
        return free;
    }

    const std::vector<SparseVec<F>>& rows() const { return rows_; }

    /// Eliminates every pivot coordinate from v; the residual is supported on
    /// free columns and is zero exactly when v lies in the row space.
    SparseVec<F> reduce(SparseVec<F> v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            auto c = sparse_get(field_, v, pivots_[i]);
            if (!field_.is_zero(c)) v = sparse_add_scaled(field_, v, field_.neg(c), rows_[i]);
        }
        return v;
    }

    /// Basis of the kernel of the matrix whose rows were eliminated: one
    /// vector per free column f, with coordinate one at f, zeros at the other
    /// free columns, and -row[f] at each pivot column.
    std::vector<SparseVec<F>> kernel_basis() const {
        std::vector<SparseVec<F>> basis;
        for (int f : free_cols()) {
            SparseVec<F> k;
            for (size_t i = 0; i < rows_.size(); ++i) {
                auto c = sparse_get(field_, rows_[i], f);
                if (!field_.is_zero(c)) k.emplace_back(pivots_[i], field_.neg(c));
            }
            k.emplace_back(f, field_.one());
            std::sort(k.begin(), k.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            basis.push_back(std::move(k));
        }
        return basis;
    }

private:
    void eliminate(std::vector<SparseVec<F>> pending) {
        const bool markowitz = cols_ >= kDenseColumnCutoff;
        std::vector<bool> used(pending.size(), false);
        for (;;) {
            // pick the next pivot row
            int best = -1;
            long long best_score = 0;
            std::vector<long long> col_count;
            if (markowitz) {
                col_count.assign(cols_, 0);
                for (size_t r = 0; r < pending.size(); ++r)
                    if (!used[r])
                        for (const auto& [c, v] : pending[r]) col_count[c]++;
            }
            for (size_t r = 0; r < pending.size(); ++r) {
                if (used[r] || pending[r].empty()) continue;
                long long score;
                if (markowitz) {
                    score = static_cast<long long>(pending[r].size() - 1) * (col_count[pending[r].front().first] - 1);
                    for (const auto& [c, v] : pending[r])
                        score = std::min(score,
                                         static_cast<long long>(pending[r].size() - 1) * (col_count[c] - 1));
                } else {
                    score = pending[r].front().first;
                }
                if (best < 0 || score < best_score) {
                    best = static_cast<int>(r);
                    best_score = score;
                }
            }
            if (best < 0) break;

            // normalize on its leading column and clear that column elsewhere
            SparseVec<F> row = pending[best];
            used[best] = true;
            int pivot = row.front().first;
            if (markowitz) {
                // choose the row's cheapest column as the pivot column
                long long nnz_r = static_cast<long long>(row.size() - 1);
                long long best_col_score = -1;
                for (const auto& [c, v] : row) {
                    long long s = nnz_r * (col_count[c] - 1);
                    if (best_col_score < 0 || s < best_col_score || (s == best_col_score && c < pivot)) {
                        pivot = c;
                        best_col_score = s;
                    }
                }
            }
            auto lead = sparse_get(field_, row, pivot);
            auto scale = field_.inv(lead);
            for (auto& [c, v] : row) v = field_.mul(scale, v);

            for (size_t r = 0; r < pending.size(); ++r) {
                if (used[r] || pending[r].empty()) continue;
                auto c = sparse_get(field_, pending[r], pivot);
                if (!field_.is_zero(c)) pending[r] = sparse_add_scaled(field_, pending[r], field_.neg(c), row);
            }
            for (size_t i = 0; i < rows_.size(); ++i) {
                auto c = sparse_get(field_, rows_[i], pivot);
                if (!field_.is_zero(c)) rows_[i] = sparse_add_scaled(field_, rows_[i], field_.neg(c), row);
            }
            rows_.push_back(std::move(row));
            pivots_.push_back(pivot);
        }
        // sort rows by pivot column
        std::vector<size_t> order(rows_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivots_[a] < pivots_[b]; });
        std::vector<SparseVec<F>> rows;
        std::vector<int> pivots;
        rows.reserve(order.size());
        pivots.reserve(order.size());
        for (size_t i : order) {
            rows.push_back(std::move(rows_[i]));
            pivots.push_back(pivots_[i]);
        }
        rows_ = std::move(rows);
        pivots_ = std::move(pivots);
    }

    F field_;
    int cols_;
    std::vector<SparseVec<F>> rows_;
    std::vector<int> pivots_;
};

/// Rank of a matrix given as sparse rows.
template <class F>
int sparse_rank(const F& field, int cols, std::vector<SparseVec<F>> rows) {
    return Rref<F>(field, cols, std::move(rows)).rank();
}

}  // namespace monreg
