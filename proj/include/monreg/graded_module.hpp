#pragma once

#include <vector>

#include "monreg/extint.hpp"
#include "monreg/free_complex.hpp"
#include "monreg/linalg.hpp"

namespace monreg {

/// A Z-graded module presented degree-by-degree on a window [d_min, d_max]:
/// dimensions per degree and, for each variable, the multiplication map
/// M_d -> M_{d+1} as sparse columns (defined for d in [d_min, d_max - 1]).
/// Degrees outside the window are unrepresented, except that bounded_below
/// records a producer guarantee that M_d = 0 below d_min. When the module
/// was assembled from a multigraded complex, every basis vector carries its
/// multidegree in `labels`; downstream computations use the labels to split
/// into small blocks.
template <class F>
struct TruncatedGradedModule {
    explicit TruncatedGradedModule(F f) : field(std::move(f)) {}

    F field;
    int nvars = 0;
    int d_min = 0;
    int d_max = -1;
    bool bounded_below = false;
    bool stabilized = false;  // dims vanish on the top nvars+1 window degrees

    std::vector<int> dims;                                      // [d - d_min]
    std::vector<std::vector<Multidegree>> labels;               // optional, per degree
    std::vector<std::vector<std::vector<SparseVec<F>>>> actions;  // [var-1][d - d_min][col]

    int window_size() const { return d_max - d_min + 1; }

    bool in_window(int d) const { return d >= d_min && d <= d_max; }

    int dim(int d) const {
        if (in_window(d)) return dims[d - d_min];
        if (d < d_min && bounded_below) return 0;
        throw PreconditionError("TruncatedGradedModule: degree " + std::to_string(d) +
                                " outside the window [" + std::to_string(d_min) + ", " +
                                std::to_string(d_max) + "]");
    }

    bool is_labeled() const { return !labels.empty(); }

    const Multidegree& label(int d, int col) const { return labels[d - d_min][col]; }

    /// Columns of multiplication by x_var on M_d (empty list if either side
    /// is empty); d must satisfy d_min <= d < d_max.
    const std::vector<SparseVec<F>>& action(int var, int d) const {
        if (d < d_min || d >= d_max)
            throw PreconditionError("TruncatedGradedModule: action degree out of window");
        return actions[var - 1][d - d_min];
    }

    bool is_zero() const {
        for (int v : dims)
            if (v != 0) return false;
        return true;
    }
};

/// Hand-built module from explicit dimensions; all actions zero unless
/// supplied. Used for small fixtures such as residue-field shifts.
template <class F>
TruncatedGradedModule<F> module_from_dims(const F& field, int nvars, int d_min,
                                          const std::vector<int>& dims, bool bounded_below = true) {
    TruncatedGradedModule<F> M(field);
    M.nvars = nvars;
    M.d_min = d_min;
    M.d_max = d_min + static_cast<int>(dims.size()) - 1;
    M.bounded_below = bounded_below;
    M.dims = dims;
    M.actions.assign(nvars, {});
    for (int v = 0; v < nvars; ++v) {
        M.actions[v].resize(std::max(0, M.window_size() - 1));
        for (int idx = 0; idx + 1 < M.window_size(); ++idx)
            M.actions[v][idx].assign(dims[idx], SparseVec<F>{});
    }
    int tail = 0;
    for (int idx = std::max(0, M.window_size() - nvars - 1); idx < M.window_size(); ++idx)
        tail += dims[idx];
    M.stabilized = tail == 0;
    return M;
}

/// k(-a): one-dimensional in degree a.
template <class F>
TruncatedGradedModule<F> residue_field_module(const F& field, int nvars, int a, int window_top) {
    std::vector<int> dims(window_top - a + 1, 0);
    dims[0] = 1;
    auto M = module_from_dims(field, nvars, a, dims);
    return M;
}

/// M(-a): the shift with M(-a)_d = M_{d-a}. Multidegree labels do not
/// survive a total-degree shift and are dropped.
template <class F>
TruncatedGradedModule<F> shift_module(TruncatedGradedModule<F> M, int a) {
    M.d_min += a;
    M.d_max += a;
    M.labels.clear();
    return M;
}

struct SupInf {
    ExtInt inf;  // +inf for the zero module
    ExtInt sup;  // -inf for the zero module
    bool is_finite_length;
};

/// Extremal nonzero degrees within the window. is_finite_length is the
/// window heuristic: dims vanish on the top nvars+1 degrees.
template <class F>
SupInf sup_inf(const TruncatedGradedModule<F>& M) {
    SupInf r{ExtInt::pos_inf(), ExtInt::neg_inf(), true};
    for (int d = M.d_min; d <= M.d_max; ++d)
        if (M.dims[d - M.d_min] > 0) {
            if (r.inf.is_pos_inf()) r.inf = ExtInt(d);
            r.sup = ExtInt(d);
        }
    if (r.sup.is_finite())
        r.is_finite_length = r.sup.value() < M.d_max - M.nvars;
    return r;
}

namespace detail {

template <class F>
SparseVec<F> apply_columns(const F& field, const std::vector<SparseVec<F>>& cols, const SparseVec<F>& v) {
    SparseVec<F> out;
    for (const auto& [idx, coeff] : v)
        out = sparse_add_scaled(field, out, coeff, cols[idx]);
    return out;
}

}  // namespace detail

/// Multiplication maps must commute pairwise as composites M_d -> M_{d+2}.
template <class F>
bool actions_commute(const TruncatedGradedModule<F>& M) {
    const auto& field = M.field;
    for (int d = M.d_min; d + 2 <= M.d_max; ++d)
        for (int v = 1; v <= M.nvars; ++v)
            for (int w = v + 1; w <= M.nvars; ++w)
                for (int c = 0; c < M.dim(d); ++c) {
                    auto vw = detail::apply_columns(field, M.action(w, d + 1), M.action(v, d)[c]);
                    auto wv = detail::apply_columns(field, M.action(v, d + 1), M.action(w, d)[c]);
                    if (vw != wv) return false;
                }
    return true;
}

}  // namespace monreg
