#pragma once

#include <functional>
#include <optional>

#include "monreg/betti.hpp"
#include "monreg/homology.hpp"
#include "monreg/stability.hpp"

namespace monreg {

struct Window {
    int d_min = 0;
    int d_max = 0;
    int size() const { return d_max - d_min + 1; }
};

inline constexpr int kMaxWindowDoublings = 2;

/// Default degree window for computations driven by I (and J): the
/// componentwise exponent box of the generators plus one per variable, plus
/// n Koszul degrees of headroom. Stabilization checks decide whether it was
/// enough; if not, the window is widened and the computation repeated.
inline Window default_window(const MonomialIdeal& I, const MonomialIdeal* J = nullptr) {
    int n = I.vars();
    int top = n;
    for (int v = 1; v <= n; ++v) {
        int c = 1 + I.max_exponent(v);
        if (J) c = std::max(c, 1 + J->max_exponent(v));
        top += c;
    }
    return Window{0, top};
}

/// Runs a window-dependent regularity computation, widening the window by its
/// own size on each failed stabilization check, up to the doubling cap.
template <class F>
RegularityReport regularity_with_widening(
    const std::function<TruncatedGradedModule<F>(Window)>& make_module, Window w,
    int max_doublings = kMaxWindowDoublings) {
    for (int attempt = 0;; ++attempt) {
        auto M = make_module(w);
        RegularityReport R = regularity(M);
        R.doublings = attempt;
        if (R.stabilized) return R;
        if (attempt == max_doublings)
            throw WindowInstabilityError("regularity did not stabilize on window [" +
                                         std::to_string(w.d_min) + ", " + std::to_string(w.d_max) +
                                         "] after " + std::to_string(attempt) + " widenings");
        w.d_max += w.size();
    }
}

/// The truncation of R/I built directly on its monomial basis, with
/// multidegree labels; equal to H_0(Taylor(I)) degree by degree but free of
/// the generator-count cap of an explicit resolution.
template <class F>
TruncatedGradedModule<F> quotient_module(const MonomialIdeal& I, const F& field, Window w) {
    TruncatedGradedModule<F> M(field);
    int n = I.vars();
    M.nvars = n;
    M.d_min = w.d_min;
    M.d_max = w.d_max;
    M.bounded_below = w.d_min <= 0;
    M.dims.assign(M.window_size(), 0);
    M.labels.resize(M.window_size());
    std::vector<std::map<Monomial, int>> index(M.window_size());
    for (int d = std::max(0, w.d_min); d <= w.d_max; ++d) {
        for_each_monomial_of_degree(n, d, [&](const Monomial& m) {
            if (I.contains(m)) return;
            int idx = M.dims[d - w.d_min]++;
            index[d - w.d_min].emplace(m, idx);
            M.labels[d - w.d_min].push_back(Multidegree::of(m));
        });
    }
    M.actions.assign(n, {});
    for (int v = 1; v <= n; ++v) {
        auto& per_degree = M.actions[v - 1];
        per_degree.resize(std::max(0, M.window_size() - 1));
        for (int d = w.d_min; d < w.d_max; ++d) {
            auto& cols = per_degree[d - w.d_min];
            cols.assign(M.dims[d - w.d_min], SparseVec<F>{});
            if (d < 0) continue;
            Monomial xv = Monomial::variable(n, v);
            for (const auto& [m, idx] : index[d - w.d_min]) {
                auto it = index[d + 1 - w.d_min].find(m * xv);
                if (it != index[d + 1 - w.d_min].end()) cols[idx] = {{it->second, field.one()}};
            }
        }
    }
    int tail = 0;
    for (int d = std::max(w.d_min, w.d_max - n); d <= w.d_max; ++d) tail += M.dims[d - w.d_min];
    M.stabilized = tail == 0;
    return M;
}

/// reg R/I through the Koszul route: Betti numbers of the R/I truncation
/// (= H_0(Taylor(I))). Also the source of reg I = reg R/I + 1.
template <class F>
RegularityReport reg_quotient_report(const MonomialIdeal& I, const F& field,
                                     std::optional<Window> window = std::nullopt) {
    if (!I.is_proper()) throw PreconditionError("reg_quotient: ideal must be proper");
    if (I.is_zero() && I.vars() == 0) {
        RegularityReport R;
        R.t[0] = ExtInt(0);
        R.reg = ExtInt(0);
        R.stabilized = true;
        return R;
    }
    return regularity_with_widening<F>(
        [&](Window w) { return quotient_module(I, field, w); },
        window.value_or(default_window(I)));
}

inline int reg_quotient(const MonomialIdeal& I, FieldSpec spec,
                        std::optional<Window> window = std::nullopt) {
    return with_field(spec, [&](auto field) { return reg_quotient_report(I, field, window); })
        .reg.value();
}

inline int reg_ideal(const MonomialIdeal& I, FieldSpec spec,
                     std::optional<Window> window = std::nullopt) {
    return reg_quotient(I, spec, window) + 1;
}

/// reg R/I for weakly stable I, computed purely combinatorially: split off
/// the finite-length part Gamma_m(R/I) = I'/I (regularity = its top degree),
/// then recurse on the saturation, which lives in one fewer variable. The
/// zero ideal gives 0, the unit ideal (zero module) gives -inf.
inline ExtInt reg_weakly_stable_recursive_ext(const MonomialIdeal& I) {
    if (I.is_unit()) return ExtInt::neg_inf();
    if (I.is_zero()) return ExtInt(0);
    GammaTorsion gt = gamma_torsion(I);
    return max(gt.sup_gamma, reg_weakly_stable_recursive_ext(restrict(gt.iprime)));
}

inline int reg_weakly_stable_recursive(const MonomialIdeal& I) {
    if (!I.is_proper()) throw PreconditionError("reg_weakly_stable_recursive: ideal must be proper");
    if (!is_weakly_stable(I)) throw PreconditionError("reg_weakly_stable_recursive: ideal is not weakly stable");
    return reg_weakly_stable_recursive_ext(I).value();
}

}  // namespace monreg
