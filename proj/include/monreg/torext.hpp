#pragma once

#include <optional>
#include <vector>

#include "monreg/regularity_ops.hpp"

namespace monreg {

namespace detail {

inline void check_tor_pair(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_vars(I, J);
    if (!I.is_proper() || I.is_zero() || !J.is_proper() || J.is_zero())
        throw PreconditionError("tor: both ideals must be proper and nonzero");
    if (I.generator_count() + J.generator_count() > 20)
        throw CapExceededError("tor: generator counts sum beyond 20 (tensor blowup)");
}

}  // namespace detail

/// Tor_i(R/I, R/J) as H_i of Taylor(I) (x) Taylor(J). Any i >= 0 is accepted;
/// positions beyond the tensor length are zero (and i > n vanishes by global
/// dimension, which tests assert rather than assume).
template <class F>
TruncatedGradedModule<F> tor_module(const MonomialIdeal& I, const MonomialIdeal& J, int i,
                                    const F& field, std::optional<Window> window = std::nullopt) {
    detail::check_tor_pair(I, J);
    if (i < 0) throw PreconditionError("tor: negative homological index");
    Window w = window.value_or(default_window(I, &J));
    auto TT = tensor_complexes(taylor_complex(I, field), taylor_complex(J, field));
    if (i > TT.length()) {
        auto M = module_from_dims(field, I.vars(), w.d_min, std::vector<int>(w.size(), 0));
        return M;
    }
    return homology_module(TT, i, w.d_min, w.d_max);
}

/// Tor_0 .. Tor_max_i in one pass over the tensor complex.
template <class F>
std::vector<TruncatedGradedModule<F>> tor_modules(const MonomialIdeal& I, const MonomialIdeal& J,
                                                  int max_i, const F& field,
                                                  std::optional<Window> window = std::nullopt) {
    detail::check_tor_pair(I, J);
    Window w = window.value_or(default_window(I, &J));
    auto TT = tensor_complexes(taylor_complex(I, field), taylor_complex(J, field));
    int computable = std::min(max_i, TT.length());
    auto mods = homology_range(TT, 0, computable, w.d_min, w.d_max);
    for (int i = computable + 1; i <= max_i; ++i)
        mods.push_back(module_from_dims(field, I.vars(), w.d_min, std::vector<int>(w.size(), 0)));
    return mods;
}

/// Regularities of Tor_0 .. Tor_max_i; the window widens until every index
/// stabilizes.
template <class F>
std::vector<RegularityReport> tor_regularities(const MonomialIdeal& I, const MonomialIdeal& J,
                                               int max_i, const F& field,
                                               std::optional<Window> window = std::nullopt,
                                               int max_doublings = kMaxWindowDoublings) {
    detail::check_tor_pair(I, J);
    Window w = window.value_or(default_window(I, &J));
    for (int attempt = 0;; ++attempt) {
        auto mods = tor_modules(I, J, max_i, field, w);
        std::vector<RegularityReport> reports;
        bool ok = true;
        for (auto& M : mods) {
            reports.push_back(regularity(M));
            reports.back().doublings = attempt;
            ok = ok && reports.back().stabilized;
        }
        if (ok) return reports;
        if (attempt == max_doublings)
            throw WindowInstabilityError("tor regularity did not stabilize on window [" +
                                         std::to_string(w.d_min) + ", " + std::to_string(w.d_max) + "]");
        w.d_max += w.size();
    }
}

/// reg Tor_i(R/I, R/J). Tor is symmetric in its arguments; with
/// check_symmetry the dimensions of both orders are computed and compared
/// degree by degree.
template <class F>
ExtInt tor_regularity(const MonomialIdeal& I, const MonomialIdeal& J, int i, const F& field,
                      std::optional<Window> window = std::nullopt, bool check_symmetry = false) {
    auto reports = tor_regularities(I, J, i, field, window);
    if (check_symmetry) {
        auto a = tor_module(I, J, i, field, window);
        auto b = tor_module(J, I, i, field, window);
        for (int d = a.d_min; d <= a.d_max; ++d)
            if (a.dim(d) != b.dim(d))
                throw Error("tor symmetry violated at degree " + std::to_string(d));
    }
    return reports[i].reg;
}

/// Default window for Ext computations: dualizing negates the shifts, so the
/// support floor is minus the exponent box; a little positive headroom covers
/// the Betti probes at the top.
inline Window default_ext_window(const MonomialIdeal& I) {
    Window w = default_window(I);
    return Window{-w.d_max, I.vars() + 1};
}

/// Ext^i(R/I, R) as cohomology of the dualized Taylor resolution; with the
/// dual chain reversed, Ext^i sits at chain position |G(I)| - i.
template <class F>
TruncatedGradedModule<F> ext_module(const MonomialIdeal& I, int i, const F& field,
                                    std::optional<Window> window = std::nullopt) {
    if (!I.is_proper() || I.is_zero())
        throw PreconditionError("ext: ideal must be proper and nonzero");
    if (i < 0) throw PreconditionError("ext: negative cohomological index");
    Window w = window.value_or(default_ext_window(I));
    auto D = dualize_into_ring(taylor_complex(I, field));
    int position = D.length() - i;
    if (position < 0) return module_from_dims(field, I.vars(), w.d_min, std::vector<int>(w.size(), 0));
    return homology_module(D, position, w.d_min, w.d_max);
}

/// reg Ext^i(R/I, R) via the same Koszul route, on the negated window.
template <class F>
RegularityReport ext_regularity_report(const MonomialIdeal& I, int i, const F& field,
                                       std::optional<Window> window = std::nullopt,
                                       int max_doublings = kMaxWindowDoublings) {
    Window w = window.value_or(default_ext_window(I));
    return regularity_with_widening<F>(
        [&](Window ww) { return ext_module(I, i, field, ww); }, w, max_doublings);
}

template <class F>
ExtInt ext_regularity(const MonomialIdeal& I, int i, const F& field,
                      std::optional<Window> window = std::nullopt) {
    return ext_regularity_report(I, i, field, window).reg;
}

}  // namespace monreg
