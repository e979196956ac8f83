#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monreg/extint.hpp"
#include "monreg/ideal.hpp"

namespace monreg {

namespace detail {

/// Exchange property for one monomial u against I: for every j < m(u) there
/// is a k >= 0 with x_j^k * u / x_{m(u)}^{l(u)} in I. The "exists k" is
/// decided through saturation membership, u/x_{m(u)}^{l(u)} in (I : x_j^inf),
/// which is exact; saturations are supplied per variable by the caller.
inline bool exchange_property_holds(const Monomial& u,
                                    const std::vector<MonomialIdeal>& saturations) {
    int m = u.max_var();
    if (m == 0) return true;  // unit monomial: m(u) undefined, vacuous
    Monomial core = u;
    core.set_exponent(m, u.exponent(m) - u.leading_power());
    for (int j = 1; j < m; ++j)
        if (!saturations[j].contains(core)) return false;
    return true;
}

inline std::vector<MonomialIdeal> variable_saturations(const MonomialIdeal& I) {
    std::vector<MonomialIdeal> sats;
    sats.reserve(I.vars() + 1);
    sats.push_back(I);  // unused slot 0
    for (int j = 1; j <= I.vars(); ++j) sats.push_back(saturate_variable(I, j));
    return sats;
}

}  // namespace detail

/// Weak stability of a monomial ideal: the exchange property checked on the
/// minimal generators. The zero and unit ideals are weakly stable (vacuous).
inline bool is_weakly_stable(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) return true;
    auto sats = detail::variable_saturations(I);
    for (const auto& u : I.generators())
        if (!detail::exchange_property_holds(u, sats)) return false;
    return true;
}

/// Cross-validation mode: checks the exchange property for every monomial of
/// I up to the given total degree, not just the generators.
inline bool is_weakly_stable_full(const MonomialIdeal& I, int degree_bound) {
    if (I.is_zero() || I.is_unit()) return true;
    auto sats = detail::variable_saturations(I);
    bool ok = true;
    for (int d = 0; d <= degree_bound && ok; ++d) {
        for_each_monomial_of_degree(I.vars(), d, [&](const Monomial& u) {
            if (ok && I.contains(u) && !detail::exchange_property_holds(u, sats)) ok = false;
        });
    }
    return ok;
}

/// A weakly stable ideal containing I, grown by adding the degree-preserving
/// exchange monomial x_j^{l(u)} * u / x_{m(u)}^{l(u)} for each violating pair
/// (u, j) until the exchange property holds. Not claimed minimal among weakly
/// stable ideals containing I.
inline MonomialIdeal weakly_stable_completion(const MonomialIdeal& I) {
    if (!I.is_proper()) throw PreconditionError("weakly_stable_completion: ideal must be proper");
    MonomialIdeal current = I;
    for (;;) {
        if (current.is_zero()) return current;
        auto sats = detail::variable_saturations(current);
        std::vector<Monomial> added;
        for (const auto& u : current.generators()) {
            int m = u.max_var();
            if (m == 0) continue;
            Monomial core = u;
            core.set_exponent(m, u.exponent(m) - u.leading_power());
            for (int j = 1; j < m; ++j) {
                if (sats[j].contains(core)) continue;
                Monomial candidate = core;
                candidate.set_exponent(j, core.exponent(j) + u.leading_power());
                added.push_back(candidate);
            }
        }
        if (added.empty()) return current;
        std::vector<Monomial> gens = current.generators();
        gens.insert(gens.end(), added.begin(), added.end());
        current = MonomialIdeal::make(current.vars(), gens);
    }
}

struct GammaTorsion {
    MonomialIdeal iprime;  // saturation of I along x_n
    ExtInt sup_gamma;      // sup(I'/I), -inf when I' = I
};

/// I' = (I : x_n^inf) and sup of the finite-length module I'/I = Gamma_m(R/I)
/// for weakly stable I. Finite length of I'/I is decided exactly: every
/// generator of I' must lie in every variable saturation of I. When that
/// fails the module has positive dimension and an error is raised.
inline GammaTorsion gamma_torsion(const MonomialIdeal& I) {
    if (!I.is_proper()) throw PreconditionError("gamma_torsion: ideal must be proper");
    int n = I.vars();
    if (n == 0) return {I, ExtInt::neg_inf()};
    MonomialIdeal iprime = saturate_variable(I, n);
    if (iprime == I) return {iprime, ExtInt::neg_inf()};

    for (int j = 1; j <= n; ++j) {
        MonomialIdeal satj = saturate_variable(I, j);
        if (!satj.contains(iprime))
            throw PreconditionError(
                "gamma_torsion: I'/I is not of finite length (x" + std::to_string(j) +
                " does not act nilpotently); I is not weakly stable in the relevant sense");
    }

    // I'/I is generated in degrees <= max generator degree of I', so the
    // first degree >= that bound with equal dimensions ends the support.
    int gen_bound = iprime.max_generator_degree();
    ExtInt sup = ExtInt::neg_inf();
    for (int d = 0;; ++d) {
        long long diff = ideal_dim_in_degree(iprime, d) - ideal_dim_in_degree(I, d);
        if (diff > 0) sup = ExtInt(d);
        if (diff == 0 && d >= gen_bound) break;
        if (d > kMaxExponent * n + 1)
            throw Error("gamma_torsion: degree scan exceeded the ambient cap");  // unreachable
    }
    return {iprime, sup};
}

}  // namespace monreg
