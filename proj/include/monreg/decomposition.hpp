#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "monreg/ideal.hpp"

namespace monreg {

namespace detail {

inline bool is_irreducible(const MonomialIdeal& I) {
    for (const auto& g : I.generators()) {
        int support = 0;
        for (int v = 1; v <= I.vars(); ++v)
            if (g.exponent(v) > 0) ++support;
        if (support > 1) return false;
    }
    return true;
}

inline void split_components(const MonomialIdeal& I, std::vector<MonomialIdeal>& out) {
    if (is_irreducible(I)) {
        out.push_back(I);
        return;
    }
    // first generator with mixed support, split off its first pure power
    for (const auto& g : I.generators()) {
        int first = 0;
        int support = 0;
        for (int v = 1; v <= I.vars(); ++v)
            if (g.exponent(v) > 0) {
                if (first == 0) first = v;
                ++support;
            }
        if (support <= 1) continue;
        Monomial u = Monomial::variable(I.vars(), first, g.exponent(first));
        Monomial v = g / u;
        std::vector<Monomial> with_u = I.generators();
        with_u.push_back(u);
        std::vector<Monomial> with_v = I.generators();
        with_v.push_back(v);
        split_components(MonomialIdeal::make(I.vars(), with_u), out);
        split_components(MonomialIdeal::make(I.vars(), with_v), out);
        return;
    }
}

}  // namespace detail

/// Irredundant irreducible decomposition: irreducible monomial ideals (each
/// generated by pure variable powers) whose intersection is I, none of them
/// containing the intersection of the others. For monomial ideals this
/// decomposition is unique.
inline std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I) {
    if (!I.is_proper() || I.is_zero())
        throw PreconditionError("irreducible_decomposition: ideal must be proper and nonzero");
    std::vector<MonomialIdeal> comps;
    detail::split_components(I, comps);

    // dedupe (canonical generator order makes equality structural)
    std::sort(comps.begin(), comps.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.generators() < b.generators();
    });
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

    // prune components containing the intersection of the others
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < comps.size(); ++i) {
            MonomialIdeal rest = MonomialIdeal::unit(I.vars());
            for (size_t j = 0; j < comps.size(); ++j)
                if (j != i) rest = intersect(rest, comps[j]);
            if (comps[i].contains(rest)) {
                comps.erase(comps.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return comps;
}

/// Support of an ideal's generators as a sorted list of variable indices.
inline std::vector<int> support(const MonomialIdeal& I) {
    std::vector<int> vars;
    for (int v = 1; v <= I.vars(); ++v) {
        bool present = false;
        for (const auto& g : I.generators())
            if (g.exponent(v) > 0) {
                present = true;
                break;
            }
        if (present) vars.push_back(v);
    }
    return vars;
}

/// Ass(R/I): the radicals (supports) of the irredundant irreducible
/// components, as sorted sets of variable indices.
inline std::vector<std::vector<int>> associated_primes(const MonomialIdeal& I) {
    std::set<std::vector<int>> primes;
    for (const auto& comp : irreducible_decomposition(I)) primes.insert(support(comp));
    return {primes.begin(), primes.end()};
}

/// Whether a sorted support equals {1, ..., t} for some t >= 0.
inline bool is_initial_segment(const std::vector<int>& vars) {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] != static_cast<int>(i) + 1) return false;
    return true;
}

/// Caviglia's criterion side: every associated prime is an initial segment.
inline bool all_associated_primes_initial(const MonomialIdeal& I) {
    for (const auto& p : associated_primes(I))
        if (!is_initial_segment(p)) return false;
    return true;
}

/// Primary means exactly one associated prime.
inline bool is_primary(const MonomialIdeal& I) { return associated_primes(I).size() == 1; }

/// m-primary: the only associated prime is the full maximal ideal, which for
/// monomial ideals is equivalent to every variable appearing as a pure power
/// generator.
inline bool is_m_primary(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) return false;
    for (int v = 1; v <= I.vars(); ++v) {
        bool pure = false;
        for (const auto& g : I.generators())
            if (g.exponent(v) > 0 && g.exponent(v) == g.total_degree()) {
                pure = true;
                break;
            }
        if (!pure) return false;
    }
    return true;
}

}  // namespace monreg
