#pragma once

#include <cstdint>
#include <random>

#include "monreg/ideal.hpp"
#include "monreg/stability.hpp"

namespace monreg {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Deterministic RNG. mt19937_64 output is pinned by the standard; bounded
/// draws avoid std::uniform_int_distribution, whose mapping is
/// implementation-defined, so streams are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(detail::splitmix64(seed)) {}

    /// Uniform-ish draw in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    int in_range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    std::uint64_t fork(std::uint64_t salt) { return detail::splitmix64(engine_() ^ salt); }

private:
    std::mt19937_64 engine_;
};

/// A random proper nonzero monomial ideal, deterministic for a fixed seed.
/// Draws `count` monomials with total degree in [1, max_degree] (uniform
/// degree, then a uniform composition) and minimalizes; fewer generators than
/// `count` may survive.
inline MonomialIdeal random_monomial_ideal(int nvars, int max_degree, int count, std::uint64_t seed) {
    if (nvars < 1 || nvars > kMaxVars) throw PreconditionError("random_monomial_ideal: nvars out of range");
    if (max_degree < 1 || max_degree > 8) throw PreconditionError("random_monomial_ideal: max_degree out of range [1, 8]");
    if (count < 1) throw PreconditionError("random_monomial_ideal: count must be >= 1");
    Rng rng(seed);
    std::vector<Monomial> gens;
    for (int i = 0; i < count; ++i) {
        int d = rng.in_range(1, max_degree);
        Monomial m(nvars);
        for (int k = 0; k < d; ++k) {
            int v = rng.in_range(1, nvars);
            m.set_exponent(v, m.exponent(v) + 1);
        }
        gens.push_back(m);
    }
    return MonomialIdeal::make(nvars, gens);
}

/// A random weakly stable ideal: a random ideal pushed through
/// weakly_stable_completion, re-drawn (with a re-salted seed) until the
/// completed generating set fits under max_gens. Deterministic per seed.
inline MonomialIdeal random_weakly_stable_ideal(int nvars, int max_degree, int count,
                                                std::uint64_t seed, int max_gens = 8) {
    int want = count;
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::uint64_t sub = detail::splitmix64(seed ^ (attempt * 0x9e3779b97f4a7c15ULL + 1));
        MonomialIdeal W = weakly_stable_completion(random_monomial_ideal(nvars, max_degree, want, sub));
        if (W.generator_count() <= max_gens && !W.is_unit()) return W;
        if (attempt > 0 && attempt % 16 == 0 && want > 1) --want;  // drift easier
    }
}

}  // namespace monreg
