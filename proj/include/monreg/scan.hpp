#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "monreg/verifier.hpp"

namespace monreg {

inline const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "tor-bound",       "ext-bound",       "power-bound",        "ses",
        "caviglia",        "colon-stability", "saturation",         "flat-extension",
        "finite-length-tor", "finite-length-ext"};
    return names;
}

/// Configuration of a randomized scan. All ranges live inside the module
/// caps; a fixed (seed, config) pair reproduces the report byte for byte.
struct ScanConfig {
    std::uint64_t seed = 1;
    int count = 50;
    int n_min = 2, n_max = 4;
    int deg_min = 1, deg_max = 4;
    int gens_min = 2, gens_max = 5;
    int completed_max_gens = 8;
    FieldSpec field{32003};
    std::vector<std::string> checks{"tor-bound"};
    bool weakly_stable_inputs = true;
    bool permissive = false;
    int threads = 1;

    void validate() const {
        if (count < 1) throw PreconditionError("scan: count must be >= 1");
        if (n_min < 1 || n_max > kMaxVars || n_min > n_max) throw PreconditionError("scan: bad n range");
        if (deg_min < 1 || deg_max > 8 || deg_min > deg_max) throw PreconditionError("scan: bad degree range");
        if (gens_min < 1 || gens_min > gens_max) throw PreconditionError("scan: bad generator range");
        if (threads < 1) throw PreconditionError("scan: threads must be >= 1");
        if (checks.empty()) throw PreconditionError("scan: no checks selected");
        for (const auto& c : checks)
            if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
                throw PreconditionError("scan: unknown check `" + c + "`");
        validated(field);
    }

    json to_json() const {
        json j;
        j["seed"] = seed;
        j["count"] = count;
        j["n_range"] = {n_min, n_max};
        j["deg_range"] = {deg_min, deg_max};
        j["gens_range"] = {gens_min, gens_max};
        j["completed_max_gens"] = completed_max_gens;
        j["field"] = field.is_rationals() ? json(0) : json(field.characteristic);
        j["checks"] = checks;
        j["weakly_stable_inputs"] = weakly_stable_inputs;
        j["permissive"] = permissive;
        j["threads"] = threads;
        return j;
    }
};

namespace detail {

inline MonomialIdeal scan_draw_ideal(const ScanConfig& cfg, Rng& rng, int nvars) {
    int deg = rng.in_range(cfg.deg_min, cfg.deg_max);
    int count = rng.in_range(cfg.gens_min, cfg.gens_max);
    std::uint64_t s = rng.fork(0x1dea1ULL);
    if (cfg.weakly_stable_inputs)
        return random_weakly_stable_ideal(nvars, deg, count, s, cfg.completed_max_gens);
    return random_monomial_ideal(nvars, deg, count, s);
}

inline MonomialIdeal scan_m_primarify(const MonomialIdeal& I, const ScanConfig& cfg, Rng& rng) {
    std::vector<Monomial> gens = I.generators();
    for (int v = 1; v <= I.vars(); ++v)
        gens.push_back(Monomial::variable(I.vars(), v, rng.in_range(std::max(1, cfg.deg_min), cfg.deg_max)));
    return MonomialIdeal::make(I.vars(), gens);
}

inline CheckResult scan_run_one(const ScanConfig& cfg, const std::string& check, std::uint64_t item_seed) {
    Rng rng(item_seed);
    int n = rng.in_range(cfg.n_min, cfg.n_max);
    CheckResult res;
    try {
        if (check == "tor-bound") {
            auto I = scan_draw_ideal(cfg, rng, n);
            auto J = scan_draw_ideal(cfg, rng, n);
            res = verify_tor_bound(I, J, cfg.field, cfg.permissive);
        } else if (check == "ext-bound") {
            res = verify_ext_bound(scan_draw_ideal(cfg, rng, n), cfg.field, cfg.permissive);
        } else if (check == "power-bound") {
            res = verify_power_bound(scan_draw_ideal(cfg, rng, n), cfg.field, cfg.permissive);
        } else if (check == "ses") {
            res = verify_ses_inequalities(scan_draw_ideal(cfg, rng, n), cfg.field, cfg.permissive);
        } else if (check == "caviglia") {
            res = verify_caviglia(scan_draw_ideal(cfg, rng, n));
        } else if (check == "colon-stability") {
            auto I = scan_draw_ideal(cfg, rng, n);
            // colon against a general monomial ideal
            int deg = rng.in_range(cfg.deg_min, cfg.deg_max);
            auto J = random_monomial_ideal(n, deg, rng.in_range(cfg.gens_min, cfg.gens_max),
                                           rng.fork(0xc010ULL));
            res = verify_colon_stability(I, J);
        } else if (check == "saturation") {
            res = verify_saturation_claim(scan_draw_ideal(cfg, rng, n));
        } else if (check == "flat-extension") {
            int nn = std::max(2, n);
            auto I = extend_to(scan_draw_ideal(cfg, rng, nn - 1), nn);
            auto J = extend_to(scan_draw_ideal(cfg, rng, nn - 1), nn);
            res = verify_flat_extension(I, J, cfg.field);
        } else if (check == "finite-length-tor") {
            auto I0 = scan_m_primarify(scan_draw_ideal(cfg, rng, n), cfg, rng);
            auto J = scan_draw_ideal(cfg, rng, n);
            res = verify_finite_length_tor(I0, J, cfg.field);
        } else if (check == "finite-length-ext") {
            auto I0 = scan_m_primarify(scan_draw_ideal(cfg, rng, n), cfg, rng);
            res = verify_finite_length_ext(I0, cfg.field, static_cast<int>(rng.below(3)));
        } else {
            throw PreconditionError("scan: unknown check `" + check + "`");
        }
    } catch (const PreconditionError& e) {
        res.check = check;
        res.pass = false;
        res.precondition_violated = true;
        res.error = e.what();
    }
    res.seed = item_seed;
    return res;
}

}  // namespace detail

/// Runs the configured checks over `count` seeded random instances. Items are
/// independent work units; results merge by input index, so the report does
/// not depend on thread scheduling. The report carries one entry per
/// (item, check) plus pass/fail counts and slack histograms.
inline json scan(const ScanConfig& cfg) {
    cfg.validate();
    struct Item {
        std::string check;
        std::uint64_t item_seed;
    };
    std::vector<Item> items;
    for (int idx = 0; idx < cfg.count; ++idx) {
        std::uint64_t item_seed = detail::splitmix64(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (idx + 1)));
        for (const auto& check : cfg.checks) items.push_back({check, item_seed});
    }

    std::vector<CheckResult> results(items.size());
    if (cfg.threads <= 1) {
        for (size_t k = 0; k < items.size(); ++k)
            results[k] = detail::scan_run_one(cfg, items[k].check, items[k].item_seed);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t k = next.fetch_add(1);
                if (k >= items.size()) return;
                results[k] = detail::scan_run_one(cfg, items[k].check, items[k].item_seed);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    json out;
    out["schema_version"] = 1;
    out["config"] = cfg.to_json();
    json arr = json::array();
    long long passed = 0, failed = 0, violations = 0, unstable = 0;
    std::map<std::string, std::map<long long, long long>> slack_hist;
    for (const auto& r : results) {
        arr.push_back(r.to_json());
        if (r.window_unstable) {
            ++unstable;
        } else if (r.pass) {
            ++passed;
        } else if (r.precondition_violated && cfg.permissive) {
            ++violations;  // recorded findings on non-qualifying inputs
        } else {
            ++failed;
        }
        if (r.slack) slack_hist[r.check][*r.slack] += 1;
    }
    out["results"] = arr;
    json hist = json::object();
    for (const auto& [check, h] : slack_hist) {
        json inner = json::object();
        for (const auto& [slack, count] : h) inner[std::to_string(slack)] = count;
        hist[check] = inner;
    }
    out["summary"] = {{"total", static_cast<long long>(results.size())},
                      {"passed", passed},
                      {"failed", failed},
                      {"violations", violations},
                      {"window_unstable", unstable},
                      {"slack_histogram", hist}};
    return out;
}

inline std::string scan_report_text(const json& report) {
    return report.dump(2) + "\n";
}

}  // namespace monreg
