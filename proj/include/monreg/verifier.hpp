#pragma once

#include <json.hpp>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "monreg/decomposition.hpp"
#include "monreg/io.hpp"
#include "monreg/random_ideal.hpp"
#include "monreg/resolve.hpp"
#include "monreg/torext.hpp"

namespace monreg {

using json = nlohmann::ordered_json;

inline json ideal_to_json(const MonomialIdeal& I) {
    json j;
    j["vars"] = I.vars();
    json gens = json::array();
    for (const auto& g : I.generators()) gens.push_back(g.str());
    j["gens"] = gens;
    return j;
}

inline json extint_to_json(ExtInt v) {
    if (v.is_neg_inf()) return json("-inf");
    if (v.is_pos_inf()) return json("+inf");
    return json(v.value());
}

/// Outcome of one executable theorem statement. Failures always carry full
/// reproduction data: canonical inputs, field, and the scan seed when drawn
/// from a scan.
struct CheckResult {
    std::string check;
    json inputs = json::object();
    json values = json::object();
    json bounds = json::object();
    bool pass = false;
    bool window_unstable = false;
    bool precondition_violated = false;  // permissive-mode marker
    std::optional<long long> slack;      // min (bound - computed) over the indices checked
    std::string error;
    FieldSpec field;
    std::uint64_t seed = 0;
    int window_d_min = 0, window_d_max = 0;
    bool stabilized = true;
    int doublings = 0;

    json to_json() const {
        json j;
        j["check"] = check;
        j["inputs"] = inputs;
        j["field"] = field.is_rationals() ? json(0) : json(field.characteristic);
        j["values"] = values;
        j["bounds"] = bounds;
        j["pass"] = pass;
        j["slack"] = slack ? json(*slack) : json(nullptr);
        j["window"] = {{"d_min", window_d_min},
                       {"d_max", window_d_max},
                       {"stabilized", stabilized},
                       {"doublings", doublings}};
        j["window_unstable"] = window_unstable;
        j["precondition_violated"] = precondition_violated;
        j["error"] = error;
        j["seed"] = seed;
        return j;
    }
};

namespace detail {

inline void require_weakly_stable(const MonomialIdeal& I, const char* check, bool permissive,
                                  CheckResult& res) {
    if (is_weakly_stable(I)) return;
    if (!permissive)
        throw PreconditionError(std::string(check) + ": input ideal " + I.str() +
                                " is not weakly stable (use permissive mode to record findings)");
    res.precondition_violated = true;
}

inline void note_report(CheckResult& res, const RegularityReport& r) {
    res.window_d_min = std::min(res.window_d_min, r.d_min);
    res.window_d_max = std::max(res.window_d_max, r.d_max);
    res.stabilized = res.stabilized && r.stabilized;
    res.doublings = std::max(res.doublings, r.doublings);
}

inline void note_slack(CheckResult& res, ExtInt bound, ExtInt computed) {
    if (!bound.is_finite() || !computed.is_finite()) return;
    long long s = bound.value() - computed.value();
    if (!res.slack || s < *res.slack) res.slack = s;
}

template <class Fn>
CheckResult run_guarded(const char* name, FieldSpec spec, Fn&& body) {
    CheckResult res;
    res.check = name;
    res.field = validated(spec);
    try {
        body(res);
    } catch (const WindowInstabilityError& e) {
        res.window_unstable = true;
        res.pass = false;
        res.error = e.what();
    }
    return res;
}

}  // namespace detail

/// reg Tor_i(R/I, R/J) <= reg R/I + reg R/J + i for every 0 <= i <= n.
inline CheckResult verify_tor_bound(const MonomialIdeal& I, const MonomialIdeal& J, FieldSpec spec,
                                    bool permissive = false) {
    return detail::run_guarded("tor-bound", spec, [&](CheckResult& res) {
        detail::require_weakly_stable(I, "verify_tor_bound", permissive, res);
        detail::require_weakly_stable(J, "verify_tor_bound", permissive, res);
        res.inputs["I"] = ideal_to_json(I);
        res.inputs["J"] = ideal_to_json(J);
        int n = I.vars();
        with_field(spec, [&](auto field) {
            auto rI = reg_quotient_report(I, field);
            auto rJ = reg_quotient_report(J, field);
            detail::note_report(res, rI);
            detail::note_report(res, rJ);
            int regI = rI.reg.value(), regJ = rJ.reg.value();
            res.values["reg_R_mod_I"] = regI;
            res.values["reg_R_mod_J"] = regJ;
            auto tor = tor_regularities(I, J, n, field);
            res.pass = true;
            json tor_json = json::object(), bound_json = json::object();
            for (int i = 0; i <= n; ++i) {
                detail::note_report(res, tor[i]);
                ExtInt bound(regI + regJ + i);
                tor_json[std::to_string(i)] = extint_to_json(tor[i].reg);
                bound_json[std::to_string(i)] = extint_to_json(bound);
                if (!(tor[i].reg <= bound)) res.pass = false;
                detail::note_slack(res, bound, tor[i].reg);
            }
            res.values["tor_reg"] = tor_json;
            res.bounds["tor_reg"] = bound_json;
            return 0;
        });
    });
}

/// reg Ext^i(R/I, R) <= -i for every 0 <= i <= n.
inline CheckResult verify_ext_bound(const MonomialIdeal& I, FieldSpec spec, bool permissive = false) {
    return detail::run_guarded("ext-bound", spec, [&](CheckResult& res) {
        detail::require_weakly_stable(I, "verify_ext_bound", permissive, res);
        res.inputs["I"] = ideal_to_json(I);
        int n = I.vars();
        with_field(spec, [&](auto field) {
            res.pass = true;
            json ext_json = json::object(), bound_json = json::object();
            for (int i = 0; i <= n; ++i) {
                auto r = ext_regularity_report(I, i, field);
                detail::note_report(res, r);
                ExtInt bound(-i);
                ext_json[std::to_string(i)] = extint_to_json(r.reg);
                bound_json[std::to_string(i)] = extint_to_json(bound);
                if (!(r.reg <= bound)) res.pass = false;
                detail::note_slack(res, bound, r.reg);
            }
            res.values["ext_reg"] = ext_json;
            res.bounds["ext_reg"] = bound_json;
            return 0;
        });
    });
}

/// reg I^2 <= 2 reg I, with reg I^2 computed by the general Koszul route
/// (weak stability of I^2 is not assumed).
inline CheckResult verify_power_bound(const MonomialIdeal& I, FieldSpec spec, bool permissive = false) {
    return detail::run_guarded("power-bound", spec, [&](CheckResult& res) {
        detail::require_weakly_stable(I, "verify_power_bound", permissive, res);
        if (I.is_zero() || I.is_unit())
            throw PreconditionError("verify_power_bound: ideal must be proper and nonzero");
        res.inputs["I"] = ideal_to_json(I);
        with_field(spec, [&](auto field) {
            auto rI = reg_quotient_report(I, field);
            auto I2 = product(I, I);
            auto rI2 = reg_quotient_report(I2, field);
            detail::note_report(res, rI);
            detail::note_report(res, rI2);
            int reg_ideal_I = rI.reg.value() + 1;
            int reg_ideal_I2 = rI2.reg.value() + 1;
            res.values["reg_I"] = reg_ideal_I;
            res.values["reg_I2"] = reg_ideal_I2;
            res.bounds["reg_I2"] = 2 * reg_ideal_I;
            res.pass = reg_ideal_I2 <= 2 * reg_ideal_I;
            detail::note_slack(res, ExtInt(2 * reg_ideal_I), ExtInt(reg_ideal_I2));
            return 0;
        });
    });
}

/// The three short-exact-sequence inequalities on 0 -> I^2 -> I -> T_1 -> 0
/// with T_1 = Tor_1(R/I, R/I) = I/I^2.
inline CheckResult verify_ses_inequalities(const MonomialIdeal& I, FieldSpec spec,
                                           bool permissive = false) {
    return detail::run_guarded("ses", spec, [&](CheckResult& res) {
        detail::require_weakly_stable(I, "verify_ses_inequalities", permissive, res);
        if (I.is_zero() || I.is_unit())
            throw PreconditionError("verify_ses_inequalities: ideal must be proper and nonzero");
        res.inputs["I"] = ideal_to_json(I);
        with_field(spec, [&](auto field) {
            auto rM = reg_quotient_report(I, field);
            auto I2 = product(I, I);
            auto rL = reg_quotient_report(I2, field);
            auto tor = tor_regularities(I, I, 1, field);
            detail::note_report(res, rM);
            detail::note_report(res, rL);
            detail::note_report(res, tor[1]);
            ExtInt reg_L(rL.reg.value() + 1);  // reg I^2
            ExtInt reg_M(rM.reg.value() + 1);  // reg I
            ExtInt reg_N = tor[1].reg;         // reg T_1
            res.values["reg_L_I2"] = extint_to_json(reg_L);
            res.values["reg_M_I"] = extint_to_json(reg_M);
            res.values["reg_N_T1"] = extint_to_json(reg_N);
            bool a = reg_M <= max(reg_L, reg_N);
            bool b = reg_L <= max(reg_M, reg_N + 1);
            bool c = reg_N <= max(reg_M, reg_L - 1);
            res.values["ineq_mid"] = a;
            res.values["ineq_sub"] = b;
            res.values["ineq_quot"] = c;
            res.pass = a && b && c;
            return 0;
        });
    });
}

/// Weak stability holds iff every associated prime is an initial segment.
inline CheckResult verify_caviglia(const MonomialIdeal& I) {
    return detail::run_guarded("caviglia", FieldSpec{32003}, [&](CheckResult& res) {
        if (I.is_zero() || I.is_unit())
            throw PreconditionError("verify_caviglia: ideal must be proper and nonzero");
        res.inputs["I"] = ideal_to_json(I);
        bool ws = is_weakly_stable(I);
        auto ass = associated_primes(I);
        bool initial = true;
        json primes = json::array();
        for (const auto& p : ass) {
            primes.push_back(p);
            if (!is_initial_segment(p)) initial = false;
        }
        res.values["weakly_stable"] = ws;
        res.values["associated_primes"] = primes;
        res.values["all_initial_segments"] = initial;
        res.pass = ws == initial;
    });
}

/// (I : J) stays weakly stable when I is.
inline CheckResult verify_colon_stability(const MonomialIdeal& I, const MonomialIdeal& J) {
    return detail::run_guarded("colon-stability", FieldSpec{32003}, [&](CheckResult& res) {
        detail::require_weakly_stable(I, "verify_colon_stability", false, res);
        if (J.is_zero()) throw PreconditionError("verify_colon_stability: J must be nonzero");
        res.inputs["I"] = ideal_to_json(I);
        res.inputs["J"] = ideal_to_json(J);
        auto C = colon(I, J);
        res.values["colon"] = ideal_to_json(C);
        res.pass = is_weakly_stable(C);
        res.values["colon_weakly_stable"] = res.pass;
    });
}

/// For weakly stable I, saturating by the maximal ideal reaches the same
/// fixed point as saturating by the last variable.
inline CheckResult verify_saturation_claim(const MonomialIdeal& I) {
    return detail::run_guarded("saturation", FieldSpec{32003}, [&](CheckResult& res) {
        detail::require_weakly_stable(I, "verify_saturation_claim", false, res);
        if (I.is_unit() || I.vars() == 0)
            throw PreconditionError("verify_saturation_claim: ideal must be proper with n >= 1");
        res.inputs["I"] = ideal_to_json(I);
        MonomialIdeal m = maximal_ideal(I.vars());
        MonomialIdeal by_m = I;
        for (int guard = 0;; ++guard) {
            MonomialIdeal next = colon(by_m, m);
            if (next == by_m) break;
            by_m = next;
            if (guard > 512) throw Error("verify_saturation_claim: fixed point not reached");
        }
        auto by_var = saturate_variable(I, I.vars());
        res.values["saturate_by_m"] = ideal_to_json(by_m);
        res.values["saturate_by_xn"] = ideal_to_json(by_var);
        res.pass = by_m == by_var;
    });
}

/// Tor regularity is unchanged by an unused ambient variable.
inline CheckResult verify_flat_extension(const MonomialIdeal& I, const MonomialIdeal& J,
                                         FieldSpec spec) {
    return detail::run_guarded("flat-extension", spec, [&](CheckResult& res) {
        check_same_vars(I, J);
        int n = I.vars();
        for (const auto& g : I.generators())
            if (g.exponent(n) > 0) throw PreconditionError("verify_flat_extension: I involves x_n");
        for (const auto& g : J.generators())
            if (g.exponent(n) > 0) throw PreconditionError("verify_flat_extension: J involves x_n");
        if (I.is_zero() || I.is_unit() || J.is_zero() || J.is_unit())
            throw PreconditionError("verify_flat_extension: ideals must be proper and nonzero");
        res.inputs["I"] = ideal_to_json(I);
        res.inputs["J"] = ideal_to_json(J);
        auto Is = restrict(I);
        auto Js = restrict(J);
        with_field(spec, [&](auto field) {
            auto big = tor_regularities(I, J, n, field);
            auto small = tor_regularities(Is, Js, n - 1, field);
            for (auto& r : big) detail::note_report(res, r);
            res.pass = true;
            json big_json = json::object(), small_json = json::object();
            for (int i = 0; i <= n; ++i) {
                big_json[std::to_string(i)] = extint_to_json(big[i].reg);
                ExtInt small_reg = i <= n - 1 ? small[i].reg : ExtInt::neg_inf();
                small_json[std::to_string(i)] = extint_to_json(small_reg);
                if (!(big[i].reg == small_reg)) res.pass = false;
            }
            res.values["tor_reg_extended"] = big_json;
            res.values["tor_reg_restricted"] = small_json;
            return 0;
        });
    });
}

/// reg Tor_i(M, N) <= reg M + t_i(N) for finite-length M = R/I0 (I0
/// m-primary) and N = R/J; also the weaker consequence with reg N + i.
inline CheckResult verify_finite_length_tor(const MonomialIdeal& I0, const MonomialIdeal& J,
                                            FieldSpec spec) {
    return detail::run_guarded("finite-length-tor", spec, [&](CheckResult& res) {
        check_same_vars(I0, J);
        if (!is_m_primary(I0))
            throw PreconditionError("verify_finite_length_tor: M = R/I0 must have finite length");
        if (J.is_zero() || J.is_unit())
            throw PreconditionError("verify_finite_length_tor: J must be proper and nonzero");
        res.inputs["I0"] = ideal_to_json(I0);
        res.inputs["J"] = ideal_to_json(J);
        int n = I0.vars();
        with_field(spec, [&](auto field) {
            auto rM = reg_quotient_report(I0, field);
            detail::note_report(res, rM);
            int regM = rM.reg.value();
            // t_i(N) from the betti table of R/J
            auto w = default_window(J);
            auto MJ = quotient_module(J, field, w);
            auto BJ = betti_table(MJ);
            auto rN = regularity_from_betti(BJ);
            detail::note_report(res, rN);
            auto tor = tor_regularities(I0, J, n, field);
            res.pass = true;
            json tor_json = json::object(), bound_json = json::object();
            for (int i = 0; i <= n; ++i) {
                detail::note_report(res, tor[i]);
                ExtInt ti = rN.t.count(i) ? rN.t.at(i) : ExtInt::neg_inf();
                ExtInt bound = ti.is_finite() ? ExtInt(regM + ti.value()) : ExtInt::neg_inf();
                tor_json[std::to_string(i)] = extint_to_json(tor[i].reg);
                bound_json[std::to_string(i)] = extint_to_json(bound);
                if (!(tor[i].reg <= bound)) res.pass = false;
                // the stated consequence with reg N + i
                if (rN.reg.is_finite() && !(tor[i].reg <= ExtInt(regM + rN.reg.value() + i)))
                    res.pass = false;
                detail::note_slack(res, bound, tor[i].reg);
            }
            res.values["reg_M"] = regM;
            res.values["tor_reg"] = tor_json;
            res.bounds["tor_reg"] = bound_json;
            return 0;
        });
    });
}

/// Ext^i(M, R) = 0 for i < n and reg Ext^n(M, R) = -n - inf M, for M = R/I0
/// of finite length, via a minimal free resolution of the truncation.
inline CheckResult verify_finite_length_ext(const MonomialIdeal& I0, FieldSpec spec, int shift = 0) {
    return detail::run_guarded("finite-length-ext", spec, [&](CheckResult& res) {
        if (!is_m_primary(I0))
            throw PreconditionError("verify_finite_length_ext: M = R/I0 must have finite length");
        res.inputs["I0"] = ideal_to_json(I0);
        res.inputs["shift"] = shift;
        with_field(spec, [&](auto field) {
            auto w = default_window(I0);
            auto M = homology_module(taylor_complex(I0, field), 0, w.d_min, w.d_max);
            auto law = finite_length_ext_law(shift == 0 ? M : shift_module(M, shift));
            res.values["inf_M"] = extint_to_json(law.inf_m);
            res.values["ext_n_reg"] = extint_to_json(law.ext_reg);
            res.bounds["ext_n_reg"] = extint_to_json(law.expected);
            res.values["lower_ext_vanish"] = law.lower_ext_vanish;
            res.values["finite_rule_consistent"] = law.finite_rule_consistent;
            res.pass = law.pass;
            if (!law.failure.empty()) res.error = law.failure;
            return 0;
        });
    });
}

}  // namespace monreg
