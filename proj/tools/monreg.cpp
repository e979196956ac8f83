// monreg: exact regularity, Tor/Ext, and weak-stability computations for
// monomial ideals. Exit codes: 0 success/pass, 1 theorem-check failure,
// 2 usage or precondition error, 3 window instability.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "monreg/monreg.hpp"

namespace {

using namespace monreg;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWindow = 3;

MonomialIdeal load_ideal(const std::string& arg, std::optional<int> vars) {
    if (arg == "-") return read_ideal(std::cin);
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw PreconditionError("cannot open ideal file `" + arg + "`");
        return read_ideal(in);
    }
    if (arg.find('\n') == std::string::npos && arg.size() > 4 &&
        (arg.ends_with(".txt") || arg.ends_with(".ideal")))
        throw PreconditionError("ideal file `" + arg + "` not found");
    if (!vars) throw PreconditionError("inline generator lists need --vars");
    return parse_generators(arg, *vars);
}

std::optional<Window> parse_window(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto colon_pos = text.find(':');
    try {
        if (colon_pos == std::string::npos) return Window{0, std::stoi(text)};
        return Window{std::stoi(text.substr(0, colon_pos)), std::stoi(text.substr(colon_pos + 1))};
    } catch (const std::exception&) {
        throw PreconditionError("bad --window, expected MAX or MIN:MAX");
    }
}

struct CommonOpts {
    std::uint32_t characteristic = 32003;
    std::optional<int> vars;
    std::string window_text;
    bool json_output = false;

    FieldSpec field() const { return validated(FieldSpec{characteristic}); }
    std::optional<Window> window() const { return parse_window(window_text); }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_field = true) {
    cmd->add_option("--vars", opts.vars, "ambient variable count for inline generator lists");
    cmd->add_flag("--json", opts.json_output, "emit JSON instead of text");
    if (with_field) {
        cmd->add_option("--char,--field", opts.characteristic,
                        "field characteristic: 0 for the rationals, else a prime (default 32003)");
        cmd->add_option("--window", opts.window_text, "degree window override, MAX or MIN:MAX");
    }
}

json regularity_report_json(const RegularityReport& R) {
    json j;
    j["reg"] = extint_to_json(R.reg);
    json t = json::object();
    for (const auto& [i, ti] : R.t) t[std::to_string(i)] = extint_to_json(ti);
    j["t"] = t;
    j["window"] = {{"d_min", R.d_min}, {"d_max", R.d_max}, {"stabilized", R.stabilized},
                   {"doublings", R.doublings}};
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"exact regularity / Tor / Ext computations for monomial ideals"};
    app.require_subcommand(1);

    // check-stability
    auto opts_stab = std::make_shared<CommonOpts>();
    std::string stab_ideal;
    auto* stab = app.add_subcommand("check-stability", "decide weak stability of an ideal");
    stab->add_option("ideal", stab_ideal, "ideal file, `-`, or inline generators")->required();
    add_common(stab, *opts_stab, /*with_field=*/false);

    // reg
    auto opts_reg = std::make_shared<CommonOpts>();
    std::string reg_ideal_arg;
    bool reg_recursive = false;
    auto* regc = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of R/I and I");
    regc->add_option("ideal", reg_ideal_arg)->required();
    regc->add_flag("--recursive", reg_recursive,
                   "use the combinatorial recursion for weakly stable ideals (no linear algebra)");
    add_common(regc, *opts_reg);

    // betti
    auto opts_betti = std::make_shared<CommonOpts>();
    std::string betti_ideal_arg;
    auto* bettic = app.add_subcommand("betti", "graded Betti table of R/I");
    bettic->add_option("ideal", betti_ideal_arg)->required();
    add_common(bettic, *opts_betti);

    // tor-reg
    auto opts_tor = std::make_shared<CommonOpts>();
    std::string tor_i_arg, tor_j_arg;
    int tor_index = -1;
    auto* torc = app.add_subcommand("tor-reg", "regularity of Tor_i(R/I, R/J)");
    torc->add_option("I", tor_i_arg)->required();
    torc->add_option("J", tor_j_arg)->required();
    torc->add_option("--i", tor_index, "homological index")->required();
    add_common(torc, *opts_tor);

    // ext-reg
    auto opts_ext = std::make_shared<CommonOpts>();
    std::string ext_ideal_arg;
    int ext_index = -1;
    auto* extc = app.add_subcommand("ext-reg", "regularity of Ext^i(R/I, R)");
    extc->add_option("I", ext_ideal_arg)->required();
    extc->add_option("--i", ext_index, "cohomological index")->required();
    add_common(extc, *opts_ext);

    // ass
    auto opts_ass = std::make_shared<CommonOpts>();
    std::string ass_ideal_arg;
    auto* assc = app.add_subcommand("ass", "associated primes of R/I");
    assc->add_option("ideal", ass_ideal_arg)->required();
    add_common(assc, *opts_ass, /*with_field=*/false);

    // decompose
    auto opts_dec = std::make_shared<CommonOpts>();
    std::string dec_ideal_arg;
    auto* decc = app.add_subcommand("decompose", "irredundant irreducible decomposition");
    decc->add_option("ideal", dec_ideal_arg)->required();
    add_common(decc, *opts_dec, /*with_field=*/false);

    // verify
    auto opts_ver = std::make_shared<CommonOpts>();
    std::string verify_check;
    std::vector<std::string> verify_args;
    bool verify_permissive = false;
    auto* verc = app.add_subcommand("verify", "run one named theorem check");
    verc->add_option("checkname", verify_check,
                     "tor-bound | ext-bound | power-bound | ses | caviglia | colon-stability | "
                     "saturation | flat-extension | finite-length-tor | finite-length-ext")
        ->required();
    verc->add_option("ideals", verify_args, "one or two ideal arguments")->expected(1, 2);
    verc->add_flag("--permissive", verify_permissive,
                   "run even on non-weakly-stable inputs, recording findings");
    add_common(verc, *opts_ver);

    // scan
    ScanConfig scan_cfg;
    bool scan_general = false;
    bool scan_json = false;
    std::vector<std::string> scan_checks;
    auto* scanc = app.add_subcommand("scan", "randomized theorem scanning with a JSON report");
    scanc->add_option("--seed", scan_cfg.seed, "RNG seed (reports are byte-identical per seed)");
    scanc->add_option("--count", scan_cfg.count, "number of random instances");
    scanc->add_option("--n-min", scan_cfg.n_min);
    scanc->add_option("--n-max", scan_cfg.n_max);
    scanc->add_option("--deg-min", scan_cfg.deg_min);
    scanc->add_option("--deg-max", scan_cfg.deg_max);
    scanc->add_option("--gens-min", scan_cfg.gens_min);
    scanc->add_option("--gens-max", scan_cfg.gens_max);
    scanc->add_option("--max-completed-gens", scan_cfg.completed_max_gens,
                      "reject weakly stable completions with more generators");
    scanc->add_option("--checks", scan_checks, "comma-separated check names")->delimiter(',');
    scanc->add_option("--char,--field", scan_cfg.field.characteristic, "field characteristic");
    scanc->add_flag("--general", scan_general, "draw general (not weakly-stable-completed) ideals");
    scanc->add_flag("--permissive", scan_cfg.permissive, "record precondition findings instead of failing");
    scanc->add_option("--threads", scan_cfg.threads, "worker thread cap");
    scanc->add_flag("--json", scan_json, "emit the full JSON report (default: summary text)");

    CLI11_PARSE(app, argc, argv);

    if (stab->parsed()) {
        auto I = load_ideal(stab_ideal, opts_stab->vars);
        bool ws = is_weakly_stable(I);
        if (opts_stab->json_output)
            emit({{"ideal", ideal_to_json(I)}, {"weakly_stable", ws}});
        else
            std::cout << "weakly stable: " << (ws ? "true" : "false") << "\n";
        return kExitPass;
    }

    if (regc->parsed()) {
        auto I = load_ideal(reg_ideal_arg, opts_reg->vars);
        if (reg_recursive) {
            int r = reg_weakly_stable_recursive(I);
            if (opts_reg->json_output)
                emit({{"ideal", ideal_to_json(I)}, {"reg_quotient", r}, {"reg_ideal", r + 1},
                      {"route", "recursive"}});
            else
                std::cout << "reg R/I = " << r << "\nreg I = " << r + 1 << "\n";
            return kExitPass;
        }
        auto R = with_field(opts_reg->field(), [&](auto field) {
            return reg_quotient_report(I, field, opts_reg->window());
        });
        if (opts_reg->json_output) {
            json j = regularity_report_json(R);
            j["ideal"] = ideal_to_json(I);
            j["reg_quotient"] = extint_to_json(R.reg);
            j["reg_ideal"] = extint_to_json(R.reg + 1);
            emit(j);
        } else {
            std::cout << "reg R/I = " << R.reg.str() << "\nreg I = " << (R.reg + 1).str() << "\n";
        }
        return kExitPass;
    }

    if (bettic->parsed()) {
        auto I = load_ideal(betti_ideal_arg, opts_betti->vars);
        if (!I.is_proper() || I.is_zero())
            throw PreconditionError("betti: ideal must be proper and nonzero");
        auto B = with_field(opts_betti->field(), [&](auto field) {
            Window w = opts_betti->window().value_or(default_window(I));
            auto M = homology_module(taylor_complex(I, field), 0, w.d_min, w.d_max);
            return betti_table(M);
        });
        if (opts_betti->json_output) {
            json entries = json::array();
            for (const auto& [ij, b] : B.entries)
                entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
            emit({{"ideal", ideal_to_json(I)},
                  {"entries", entries},
                  {"window", {{"d_min", B.d_min}, {"d_max", B.d_max}, {"stabilized", B.stabilized}}}});
        } else {
            std::cout << render_betti_text(B);
        }
        return kExitPass;
    }

    if (torc->parsed()) {
        auto I = load_ideal(tor_i_arg, opts_tor->vars);
        auto J = load_ideal(tor_j_arg, opts_tor->vars);
        auto r = with_field(opts_tor->field(), [&](auto field) {
            return tor_regularity(I, J, tor_index, field, opts_tor->window());
        });
        if (opts_tor->json_output)
            emit({{"I", ideal_to_json(I)}, {"J", ideal_to_json(J)}, {"i", tor_index},
                  {"tor_reg", extint_to_json(r)}});
        else
            std::cout << r.str() << "\n";
        return kExitPass;
    }

    if (extc->parsed()) {
        auto I = load_ideal(ext_ideal_arg, opts_ext->vars);
        auto r = with_field(opts_ext->field(), [&](auto field) {
            return ext_regularity(I, ext_index, field, opts_ext->window());
        });
        if (opts_ext->json_output)
            emit({{"I", ideal_to_json(I)}, {"i", ext_index}, {"ext_reg", extint_to_json(r)}});
        else
            std::cout << r.str() << "\n";
        return kExitPass;
    }

    if (assc->parsed()) {
        auto I = load_ideal(ass_ideal_arg, opts_ass->vars);
        auto primes = associated_primes(I);
        if (opts_ass->json_output) {
            json arr = json::array();
            for (const auto& p : primes) arr.push_back(p);
            emit({{"ideal", ideal_to_json(I)}, {"associated_primes", arr}});
        } else {
            for (const auto& p : primes) {
                std::cout << "(";
                for (size_t k = 0; k < p.size(); ++k) std::cout << (k ? "," : "") << "x" << p[k];
                std::cout << ")\n";
            }
        }
        return kExitPass;
    }

    if (decc->parsed()) {
        auto I = load_ideal(dec_ideal_arg, opts_dec->vars);
        auto comps = irreducible_decomposition(I);
        if (opts_dec->json_output) {
            json arr = json::array();
            for (const auto& c : comps) arr.push_back(ideal_to_json(c));
            emit({{"ideal", ideal_to_json(I)}, {"components", arr}});
        } else {
            for (const auto& c : comps) std::cout << c.str() << "\n";
        }
        return kExitPass;
    }

    if (verc->parsed()) {
        auto need = [&](size_t k) {
            if (verify_args.size() != k)
                throw PreconditionError("verify " + verify_check + ": expected " + std::to_string(k) +
                                        " ideal argument(s)");
        };
        FieldSpec spec = opts_ver->field();
        CheckResult res;
        auto arg = [&](size_t k) { return load_ideal(verify_args[k], opts_ver->vars); };
        if (verify_check == "tor-bound") {
            need(2);
            res = verify_tor_bound(arg(0), arg(1), spec, verify_permissive);
        } else if (verify_check == "ext-bound") {
            need(1);
            res = verify_ext_bound(arg(0), spec, verify_permissive);
        } else if (verify_check == "power-bound") {
            need(1);
            res = verify_power_bound(arg(0), spec, verify_permissive);
        } else if (verify_check == "ses") {
            need(1);
            res = verify_ses_inequalities(arg(0), spec, verify_permissive);
        } else if (verify_check == "caviglia") {
            need(1);
            res = verify_caviglia(arg(0));
        } else if (verify_check == "colon-stability") {
            need(2);
            res = verify_colon_stability(arg(0), arg(1));
        } else if (verify_check == "saturation") {
            need(1);
            res = verify_saturation_claim(arg(0));
        } else if (verify_check == "flat-extension") {
            need(2);
            res = verify_flat_extension(arg(0), arg(1), spec);
        } else if (verify_check == "finite-length-tor") {
            need(2);
            res = verify_finite_length_tor(arg(0), arg(1), spec);
        } else if (verify_check == "finite-length-ext") {
            need(1);
            res = verify_finite_length_ext(arg(0), spec);
        } else {
            throw PreconditionError("verify: unknown check `" + verify_check + "`");
        }
        if (opts_ver->json_output)
            emit(res.to_json());
        else
            std::cout << res.check << ": " << (res.pass ? "pass" : "FAIL")
                      << (res.window_unstable ? " (window unstable)" : "")
                      << (res.error.empty() ? "" : " - " + res.error) << "\n";
        if (res.window_unstable) return kExitWindow;
        return res.pass ? kExitPass : kExitCheckFailed;
    }

    if (scanc->parsed()) {
        if (!scan_checks.empty()) scan_cfg.checks = scan_checks;
        if (scan_general) scan_cfg.weakly_stable_inputs = false;
        auto report = scan(scan_cfg);
        if (scan_json) {
            std::cout << scan_report_text(report);
        } else {
            const auto& s = report["summary"];
            std::cout << "scan: " << s["total"] << " checks, " << s["passed"] << " passed, "
                      << s["failed"] << " failed, " << s["violations"] << " findings, "
                      << s["window_unstable"] << " window-unstable\n";
        }
        if (report["summary"]["failed"].get<long long>() > 0) return kExitCheckFailed;
        if (report["summary"]["window_unstable"].get<long long>() > 0) return kExitWindow;
        return kExitPass;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const monreg::WindowInstabilityError& e) {
        std::cerr << "window instability: " << e.what() << "\n";
        return kExitWindow;
    } catch (const monreg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const monreg::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const monreg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
