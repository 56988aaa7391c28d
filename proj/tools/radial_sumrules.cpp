// Command-line front end: runs the configured check matrices and writes
// human- and machine-readable residual tables.

#include "CLI11.hpp"

#include "sumrules/report.hpp"
#include "sumrules/wavefunctions.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using namespace sumrules;

std::map<std::string, double> parse_param_list(const std::vector<std::string>& kvs) {
    std::map<std::string, double> out;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("bad --param '" + kv + "' (expected key=value)");
        out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return out;
}

std::pair<int, int> parse_range_arg(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "table") return OutputFormat::text_table;
    throw ConfigError("unknown format '" + name + "'");
}

int emit(const Report& report, OutputFormat format, const std::string& out_path) {
    std::ostringstream os;
    switch (format) {
    case OutputFormat::json: write_json(report, os); break;
    case OutputFormat::csv: write_csv(report, os); break;
    case OutputFormat::text_table: write_table(report, os); break;
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot open output file " << out_path << "\n";
            return 2;
        }
        f << os.str();
    }
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bound-state sum-rule and surface-term checks for the radial "
                 "Schrodinger equation"};
    app.require_subcommand(1);

    // ---- check ----
    auto* check = app.add_subcommand("check", "run identity checks over a state grid");
    std::vector<std::string> potentials, params, identities;
    std::string l_range = "0..1", nr_range = "0..1", n_range, config_path, out_path;
    std::string format_name = "table";
    std::optional<double> tol;
    bool use_numerov = false;
    check->add_option("--potential", potentials, "catalog potential id (repeatable)");
    check->add_option("--param", params, "parameter override key=value (repeatable)");
    check->add_option("--l", l_range, "orbital range, e.g. 1 or 0..2");
    check->add_option("--nr", nr_range, "radial quantum number range");
    check->add_option("--n", n_range, "principal quantum number range (n = n_r + l + 1)");
    check->add_option("--identity", identities, "identity filter (repeatable)");
    check->add_option("--config", config_path, "key = value config file");
    check->add_option("--format", format_name, "json | csv | table");
    check->add_option("--out", out_path, "write the report to a file");
    double tol_value = 0.0;
    auto* tol_opt = check->add_option("--tol", tol_value, "tolerance override");
    check->add_flag("--numerov", use_numerov, "force the shooting solver");

    // ---- verify-integrals ----
    auto* vint = app.add_subcommand("verify-integrals",
                                    "verify the closed-form integral identities");
    std::vector<std::string> integral_names;
    bool all_integrals = false, offshell = false;
    std::string vformat = "table", vout;
    vint->add_flag("--all", all_integrals, "verify all six identities");
    vint->add_option("--id", integral_names, "identity name (repeatable)");
    vint->add_flag("--offshell", offshell, "include the 1% off-shell controls");
    vint->add_option("--format", vformat, "json | csv | table");
    vint->add_option("--out", vout, "write the report to a file");

    // ---- spectrum ----
    auto* spectrum_cmd = app.add_subcommand("spectrum", "print bound-state energies");
    std::string spot, sl = "0", snr = "0..2", smethod = "auto";
    std::vector<std::string> sparams;
    spectrum_cmd->add_option("--potential", spot, "catalog potential id")->required();
    spectrum_cmd->add_option("--param", sparams, "parameter override key=value");
    spectrum_cmd->add_option("--l", sl, "orbital range");
    spectrum_cmd->add_option("--nr", snr, "radial quantum number range");
    spectrum_cmd->add_option("--method", smethod, "auto | analytic | numerov");

    // ---- dump-wf ----
    auto* dump = app.add_subcommand("dump-wf", "write an (r, R) table as CSV");
    std::string dpot, dout;
    std::vector<std::string> dparams;
    int dnr = 0, dl = 0, dpoints = 400;
    double drmax = 0.0;
    dump->add_option("--potential", dpot, "catalog potential id")->required();
    dump->add_option("--param", dparams, "parameter override key=value");
    dump->add_option("--nr", dnr, "radial quantum number");
    dump->add_option("--l", dl, "orbital quantum number");
    dump->add_option("--points", dpoints, "number of radial samples");
    dump->add_option("--rmax", drmax, "table extent (default: quadrature cutoff)");
    dump->add_option("--out", dout, "output file (default stdout)");

    // ---- audit-constants ----
    app.add_subcommand("audit-constants",
                       "print the recurrence-normalization audit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            RunConfig cfg;
            if (!config_path.empty()) {
                std::ifstream f(config_path);
                if (!f) {
                    std::cerr << "cannot open config " << config_path << "\n";
                    return 2;
                }
                cfg = parse_run_config(f);
            }
            for (const auto& name : potentials) {
                potential_id_from_string(name);
                cfg.potentials.push_back({name, parse_param_list(params)});
            }
            if (cfg.potentials.empty())
                throw ConfigError("no potential given (use --potential or --config)");
            if (check->count("--l")) std::tie(cfg.l_lo, cfg.l_hi) = parse_range_arg(l_range);
            if (check->count("--nr")) std::tie(cfg.nr_lo, cfg.nr_hi) = parse_range_arg(nr_range);
            if (!n_range.empty()) cfg.principal_n = parse_range_arg(n_range);
            for (const auto& name : identities) {
                if (std::find(known_identity_names().begin(),
                              known_identity_names().end(),
                              name) == known_identity_names().end())
                    throw ConfigError("unknown identity '" + name + "'");
                cfg.identities.push_back(name);
            }
            if (check->count("--format")) cfg.format = parse_format(format_name);
            if (tol_opt->count()) cfg.tol_override = tol_value;
            if (use_numerov) cfg.prefer_numerov = true;
            apply_env_tolerance(cfg);
            return emit(run_checks(cfg), cfg.format, out_path);
        }

        if (vint->parsed()) {
            std::vector<IntegralId> ids;
            if (all_integrals || integral_names.empty()) {
                ids = {IntegralId::bessel_main,     IntegralId::bessel_weighted,
                       IntegralId::hulthen,         IntegralId::morse_potential,
                       IntegralId::morse_virial,    IntegralId::woods_saxon};
            } else {
                for (const auto& name : integral_names)
                    ids.push_back(integral_id_from_string(name));
            }
            return emit(run_integrals(ids, offshell), parse_format(vformat), vout);
        }

        if (spectrum_cmd->parsed()) {
            const auto spec = make_potential(spot, parse_param_list(sparams));
            const auto [llo, lhi] = parse_range_arg(sl);
            const auto [nlo, nhi] = parse_range_arg(snr);
            std::printf("%-22s %-4s %-4s %-22s %-11s %s\n", "potential", "l",
                        "n_r", "energy", "method", "condition_residual");
            bool any = false;
            for (int l = llo; l <= lhi; ++l) {
                for (int nr = nlo; nr <= nhi; ++nr) {
                    try {
                        BoundState st;
                        if (smethod != "numerov" && has_analytic_spectrum(spec, l))
                            st = solve_analytic(spec, nr, l);
                        else if (smethod == "analytic")
                            throw UnsupportedFormError("no analytic spectrum here");
                        else
                            st = numerov_solve(spec, l, nr).state;
                        std::string condtxt = "-";
                        if (st.method == SolveMethod::root_find) {
                            char cbuf[24];
                            std::snprintf(cbuf, sizeof cbuf, "%.2e",
                                          eigencondition_residual(st));
                            condtxt = cbuf;
                        }
                        std::printf("%-22s %-4d %-4d %-22.15g %-11s %s\n",
                                    spot.c_str(), l, nr, st.energy,
                                    st.method == SolveMethod::closed_form ? "closed"
                                    : st.method == SolveMethod::root_find ? "root_find"
                                                                          : "numerov",
                                    condtxt.c_str());
                        any = true;
                    } catch (const NoBoundStateError& err) {
                        std::printf("%-22s %-4d %-4d no bound state (%s)\n",
                                    spot.c_str(), l, nr, err.what());
                    } catch (const HardSingularError&) {
                        std::printf("%-22s %-4d %-4d hard-singular at this l\n",
                                    spot.c_str(), l, nr);
                    }
                }
            }
            return any ? 0 : 1;
        }

        if (dump->parsed()) {
            const auto spec = make_potential(dpot, parse_param_list(dparams));
            const auto wf = build_wavefunction(spec, dnr, dl);
            if (dout.empty()) {
                dump_wavefunction_csv(wf, std::cout, dpoints, drmax);
            } else {
                std::ofstream f(dout);
                if (!f) {
                    std::cerr << "cannot open output file " << dout << "\n";
                    return 2;
                }
                dump_wavefunction_csv(wf, f, dpoints, drmax);
            }
            return 0;
        }

        // audit-constants
        const auto audit = audit_constants();
        std::printf("recurrence-normalization audit\n");
        std::printf("  adopted form: (2m/hbar^2){<r^{s+1}V'> + 2(s+1)[<r^s V> - "
                    "E<r^s>]} + (s/2)[(2P)^2 - s^2]<r^{s-2}> = (2P)^2 a_st^2 "
                    "delta_{2P,-s}\n");
        std::printf("  anchor 1 (virial, s = 0, hydrogen 1s):   residual %.3e\n",
                    audit.virial_anchor_residual);
        std::printf("  anchor 2 (s = -1, l = 0, hydrogen 1s):   residual %.3e\n",
                    audit.kramers_anchor_residual);
        std::printf("\n  %-12s %-55s %10s %10s %12s\n", "equation", "quantity",
                    "printed", "required", "measured");
        for (const auto& row : audit.rows) {
            std::printf("  %-28s %-55s %10.4g %10.4g %12.8g\n",
                        row.statement.c_str(), row.what.c_str(), row.literal,
                        row.required, row.measured);
            std::printf("  %-28s   note: %s\n", "", row.note.c_str());
        }
        const bool ok = audit.virial_anchor_residual < 1e-8 &&
                        audit.kramers_anchor_residual < 1e-8;
        std::printf("\n  anchors %s\n", ok ? "reproduced" : "FAILED");
        return ok ? 0 : 1;
    } catch (const ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
