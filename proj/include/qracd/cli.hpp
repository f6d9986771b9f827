// Copyright 2026 The qracd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRACD_CLI_HPP
#define QRACD_CLI_HPP

// Command-line front end: eval, sweep, search, witness, reproduce.
//
// Exit codes: 0 success, 1 argument error, 2 runtime or numerical error,
// 3 reproduction failure.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qracd/angle.hpp"
#include "qracd/discord.hpp"
#include "qracd/geodiscord.hpp"
#include "qracd/qrac.hpp"
#include "qracd/reproduce.hpp"
#include "qracd/search.hpp"

namespace qracd::cli {

enum ExitCode : int { kOk = 0, kArgError = 1, kRuntimeError = 2, kReproduceFailed = 3 };

/// Bad user input; maps to exit code 1.
class ArgumentError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Output could not be written; maps to exit code 2.
class OutputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

namespace detail {

inline Params parse_params(const std::string &text) {
    std::vector<Angle> angles;
    try {
        angles = parse_angle_list(text);
    } catch (const std::invalid_argument &e) {
        throw ArgumentError(std::string("--params: ") + e.what());
    }
    if (angles.size() != 6) {
        throw ArgumentError("--params: expected 6 comma-separated angles (d1,d2,d3,d4,phi1,phi2)");
    }
    Params p;
    for (int i = 0; i < 6; ++i) p[i] = angles[i].radians;
    return p;
}

inline Angle parse_angle_arg(const std::string &flag, const std::string &text) {
    try {
        return parse_angle(text);
    } catch (const std::invalid_argument &e) {
        throw ArgumentError(flag + ": " + e.what());
    }
}

inline Json vec_json(const Vec3 &v) { return Json::array({v[0], v[1], v[2]}); }

inline Json params_json(const Params &p) { return Json(std::vector<double>(p.begin(), p.end())); }

inline Json params_pi_json(const Params &p) {
    std::vector<double> out;
    for (double v : p) out.push_back(v / kPi);
    return Json(out);
}

/// Writes to --out when given, otherwise to the console stream.
inline void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw OutputError("cannot open '" + path + "' for writing");
    }
    f << text;
    f.flush();
    if (!f) {
        throw OutputError("failed writing '" + path + "'");
    }
}

/// Flattens a flat JSON object into a one-row CSV; arrays become name_0, name_1, ...
inline std::string json_to_csv_row(const Json &obj) {
    std::vector<std::string> head;
    std::vector<std::string> vals;
    for (const auto &[key, value] : obj.items()) {
        if (value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                head.push_back(key + "_" + std::to_string(i));
                vals.push_back(format_number(value[i].get<double>()));
            }
        } else if (value.is_number()) {
            head.push_back(key);
            vals.push_back(format_number(value.get<double>()));
        } else {
            head.push_back(key);
            vals.push_back(value.dump());
        }
    }
    std::string s;
    for (std::size_t i = 0; i < head.size(); ++i) s += (i ? "," : "") + head[i];
    s += "\n";
    for (std::size_t i = 0; i < vals.size(); ++i) s += (i ? "," : "") + vals[i];
    s += "\n";
    return s;
}

inline std::string render(const Json &obj, const std::string &format) {
    if (format == "csv") return json_to_csv_row(obj);
    return obj.dump(2) + "\n";
}

/// Appends flags from a flat JSON config for keys that the chosen
/// subcommand knows and the command line does not already set.
inline void apply_config(std::vector<std::string> &args, const CLI::App &app) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) return;
    std::ifstream f(path);
    if (!f) throw ArgumentError("--config: cannot read '" + path + "'");
    Json cfg;
    try {
        f >> cfg;
    } catch (const std::exception &e) {
        throw ArgumentError("--config: invalid JSON in '" + path + "': " + e.what());
    }
    if (!cfg.is_object()) throw ArgumentError("--config: top level must be an object");

    const CLI::App *sub = nullptr;
    for (const auto &a : args) {
        for (const CLI::App *s : app.get_subcommands([](const CLI::App *) { return true; })) {
            if (s->get_name() == a) sub = s;
        }
        if (sub != nullptr) break;
    }
    if (sub == nullptr) return;

    for (const auto &[key, value] : cfg.items()) {
        const std::string flag = "--" + key;
        if (sub->get_option_no_throw(flag) == nullptr) continue;
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string &a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (given) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
        } else if (value.is_string()) {
            args.push_back(flag);
            args.push_back(value.get<std::string>());
        } else if (value.is_number_integer()) {
            args.push_back(flag);
            args.push_back(std::to_string(value.get<long long>()));
        } else if (value.is_number()) {
            args.push_back(flag);
            args.push_back(format_number(value.get<double>(), 17));
        } else if (value.is_array()) {
            std::string joined;
            for (const auto &v : value) {
                if (!joined.empty()) joined += ",";
                joined += v.is_string() ? v.get<std::string>() : format_number(v.get<double>(), 17);
            }
            args.push_back(flag);
            args.push_back(joined);
        } else {
            throw ArgumentError("--config: unsupported value for '" + key + "'");
        }
    }
}

}  // namespace detail

struct EvalArgs {
    std::string params;
    std::string format = "json";
    std::string out;
};

inline Json eval_report(const Params &p) {
    const EncodingSet enc = encoding_from_params(p);
    const auto qd = quantum_discord(enc);
    const auto dec = bloch_decompose(enc);
    const auto w = witness_max_closed(enc);
    const auto spec = density_spectrum(assemble_cq_state(enc).dense());
    const double mi = mutual_information(enc);
    Json j;
    j["params"] = detail::params_json(p);
    j["params_pi"] = detail::params_pi_json(p);
    j["qd"] = qd.value;
    j["qd_argmin"] = detail::vec_json(qd.argmin.vec());
    j["mutual_information"] = mi;
    j["classical_correlation"] = mi - qd.value;
    j["gd"] = geometric_discord(enc);
    j["gd8"] = 8.0 * geometric_discord(enc);
    j["t_max"] = w.t_max;
    j["m0"] = detail::vec_json(w.m0.vec());
    j["m1"] = detail::vec_json(w.m1.vec());
    j["p_success"] = success_probability(enc, w.m0, w.m1);
    j["spectrum_rho_ab"] = spec.values();
    j["trace_g"] = trace(dec.g);
    return j;
}

inline int cmd_eval(const EvalArgs &a, std::ostream &out) {
    const Params p = detail::parse_params(a.params);
    detail::emit(a.out, detail::render(eval_report(p), a.format), out);
    return kOk;
}

struct SweepArgs {
    std::string from = "0";
    std::string to = "0.125pi";
    int steps = 101;
    std::string out;
    std::string format = "csv";
    bool theta = false;
    std::string params = "0,0,0,0,0,0";
};

inline std::string sweep_csv(const std::vector<SweepRecord> &rows) {
    std::string s = "delta,qd,gd8,t_minus_2\n";
    for (const auto &r : rows) {
        s += format_number(r.delta) + "," + format_number(r.qd) + "," + format_number(r.gd8) + "," +
             format_number(r.t_minus_2) + "\n";
    }
    return s;
}

inline std::string theta_csv(const std::vector<ThetaRecord> &rows) {
    std::string s = "theta,dtilde,derivative\n";
    for (const auto &r : rows) {
        s += format_number(r.theta) + "," + format_number(r.dtilde) + "," + format_number(r.derivative) + "\n";
    }
    return s;
}

inline int cmd_sweep(const SweepArgs &a, std::ostream &out) {
    if (a.steps < 2) throw ArgumentError("--steps must be at least 2");
    const double from = detail::parse_angle_arg("--from", a.from).radians;
    const double to = detail::parse_angle_arg("--to", a.to).radians;
    std::string text;
    if (a.theta) {
        const auto rows = sweep_theta(encoding_from_params(detail::parse_params(a.params)), from, to, a.steps);
        if (a.format == "json") {
            Json arr = Json::array();
            for (const auto &r : rows) arr.push_back({{"theta", r.theta}, {"dtilde", r.dtilde}, {"derivative", r.derivative}});
            text = arr.dump(2) + "\n";
        } else {
            text = theta_csv(rows);
        }
    } else {
        const auto rows = sweep_planar(from, to, a.steps);
        if (a.format == "json") {
            Json arr = Json::array();
            for (const auto &r : rows)
                arr.push_back({{"delta", r.delta}, {"qd", r.qd}, {"gd8", r.gd8}, {"t_minus_2", r.t_minus_2}});
            text = arr.dump(2) + "\n";
        } else {
            text = sweep_csv(rows);
        }
    }
    detail::emit(a.out, text, out);
    return kOk;
}

struct SearchArgs {
    std::string step;
    bool refine = false;
    std::string fine_step = "1e-4pi";
    bool planar = false;
    bool force = false;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::string out;
};

inline int cmd_search(const SearchArgs &a, std::ostream &out) {
    const Angle step = detail::parse_angle_arg("--step", a.step);
    if (!(step.radians > 0.0)) throw ArgumentError("--step must be positive");
    if (a.workers < 1) throw ArgumentError("--workers must be at least 1");
    GridSpec spec;
    spec.step = step.radians;
    spec.workers = a.workers;
    spec.force = a.force;
    if (a.planar) {
        spec.ranges[4] = ParamRange::pinned(0.0);
        spec.ranges[5] = ParamRange::pinned(0.0);
    }
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult res = grid_search_gd(spec);
    Json j;
    j["step"] = step.radians;
    j["step_pi"] = step.pi_multiple;
    j["best_params"] = detail::params_json(res.params);
    j["best_params_pi"] = detail::params_pi_json(res.params);
    j["gd8"] = res.gd8;
    j["t_max"] = res.t_max;
    j["evaluations"] = res.evaluations;
    if (a.refine) {
        const Angle fine = detail::parse_angle_arg("--fine-step", a.fine_step);
        if (!(fine.radians > 0.0)) throw ArgumentError("--fine-step must be positive");
        const SearchResult ref = refine_local(res.params, fine.radians);
        j["fine_step"] = fine.radians;
        j["fine_step_pi"] = fine.pi_multiple;
        j["refined_params"] = detail::params_json(ref.params);
        j["refined_params_pi"] = detail::params_pi_json(ref.params);
        j["refined_gd8"] = ref.gd8;
        j["refined_t_max"] = ref.t_max;
        j["refined_evaluations"] = ref.evaluations;
    }
    j["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail::emit(a.out, j.dump(2) + "\n", out);
    return kOk;
}

struct WitnessArgs {
    std::string params;
    std::string format = "json";
    std::string out;
};

inline int cmd_witness(const WitnessArgs &a, std::ostream &out) {
    const Params p = detail::parse_params(a.params);
    const EncodingSet enc = encoding_from_params(p);
    const auto closed = witness_max_closed(enc);
    const auto numeric = witness_max_numeric(enc);
    Json j;
    j["params"] = detail::params_json(p);
    j["params_pi"] = detail::params_pi_json(p);
    j["t_max"] = closed.t_max;
    j["m0"] = detail::vec_json(closed.m0.vec());
    j["m1"] = detail::vec_json(closed.m1.vec());
    j["p_success"] = success_probability(enc, closed.m0, closed.m1);
    j["t_max_numeric"] = numeric.t_max;
    j["m0_numeric"] = detail::vec_json(numeric.m0.vec());
    j["m1_numeric"] = detail::vec_json(numeric.m1.vec());
    j["t_minus_2"] = closed.t_max - 2.0;
    detail::emit(a.out, detail::render(j, a.format), out);
    return kOk;
}

struct ReproduceArgs {
    std::vector<std::string> only;
    double perturb = 0.0;
    unsigned workers = 8;
};

inline int cmd_reproduce(const ReproduceArgs &a, std::ostream &out) {
    const auto checks = reproduction_checks();
    for (const auto &name : a.only) {
        if (std::none_of(checks.begin(), checks.end(), [&](const CheckDef &c) { return c.name == name; })) {
            throw ArgumentError("--only: unknown check '" + name + "'");
        }
    }
    ReproduceOptions opts;
    opts.perturb = a.perturb;
    opts.workers = std::max(1u, a.workers);
    int run = 0;
    int failed = 0;
    for (const auto &c : checks) {
        if (!a.only.empty() && std::find(a.only.begin(), a.only.end(), c.name) == a.only.end()) continue;
        const auto rep = run_check(c, opts);
        print_report(out, rep);
        out.flush();
        ++run;
        if (!rep.pass) ++failed;
    }
    out << (failed == 0 ? "ALL PASS" : "FAILED") << " (" << run - failed << "/" << run << " checks passed)\n";
    return failed == 0 ? kOk : kReproduceFailed;
}

/// Parses args (without the program name) and runs the chosen subcommand.
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum discord, geometric discord and the dimension witness of 2->1 random access codes"};
    app.require_subcommand(1);
    // Lets --config appear after the subcommand name.
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "Flat JSON file of flag defaults; explicit flags win");

    EvalArgs eval_args;
    auto *eval = app.add_subcommand("eval", "Evaluate one encoding (d1,d2,d3,d4,phi1,phi2)");
    eval->add_option("--params", eval_args.params, "Six angles, e.g. 0.35pi,1.9pi,0.45pi,1.55pi,0.6pi,0.35pi")->required();
    eval->add_option("--format", eval_args.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    eval->add_option("--out", eval_args.out, "Output path (default stdout)");

    SweepArgs sweep_args;
    auto *sweep = app.add_subcommand("sweep", "Planar rotation sweep (or measurement-angle sweep with --theta)");
    sweep->add_option("--from", sweep_args.from, "Start angle")->capture_default_str();
    sweep->add_option("--to", sweep_args.to, "End angle (inclusive)")->capture_default_str();
    sweep->add_option("--steps", sweep_args.steps, "Number of points, >= 2")->capture_default_str();
    sweep->add_option("--out", sweep_args.out, "Output path (default stdout)");
    sweep->add_option("--format", sweep_args.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sweep->add_flag("--theta", sweep_args.theta, "Sweep the in-plane measurement angle instead");
    sweep->add_option("--params", sweep_args.params, "Encoding for --theta")->capture_default_str();

    SearchArgs search_args;
    auto *search = app.add_subcommand("search", "Six-parameter lattice search for maximal geometric discord");
    search->add_option("--step", search_args.step, "Lattice step, e.g. 0.1pi")->required();
    search->add_flag("--refine", search_args.refine, "Refine the lattice winner locally");
    search->add_option("--fine-step", search_args.fine_step, "Refinement step")->capture_default_str();
    search->add_flag("--planar", search_args.planar, "Pin phi1 = phi2 = 0");
    search->add_flag("--force", search_args.force, "Allow lattices above 1e9 cells");
    search->add_option("--workers", search_args.workers, "Worker threads")->capture_default_str();
    search->add_option("--out", search_args.out, "Output path (default stdout)");

    WitnessArgs witness_args;
    auto *witness = app.add_subcommand("witness", "Witness maximum, closed form and numeric");
    witness->add_option("--params", witness_args.params, "Six angles")->required();
    witness->add_option("--format", witness_args.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    witness->add_option("--out", witness_args.out, "Output path (default stdout)");

    ReproduceArgs repro_args;
    auto *repro = app.add_subcommand("reproduce", "Run the reproduction checklist");
    repro->add_option("--only", repro_args.only, "Run only the named checks");
    repro->add_option("--perturb", repro_args.perturb, "Shift every reference value (negative control)");
    repro->add_option("--workers", repro_args.workers, "Worker threads for the lattice search")->capture_default_str();

    try {
        detail::apply_config(args, app);
        std::vector<std::string> owned;
        owned.reserve(args.size() + 1);
        owned.emplace_back("qracd");
        owned.insert(owned.end(), args.begin(), args.end());
        std::vector<const char *> argv;
        for (const auto &s : owned) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kArgError;
    } catch (const ArgumentError &e) {
        err << "error: " << e.what() << "\n";
        return kArgError;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_args, out);
        if (sweep->parsed()) return cmd_sweep(sweep_args, out);
        if (search->parsed()) return cmd_search(search_args, out);
        if (witness->parsed()) return cmd_witness(witness_args, out);
        if (repro->parsed()) return cmd_reproduce(repro_args, out);
    } catch (const ArgumentError &e) {
        err << "error: " << e.what() << "\n";
        return kArgError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kArgError;
}

}  // namespace qracd::cli

#endif  // QRACD_CLI_HPP
