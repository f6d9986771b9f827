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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qracd/angle.hpp"
#include "qracd/cli.hpp"

namespace qracd {
namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp_path(const std::string &name) { return std::string(QRACD_TEST_TMPDIR) + "/" + name; }

std::string slurp(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

TEST(AngleParsing, Forms) {
    EXPECT_DOUBLE_EQ(parse_angle("0.35pi").radians, 0.35 * kPi);
    EXPECT_DOUBLE_EQ(parse_angle("pi").radians, kPi);
    EXPECT_DOUBLE_EQ(parse_angle("-pi").radians, -kPi);
    EXPECT_DOUBLE_EQ(parse_angle("1e-4pi").radians, 1e-4 * kPi);
    EXPECT_DOUBLE_EQ(parse_angle("0.7").radians, 0.7);
    EXPECT_DOUBLE_EQ(parse_angle(" 1.40pi ").pi_multiple, 1.40);
    EXPECT_DOUBLE_EQ(parse_angle("+2").radians, 2.0);
}

TEST(AngleParsing, PublishedValuesRoundTrip) {
    for (const char *s : {"1.40", "1.90", "0.30", "0.70", "0.60", "0.40", "0.35", "0.45", "1.55", "0.2509", "0.1980",
                          "0.3909", "1.6089", "0.6928", "0.3079"}) {
        const Angle a = parse_angle(std::string(s) + "pi");
        EXPECT_EQ(a.pi_multiple, std::stod(s)) << s;
        EXPECT_EQ(format_number(a.pi_multiple), format_number(std::stod(s))) << s;
    }
    EXPECT_EQ(format_number(parse_angle("0.2509pi").pi_multiple), "0.2509");
    EXPECT_EQ(format_number(parse_angle("1.6089pi").pi_multiple), "1.6089");
}

TEST(AngleParsing, Rejects) {
    for (const char *s : {"", "abc", "1.2.3pi", "pi2", "0.3 pi", "nan", "inf", "1e999", "0.1pix", "--1", ","}) {
        EXPECT_THROW(parse_angle(s), std::invalid_argument) << s;
    }
}

TEST(AngleParsing, Lists) {
    const auto v = parse_angle_list("0,0.5pi,pi");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_DOUBLE_EQ(v[2].radians, kPi);
    EXPECT_THROW(parse_angle_list("0,,1"), std::invalid_argument);
}

TEST(NumberFormat, TwelveSignificantDigits) {
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(2.0 * std::numbers::sqrt2 - 2.0), "0.828427124746");
    EXPECT_EQ(format_number(1e-20), "1e-20");
}

TEST(CliEval, OptimalEncoding) {
    const auto r = run_cli({"eval", "--params", "0,0,0,0,0,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["qd"].get<double>(), 0.5, 1e-9);
    EXPECT_NEAR(j["gd8"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(j["gd"].get<double>(), 1.0 / 16.0, 1e-12);
    EXPECT_NEAR(j["t_max"].get<double>(), 2.0 * std::numbers::sqrt2, 1e-12);
    EXPECT_NEAR(j["p_success"].get<double>(), (2.0 + std::numbers::sqrt2) / 4.0, 1e-12);
    EXPECT_NEAR(j["trace_g"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["mutual_information"].get<double>(), 1.0, 1e-12);
    ASSERT_EQ(j["spectrum_rho_ab"].size(), 8u);
    EXPECT_NEAR(j["spectrum_rho_ab"][0].get<double>(), 0.25, 1e-12);
    EXPECT_NEAR(j["spectrum_rho_ab"][7].get<double>(), 0.0, 1e-12);
    ASSERT_EQ(j["params_pi"].size(), 6u);
    ASSERT_EQ(j["qd_argmin"].size(), 3u);
}

TEST(CliEval, FinePublishedTuple) {
    const auto r = run_cli({"eval", "--params", "0.2509pi,0.1980pi,0.3909pi,1.6089pi,0.6928pi,0.3079pi"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["gd8"].get<double>(), 0.6649, 5e-4);
    EXPECT_NEAR(j["params_pi"][0].get<double>(), 0.2509, 1e-15);
}

TEST(CliEval, IdenticalStates) {
    const auto r = run_cli({"eval", "--params", "0,-0.75pi,-0.25pi,-0.5pi,0,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["qd"].get<double>(), 0.0, 1e-9);
    EXPECT_NEAR(j["gd8"].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(j["t_max"].get<double>(), 0.0, 1e-12);
}

TEST(CliEval, CsvFormat) {
    const auto r = run_cli({"eval", "--params", "0,0,0,0,0,0", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto nl = r.out.find('\n');
    ASSERT_NE(nl, std::string::npos);
    const std::string header = r.out.substr(0, nl);
    EXPECT_EQ(header.rfind("params_0,params_1", 0), 0u);
    EXPECT_NE(header.find(",gd8,"), std::string::npos);
    EXPECT_EQ(r.out.back(), '\n');
}

TEST(CliEval, ArgumentErrors) {
    EXPECT_EQ(run_cli({"eval", "--params", "0,0,0"}).code, 1);
    EXPECT_EQ(run_cli({"eval", "--params", "0,0,0,0,0,x"}).code, 1);
    EXPECT_EQ(run_cli({"eval"}).code, 1);
    EXPECT_EQ(run_cli({"eval", "--params", "0,0,0,0,0,0", "--format", "xml"}).code, 1);
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliEval, UnwritableOutput) {
    const auto r = run_cli({"eval", "--params", "0,0,0,0,0,0", "--out", tmp_path("no/such/dir/out.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(CliSweep, TwoStepsAndStableBytes) {
    const std::string a = tmp_path("sweep_a.csv");
    const std::string b = tmp_path("sweep_b.csv");
    ASSERT_EQ(run_cli({"sweep", "--from", "0", "--to", "0.125pi", "--steps", "2", "--out", a}).code, 0);
    ASSERT_EQ(run_cli({"sweep", "--from", "0", "--to", "0.125pi", "--steps", "2", "--out", b}).code, 0);
    const std::string text = slurp(a);
    EXPECT_EQ(text, slurp(b));
    EXPECT_EQ(text.find('\r'), std::string::npos);
    std::istringstream lines(text);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "delta,qd,gd8,t_minus_2");
    EXPECT_EQ(rows[1].rfind("0,0.5", 0), 0u);
    EXPECT_NE(rows[1].find(",0.5,0.828427124746"), std::string::npos);
    EXPECT_EQ(rows[2].rfind("0.392699081699,", 0), 0u);
}

TEST(CliSweep, FullSweepRowCount) {
    const auto r = run_cli({"sweep", "--from", "0", "--to", "0.125pi", "--steps", "101"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 102);
}

TEST(CliSweep, ThetaMode) {
    const auto r = run_cli({"sweep", "--theta", "--from", "0", "--to", "pi", "--steps", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("theta,dtilde,derivative\n0,0.600876036693,", 0), 0u) << r.out;
}

TEST(CliSweep, JsonFormat) {
    const auto r = run_cli({"sweep", "--steps", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_NEAR(j[0]["gd8"].get<double>(), 0.5, 1e-12);
}

TEST(CliSweep, ArgumentErrors) {
    EXPECT_EQ(run_cli({"sweep", "--steps", "1"}).code, 1);
    EXPECT_EQ(run_cli({"sweep", "--steps", "abc"}).code, 1);
    EXPECT_EQ(run_cli({"sweep", "--from", "0.1.2pi"}).code, 1);
}

TEST(CliSearch, CoarseLattice) {
    const auto r = run_cli({"search", "--step", "0.5pi", "--workers", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_LE(j["gd8"].get<double>(), 2.0 / 3.0 + 1e-9);
    EXPECT_EQ(j["evaluations"].get<std::uint64_t>(), 4096u);
    EXPECT_DOUBLE_EQ(j["step_pi"].get<double>(), 0.5);
    ASSERT_EQ(j["best_params_pi"].size(), 6u);
    EXPECT_TRUE(j.contains("wall_seconds"));
    EXPECT_FALSE(j.contains("refined_gd8"));
}

TEST(CliSearch, RefineAddsFields) {
    const auto r = run_cli({"search", "--step", "0.5pi", "--refine", "--fine-step", "1e-3pi"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_GE(j["refined_gd8"].get<double>(), j["gd8"].get<double>());
    EXPECT_EQ(j["refined_params"].size(), 6u);
}

TEST(CliSearch, PlanarPinsPhases) {
    const auto r = run_cli({"search", "--step", "0.25pi", "--planar"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["best_params"][4].get<double>(), 0.0);
    EXPECT_EQ(j["best_params"][5].get<double>(), 0.0);
    EXPECT_NEAR(j["gd8"].get<double>(), 0.5, 1e-12);
}

TEST(CliSearch, Errors) {
    EXPECT_EQ(run_cli({"search"}).code, 1);
    EXPECT_EQ(run_cli({"search", "--step", "0"}).code, 1);
    EXPECT_EQ(run_cli({"search", "--step", "-0.1pi"}).code, 1);
    EXPECT_EQ(run_cli({"search", "--step", "0.5pi", "--workers", "0"}).code, 1);
    const auto guard = run_cli({"search", "--step", "0.01pi"});
    EXPECT_EQ(guard.code, 2);
    EXPECT_NE(guard.err.find("force"), std::string::npos);
}

TEST(CliWitness, OptimalEncoding) {
    const auto r = run_cli({"witness", "--params", "0,0,0,0,0,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["t_max"].get<double>(), 2.0 * std::numbers::sqrt2, 1e-12);
    EXPECT_NEAR(j["t_max_numeric"].get<double>(), 2.0 * std::numbers::sqrt2, 1e-6);
    EXPECT_NEAR(j["p_success"].get<double>(), (2.0 + std::numbers::sqrt2) / 4.0, 1e-12);
}

TEST(CliConfig, FileSuppliesDefaultsAndFlagsWin) {
    const std::string cfg = tmp_path("config.json");
    {
        std::ofstream f(cfg);
        f << R"({"steps": 3, "to": "0.125pi", "params": "0,0,0,0,0,0", "unrelated": 5})";
    }
    auto r = run_cli({"--config", cfg, "sweep"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
    r = run_cli({"sweep", "--config", cfg, "--steps", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
    r = run_cli({"--config", cfg, "eval"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(nlohmann::json::parse(r.out)["gd8"].get<double>(), 0.5, 1e-12);
}

TEST(CliConfig, Errors) {
    EXPECT_EQ(run_cli({"--config", tmp_path("missing.json"), "sweep"}).code, 1);
    const std::string bad = tmp_path("bad.json");
    {
        std::ofstream f(bad);
        f << "{not json";
    }
    EXPECT_EQ(run_cli({"--config", bad, "sweep"}).code, 1);
}

TEST(CliReproduce, SingleCheckPasses) {
    const auto r = run_cli({"reproduce", "--only", "gd_optimal"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS gd_optimal"), std::string::npos);
    EXPECT_NE(r.out.find("ALL PASS (1/1"), std::string::npos);
}

TEST(CliReproduce, PerturbedReferenceFails) {
    const auto r = run_cli({"reproduce", "--only", "gd_optimal", "--perturb", "1e-3"});
    EXPECT_EQ(r.code, 3) << r.out;
    EXPECT_NE(r.out.find("FAIL gd_optimal"), std::string::npos);
}

TEST(CliReproduce, UnknownCheck) { EXPECT_EQ(run_cli({"reproduce", "--only", "nope"}).code, 1); }

}  // namespace
}  // namespace qracd
