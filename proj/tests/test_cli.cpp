// Copyright 2026 The steerkit Authors
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

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

#ifndef STEERKIT_CLI_PATH
#error "STEERKIT_CLI_PATH must be defined"
#endif

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(STEERKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        output.append(buf.data(), got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const json& doc) {
    const std::string path = "cli_test_" + name + ".json";
    std::ofstream out(path);
    out << doc.dump();
    return path;
}

}  // namespace

TEST_CASE("decompose: FR matrix") {
    const double c = 1.0 / std::sqrt(3.0);
    const json doc = {{"matrix", {{c, c}, {c, 0.0}}}};
    const auto path = write_temp("fr_matrix", doc);
    const auto result = run("decompose --json --input " + path);
    CHECK(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["outputs"]["spectrum"][0].get<double>() ==
          doctest::Approx((3.0 - std::sqrt(5.0)) / 6.0).epsilon(1e-10));
    CHECK(report["outputs"]["spectrum"][1].get<double>() ==
          doctest::Approx((3.0 + std::sqrt(5.0)) / 6.0).epsilon(1e-10));
    std::remove(path.c_str());
}

TEST_CASE("decompose: inline identity matrix and error paths") {
    const double c = 1.0 / std::sqrt(2.0);
    char inline_arg[128];
    std::snprintf(inline_arg, sizeof(inline_arg), "--matrix '%.17g,0;0,%.17g'", c, c);
    const auto ok = run(std::string("decompose --json ") + inline_arg);
    CHECK(ok.exit_code == 0);
    const json report = json::parse(ok.output);
    CHECK(report["outputs"]["spectrum"][0].get<double>() ==
          doctest::Approx(0.5).epsilon(1e-12));

    CHECK(run("decompose --matrix 'not,a;number,s'").exit_code == 2);
    CHECK(run("decompose --matrix '1,0;0,1'").exit_code == 3);  // norm sqrt(2)
}

TEST_CASE("overlap: values and exit codes") {
    const auto ok = run("overlap --json --spectrum 0.333333333333333,0.666666666666667 "
                        "--phi 0.70710678118654752,0.70710678118654752");
    CHECK(ok.exit_code == 0);
    const json report = json::parse(ok.output);
    CHECK(report["outputs"]["overlap"].get<double>() ==
          doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-9));
    CHECK(report["outputs"]["P_beta"].get<double>() ==
          doctest::Approx(0.5).epsilon(1e-9));
    CHECK(report["outputs"]["P_alpha"].get<double>() ==
          doctest::Approx(4.0 / 9.0).epsilon(1e-9));

    const auto uniform = run("overlap --json --spectrum 0.5,0.5 --phi 0.6,0.8");
    CHECK(json::parse(uniform.output)["outputs"]["overlap"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-12));

    const auto basis = run("overlap --json --spectrum 0.3,0.7 --phi 1,0");
    CHECK(json::parse(basis.output)["outputs"]["overlap"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-12));

    // phi on a zero coefficient: steering impossible (exit 5); phi entirely
    // off support: zero probability (exit 4).
    CHECK(run("overlap --spectrum 0,1 --phi 0.6,0.8").exit_code == 5);
    CHECK(run("overlap --spectrum 0,1 --phi 1,0").exit_code == 4);
}

TEST_CASE("min-overlap: closed form vs oracle") {
    const auto result = run("min-overlap --json --seed 7 --samples 20000 "
                            "--spectrum 0.1,0.2,0.7");
    CHECK(result.exit_code == 0);
    const json report = json::parse(result.output);
    const double closed = report["outputs"]["closed_form"].get<double>();
    CHECK(closed == doctest::Approx(2.0 * std::sqrt(0.07) / 0.8).epsilon(1e-12));
    CHECK(std::abs(report["outputs"]["oracle_value"].get<double>() - closed) < 1e-6);
    CHECK(report["outputs"]["reduction_value"].get<double>() ==
          doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("min-overlap: deterministic structured output") {
    const std::string args = "min-overlap --json --seed 42 --samples 5000 "
                             "--spectrum 0.1,0.2,0.7";
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("STEERKIT_SEED env fallback") {
    const auto with_flag = run("min-overlap --json --seed 77 --samples 2000 "
                               "--spectrum 0.3,0.7");
    const std::string cmd = std::string("STEERKIT_SEED=77 ") + STEERKIT_CLI_PATH +
                            " min-overlap --json --samples 2000 --spectrum 0.3,0.7";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        output.append(buf.data(), got);
    pclose(pipe);
    CHECK(output == with_flag.output);
}

TEST_CASE("ladder subcommand") {
    const auto result = run("ladder --json --spectrum 0.333333333333333,0.666666666666667 "
                            "--psi0 0.70710678118654752,0.70710678118654752");
    CHECK(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["outputs"]["converged"].get<bool>());
    const auto limit = report["outputs"]["limit"];
    CHECK(std::abs(limit[0][0].get<double>()) < 1e-6);
    CHECK(std::abs(std::abs(limit[1][0].get<double>()) - 1.0) < 1e-6);
    CHECK(report["outputs"]["agreement"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-8));

    const auto uniform = run("ladder --json --spectrum 0.5,0.5 --psi0 0.6,0.8");
    CHECK(json::parse(uniform.output)["outputs"]["steps_taken"].get<int>() == 0);

    CHECK(run("ladder --spectrum 0,1 --psi0 1,0").exit_code == 4);
}

TEST_CASE("fr subcommand") {
    const auto result = run("fr --json");
    CHECK(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["outputs"]["p_ok_ok"].get<double>() ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(report["outputs"]["p_naive"].get<double>() == 0.0);
    const auto chain = report["outputs"]["inference_chain"];
    REQUIRE(chain.size() == 3);
    CHECK(chain[1]["agent"] == "Alice-inferred");
    double total = 0.0;
    for (const auto& [key, value] : report["outputs"]["outcome_table"].items())
        total += value.get<double>();
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("classify subcommand") {
    const json steering_doc = {
        {"spectrum", {1.0 / 3.0, 2.0 / 3.0}},
        {"states",
         {{1.0, 0.0},
          {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}}}};
    const auto path = write_temp("classify", steering_doc);
    const auto result = run("classify --json --input " + path);
    CHECK(result.exit_code == 0);
    CHECK(json::parse(result.output)["outputs"]["classification"] ==
          "ConsistentWithSteering");
    std::remove(path.c_str());
}

TEST_CASE("structured output round-trips and echoes inputs") {
    const auto result = run("overlap --json --spectrum 0.3,0.7 --phi 0.6,0.8");
    const json report = json::parse(result.output);
    CHECK(report["command"] == "overlap");
    CHECK(report.contains("seed"));
    CHECK(report.contains("tolerances"));
    CHECK(report["inputs"]["spectrum"][0].get<double>() ==
          doctest::Approx(0.3).epsilon(1e-12));
    // Re-serialize and re-parse: identical document.
    CHECK(json::parse(report.dump()) == report);
}
