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
//
// Command-line front end.  Exit codes: 0 success, 2 parse error,
// 3 invariant violation in input, 4 zero-probability request,
// 5 off-support steering request.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steerkit/steerkit.hpp"

namespace {

using json = nlohmann::json;
using namespace steerkit;

constexpr double kInputNormTol = 1e-6;  // inputs are renormalized within this

struct Options {
    bool json_out = false;
    std::uint64_t seed = 12345;
    std::size_t samples = 10000;
    double tol = 1e-10;
    double residual_tol = 1e-14;
    std::size_t max_steps = 100000;
    std::string input_file;
    std::string spectrum_arg;
    std::string matrix_arg;
    std::string phi_arg;
    std::string psi0_arg;
    std::string outcome_arg;
    std::string side_arg = "B";
};

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(tok, &pos));
            if (pos != tok.size()) throw parse_error("trailing characters");
        } catch (const std::exception&) {
            throw parse_error("cannot parse number '" + tok + "'");
        }
    }
    if (out.empty()) throw parse_error("empty number list");
    return out;
}

complex_t parse_complex_entry(const json& j) {
    if (j.is_number()) return complex_t{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return complex_t{j[0].get<double>(), j[1].get<double>()};
    throw parse_error("complex entries must be a number or an [re, im] pair");
}

std::vector<complex_t> parse_complex_vector(const json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("expected a non-empty array");
    std::vector<complex_t> out;
    for (const auto& e : j) out.push_back(parse_complex_entry(e));
    return out;
}

json load_input_doc(const Options& opt) {
    if (opt.input_file.empty()) return json::object();
    std::ifstream in(opt.input_file);
    if (!in) throw parse_error("cannot open input file: " + opt.input_file);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid input document: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("input document must be an object");
    return doc;
}

SchmidtSpectrum get_spectrum(const Options& opt, const json& doc) {
    std::vector<double> probs;
    if (!opt.spectrum_arg.empty()) {
        probs = parse_real_list(opt.spectrum_arg);
    } else if (doc.contains("spectrum")) {
        for (const auto& e : doc["spectrum"]) {
            if (!e.is_number()) throw parse_error("spectrum entries must be numbers");
            probs.push_back(e.get<double>());
        }
    } else {
        throw parse_error("no spectrum given (use --spectrum or an input file)");
    }
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw invariant_error("spectrum probabilities must be >= 0");
        sum += p;
    }
    if (probs.empty() || std::abs(sum - 1.0) > kInputNormTol)
        throw invariant_error("spectrum probabilities must sum to 1");
    for (auto& p : probs) p /= sum;
    return SchmidtSpectrum::from_unsorted(std::move(probs));
}

KetVector get_ket(const Options& opt, const json& doc, const std::string& inline_arg,
                  const std::string& key) {
    std::vector<complex_t> amps;
    if (!inline_arg.empty()) {
        for (double x : parse_real_list(inline_arg)) amps.emplace_back(x, 0.0);
    } else if (doc.contains(key)) {
        amps = parse_complex_vector(doc[key]);
    } else {
        throw parse_error("no '" + key + "' given (use --" + key +
                          " or an input file)");
    }
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > kInputNormTol)
        throw invariant_error("'" + key + "' must be unit norm");
    return KetVector::normalized(std::move(amps));
}

AmplitudeMatrix get_matrix(const Options& opt, const json& doc) {
    std::vector<std::vector<complex_t>> rows;
    if (!opt.matrix_arg.empty()) {
        std::stringstream ss(opt.matrix_arg);
        std::string row;
        while (std::getline(ss, row, ';')) {
            std::vector<complex_t> r;
            for (double x : parse_real_list(row)) r.emplace_back(x, 0.0);
            rows.push_back(std::move(r));
        }
    } else if (doc.contains("matrix")) {
        const auto& jm = doc["matrix"];
        if (!jm.is_array() || jm.empty()) throw parse_error("matrix must be an array of rows");
        for (const auto& jr : jm) rows.push_back(parse_complex_vector(jr));
    } else {
        throw parse_error("no matrix given (use --matrix or an input file)");
    }
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw parse_error("matrix rows have unequal lengths");
    AmplitudeMatrix m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    const double fn = m.norm();
    if (std::abs(fn - 1.0) > kInputNormTol)
        throw invariant_error("matrix must have unit Frobenius norm");
    m /= fn;
    return m;
}

std::vector<KetVector> get_states(const json& doc) {
    if (!doc.contains("states") || !doc["states"].is_array() || doc["states"].empty())
        throw parse_error("classify needs a 'states' array in the input file");
    std::vector<KetVector> out;
    for (const auto& js : doc["states"]) {
        auto amps = parse_complex_vector(js);
        double n2 = 0.0;
        for (const auto& a : amps) n2 += std::norm(a);
        if (std::abs(n2 - 1.0) > kInputNormTol)
            throw invariant_error("reported states must be unit norm");
        out.push_back(KetVector::normalized(std::move(amps)));
    }
    return out;
}

json ket_to_json(const KetVector& v) {
    json out = json::array();
    for (const auto& a : v.amplitudes()) out.push_back({a.real(), a.imag()});
    return out;
}

json matrix_to_json(const AmplitudeMatrix& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        out.push_back(row);
    }
    return out;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.7g", x);
    return buf;
}

std::string fmt_ket(const KetVector& v) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.dim(); ++k) {
        if (k > 0) out += ", ";
        const auto& a = v[k];
        if (std::abs(a.imag()) < 1e-15) {
            out += fmt(a.real());
        } else {
            out += fmt(a.real()) + (a.imag() < 0 ? "-" : "+") +
                   fmt(std::abs(a.imag())) + "i";
        }
    }
    return out + "]";
}

/// One run's report.  Wall time is shown in human mode only, so the
/// structured output stays bitwise reproducible for a fixed seed.
struct Report {
    json doc;
    std::vector<std::string> lines;

    void out(const std::string& key, const json& value, const std::string& line) {
        doc["outputs"][key] = value;
        lines.push_back(line);
    }
};

void emit(const Report& report, const Options& opt, double wall_seconds) {
    if (opt.json_out) {
        std::cout << report.doc.dump(2) << "\n";
    } else {
        for (const auto& line : report.lines) std::cout << line << "\n";
        std::cout << "wall-time: " << fmt(wall_seconds) << " s\n";
    }
}

Report make_report(const std::string& command, const Options& opt) {
    Report r;
    r.doc["command"] = command;
    r.doc["seed"] = opt.seed;
    r.doc["tolerances"] = {{"comparison", opt.tol},
                           {"normalization", kNormTol},
                           {"ladder_residual", opt.residual_tol}};
    r.doc["inputs"] = json::object();
    r.doc["outputs"] = json::object();
    return r;
}

void run_decompose(const Options& opt, Report& r) {
    const json doc = load_input_doc(opt);
    const AmplitudeMatrix m = get_matrix(opt, doc);
    r.doc["inputs"]["matrix"] = matrix_to_json(m);
    const BipartiteState state = schmidt_decompose(m);
    json probs = json::array();
    std::string probs_line = "spectrum:";
    for (double p : state.spectrum().probs()) {
        probs.push_back(p);
        probs_line += " " + fmt(p);
    }
    r.out("spectrum", probs, probs_line);
    r.out("basis_A", matrix_to_json(state.basis_A()),
          "basis_A columns are Alice's Schmidt vectors (see --json)");
    r.out("basis_B", matrix_to_json(state.basis_B()),
          "basis_B columns are Bob's Schmidt vectors (see --json)");
}

void run_steer(const Options& opt, Report& r) {
    const json doc = load_input_doc(opt);
    const AmplitudeMatrix m = get_matrix(opt, doc);
    const KetVector outcome = get_ket(opt, doc, opt.outcome_arg, "outcome");
    Side side;
    if (opt.side_arg == "A" || opt.side_arg == "a") side = Side::A;
    else if (opt.side_arg == "B" || opt.side_arg == "b") side = Side::B;
    else throw parse_error("--side must be A or B");
    r.doc["inputs"]["matrix"] = matrix_to_json(m);
    r.doc["inputs"]["outcome"] = ket_to_json(outcome);
    r.doc["inputs"]["side"] = opt.side_arg;
    const auto result = generic_steer(schmidt_decompose(m), side, outcome);
    r.out("remote_state", ket_to_json(result.remote_state),
          "remote state: " + fmt_ket(result.remote_state));
    r.out("probability", result.probability,
          "probability: " + fmt(result.probability));
}

void run_overlap(const Options& opt, Report& r) {
    const json doc = load_input_doc(opt);
    const SchmidtSpectrum sp = get_spectrum(opt, doc);
    const KetVector phi = get_ket(opt, doc, opt.phi_arg, "phi");
    r.doc["inputs"]["spectrum"] = sp.probs();
    r.doc["inputs"]["phi"] = ket_to_json(phi);
    const auto left = steered_state(sp, phi);
    const auto right = steering_state(sp, phi);
    const double overlap = mutual_overlap(sp, phi);
    r.out("chi_steered", ket_to_json(left.remote_state),
          "chi<- (steered):  " + fmt_ket(left.remote_state));
    r.out("chi_steering", ket_to_json(right.remote_state),
          "chi-> (steering): " + fmt_ket(right.remote_state));
    r.out("P_beta", left.probability, "P_beta:  " + fmt(left.probability));
    r.out("P_alpha", right.probability, "P_alpha: " + fmt(right.probability));
    r.out("overlap", overlap, "overlap: " + fmt(overlap));
}

void run_min_overlap(const Options& opt, Report& r) {
    const json doc = load_input_doc(opt);
    const SchmidtSpectrum sp = get_spectrum(opt, doc);
    r.doc["inputs"]["spectrum"] = sp.probs();
    r.doc["inputs"]["samples"] = opt.samples;
    const double closed = closed_form_min(sp);
    const MinOverlapSolution sol = solve_by_reduction(sp);
    const auto [oracle_value, oracle_phi] = brute_force_oracle(sp, opt.samples, opt.seed);
    r.out("closed_form", closed, "closed form:    " + fmt(closed));
    r.out("reduction_value", sol.value, "reduction:      " + fmt(sol.value));
    r.out("oracle_value", oracle_value, "oracle:         " + fmt(oracle_value));
    r.out("oracle_minus_closed", oracle_value - closed,
          "oracle - closed: " + fmt(oracle_value - closed));
    r.out("optimal_phi", ket_to_json(sol.optimal_phi),
          "optimal phi:    " + fmt_ket(sol.optimal_phi));
    r.out("optimal_alpha", ket_to_json(sol.optimal_alpha),
          "optimal alpha:  " + fmt_ket(sol.optimal_alpha));
    r.out("oracle_phi", ket_to_json(oracle_phi),
          "oracle phi:     " + fmt_ket(oracle_phi));
    json trace = {{"k0", sol.trace.k0},         {"k1", sol.trace.k1},
                  {"s_star", sol.trace.s_star}, {"a_star", sol.trace.a_star},
                  {"ratio_r", sol.trace.ratio_r}, {"objective", sol.trace.objective},
                  {"K_min", sol.trace.K_min},   {"K_max", sol.trace.K_max}};
    r.out("trace", trace,
          "trace: k0=" + std::to_string(sol.trace.k0) + " k1=" +
              std::to_string(sol.trace.k1) + " s*=" + fmt(sol.trace.s_star) +
              " a*=" + fmt(sol.trace.a_star) + " r=" + fmt(sol.trace.ratio_r));
}

void run_ladder_cmd(const Options& opt, Report& r) {
    const json doc = load_input_doc(opt);
    const SchmidtSpectrum sp = get_spectrum(opt, doc);
    const KetVector psi0 = get_ket(opt, doc, opt.psi0_arg, "psi0");
    r.doc["inputs"]["spectrum"] = sp.probs();
    r.doc["inputs"]["psi0"] = ket_to_json(psi0);
    r.doc["inputs"]["max_steps"] = opt.max_steps;
    const LadderTrace trace = run_ladder(sp, psi0, opt.max_steps, opt.residual_tol);
    r.out("steps_taken", trace.steps_taken,
          "steps taken: " + std::to_string(trace.steps_taken));
    r.out("converged", trace.converged,
          std::string("converged: ") + (trace.converged ? "yes" : "no"));
    r.out("limit", ket_to_json(trace.limit), "limit: " + fmt_ket(trace.limit));
    const KetVector analytic = fixed_point(sp, psi0);
    const double agreement = std::abs(inner_product(trace.limit, analytic));
    r.out("fixed_point", ket_to_json(analytic),
          "analytic fixed point: " + fmt_ket(analytic));
    r.out("agreement", agreement,
          "|<limit|fixed point>|: " + fmt(agreement));
}

void run_fr(const Options& opt, Report& r) {
    (void)opt;
    const FrOutcomeTable table = compute_ok_probabilities();
    json chain = json::array();
    for (const auto& [label, state] : table.inference_chain) {
        chain.push_back({{"agent", label}, {"state", ket_to_json(state)}});
        r.lines.push_back(label + ": " + fmt_ket(state));
    }
    r.doc["outputs"]["inference_chain"] = chain;
    r.out("p_ok_ok", table.p_ok_ok, "P(ok-bar, ok) quantum: " + fmt(table.p_ok_ok));
    r.out("p_naive", table.p_naive, "P(ok-bar, ok) naive:   " + fmt(table.p_naive));
    // Full outcome table as a completeness check.
    const BipartiteState state = build_fr_state();
    const KetVector ok = fr_ok_vector();
    const KetVector fail = fr_fail_vector();
    json outcomes;
    double total = 0.0;
    for (const auto& [la, wa] : {std::pair{"ok_bar", ok}, std::pair{"fail_bar", fail}})
        for (const auto& [lb, wb] : {std::pair{"ok", ok}, std::pair{"fail", fail}}) {
            double p = 0.0;
            try {
                p = fr_joint_probability(state, wa, wb);
            } catch (const zero_probability_error&) {
                p = 0.0;
            }
            outcomes[std::string(la) + "," + lb] = p;
            total += p;
        }
    r.out("outcome_table", outcomes, "four-outcome total: " + fmt(total));
}

void run_classify(const Options& opt, Report& r) {
    const json doc = load_input_doc(opt);
    const SchmidtSpectrum sp = get_spectrum(opt, doc);
    const std::vector<KetVector> states = get_states(doc);
    r.doc["inputs"]["spectrum"] = sp.probs();
    json jstates = json::array();
    for (const auto& s : states) jstates.push_back(ket_to_json(s));
    r.doc["inputs"]["states"] = jstates;
    const ReportClass verdict = classify_report(sp, states);
    std::string name;
    switch (verdict) {
        case ReportClass::ConsistentWithDirectMeasurement:
            name = "ConsistentWithDirectMeasurement";
            break;
        case ReportClass::ConsistentWithSteering:
            name = "ConsistentWithSteering";
            break;
        case ReportClass::Inconsistent:
            name = "Inconsistent";
            break;
    }
    r.out("classification", name, "classification: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"steerkit: steered and steering states of bipartite pure states"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env_seed = std::getenv("STEERKIT_SEED")) {
        try {
            opt.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            std::cerr << "invalid STEERKIT_SEED\n";
            return 2;
        }
    }

    app.add_flag("--json", opt.json_out, "emit a machine-readable JSON report");
    app.add_option("--seed", opt.seed, "RNG seed (fallback: STEERKIT_SEED)");
    app.add_option("--samples", opt.samples, "oracle sample count");
    app.add_option("--tol", opt.tol, "comparison tolerance");

    auto add_input = [&](CLI::App* sub) {
        sub->fallthrough();  // global flags may follow the subcommand
        sub->add_option("--input", opt.input_file, "JSON input document");
    };

    auto* decompose = app.add_subcommand("decompose", "Schmidt-decompose a matrix");
    add_input(decompose);
    decompose->add_option("--matrix", opt.matrix_arg, "rows 'a,b;c,d' (real inline)");

    auto* steer = app.add_subcommand("steer", "partial projection on one side");
    add_input(steer);
    steer->add_option("--matrix", opt.matrix_arg, "amplitude matrix");
    steer->add_option("--side", opt.side_arg, "measured side: A or B");
    steer->add_option("--outcome", opt.outcome_arg, "outcome ket (real inline)");

    auto* overlap = app.add_subcommand("overlap", "steered/steering overlap for phi");
    add_input(overlap);
    overlap->add_option("--spectrum", opt.spectrum_arg, "probabilities p0,p1,...");
    overlap->add_option("--phi", opt.phi_arg, "phi amplitudes (real inline)");

    auto* minov = app.add_subcommand("min-overlap", "minimum overlap over phi");
    add_input(minov);
    minov->add_option("--spectrum", opt.spectrum_arg, "probabilities p0,p1,...");

    auto* ladder = app.add_subcommand("ladder", "politeness-exchange iteration");
    add_input(ladder);
    ladder->add_option("--spectrum", opt.spectrum_arg, "probabilities p0,p1,...");
    ladder->add_option("--psi0", opt.psi0_arg, "initial ket (real inline)");
    ladder->add_option("--max-steps", opt.max_steps, "iteration cap");
    ladder->add_option("--residual-tol", opt.residual_tol, "convergence residual");

    auto* fr = app.add_subcommand("fr", "Frauchiger-Renner scenario numbers");
    fr->fallthrough();

    auto* classify = app.add_subcommand("classify", "classify reported states");
    add_input(classify);
    classify->add_option("--spectrum", opt.spectrum_arg, "probabilities p0,p1,...");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Report report = make_report(command, opt);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (command == "decompose") run_decompose(opt, report);
        else if (command == "steer") run_steer(opt, report);
        else if (command == "overlap") run_overlap(opt, report);
        else if (command == "min-overlap") run_min_overlap(opt, report);
        else if (command == "ladder") run_ladder_cmd(opt, report);
        else if (command == "fr") run_fr(opt, report);
        else if (command == "classify") run_classify(opt, report);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const off_support_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const zero_probability_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const invariant_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    const auto t1 = std::chrono::steady_clock::now();
    emit(report, opt, std::chrono::duration<double>(t1 - t0).count());
    return 0;
}
