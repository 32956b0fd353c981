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

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "steerkit/errors.hpp"
#include "steerkit/ket.hpp"
#include "steerkit/spectrum.hpp"
#include "steerkit/steering.hpp"

namespace steerkit {

/// Intermediate values of the reduction chain that solves the pairwise
/// scalar problem behind the minimum overlap.
struct ReductionTrace {
    std::size_t k0;                  ///< representative index, smaller probability
    std::size_t k1;                  ///< representative index, larger probability
    double s_star;                   ///< 1 / sqrt(p_k0 p_k1)
    double a_star;                   ///< p_k1 / (p_k0 + p_k1)
    double ratio_r;                  ///< p_k0 / p_k1
    double objective;                ///< 2 sqrt(p_k0 p_k1) / (p_k0 + p_k1)
    std::vector<std::size_t> K_min;  ///< degeneracy class of the smallest support prob
    std::vector<std::size_t> K_max;  ///< degeneracy class of the largest support prob
};

struct MinOverlapSolution {
    double value;            // min over phi of the steered/steering overlap
    KetVector optimal_phi;
    KetVector optimal_alpha;
    ReductionTrace trace;
};

/// Closed form 2 sqrt(p_0 p_{n-1}) / (p_0 + p_{n-1}) over the smallest and
/// largest nonzero Schmidt coefficients.
inline double closed_form_min(const SchmidtSpectrum& spectrum) {
    const double p0 = spectrum.prob(spectrum.support_front());
    const double pn = spectrum.prob(spectrum.dim() - 1);
    return 2.0 * std::sqrt(p0 * pn) / (p0 + pn);
}

/// The minimizing phi: (|0> + e^{i lambda} |n-1>) / sqrt(2) over the first
/// support index and the last index.  When the extreme coefficients are
/// degenerate any phi attains the minimum; a support basis vector is
/// returned then.
inline KetVector optimal_phi(const SchmidtSpectrum& spectrum, double lambda_phase) {
    const std::size_t first = spectrum.support_front();
    const std::size_t last = spectrum.dim() - 1;
    if (SchmidtSpectrum::degenerate(spectrum.prob(first), spectrum.prob(last)))
        return KetVector::basis(spectrum.dim(), first);
    std::vector<complex_t> amps(spectrum.dim(), complex_t{0.0, 0.0});
    amps[first] = complex_t{1.0 / std::sqrt(2.0), 0.0};
    amps[last] = std::polar(1.0 / std::sqrt(2.0), lambda_phase);
    return KetVector(std::move(amps));
}

namespace detail {

/// A degeneracy class: support indices sharing one probability value.
struct ProbClass {
    std::vector<std::size_t> indices;
    double value;
};

/// Groups the (ascending) support probabilities into degeneracy classes.
inline std::vector<ProbClass> merge_degenerate_classes(const SchmidtSpectrum& sp) {
    std::vector<ProbClass> classes;
    for (std::size_t k : sp.support()) {
        if (!classes.empty() &&
            SchmidtSpectrum::degenerate(classes.back().value, sp.prob(k))) {
            classes.back().indices.push_back(k);
        } else {
            classes.push_back(ProbClass{{k}, sp.prob(k)});
        }
    }
    return classes;
}

/// The ratio objective in the squared weights a_k: sum p a / sqrt(sum p^2 a).
inline double ratio_objective(const SchmidtSpectrum& sp,
                              const std::vector<double>& a) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < sp.dim(); ++k) {
        num += sp.prob(k) * a[k];
        den += sp.prob(k) * sp.prob(k) * a[k];
    }
    return num / std::sqrt(den);
}

}  // namespace detail

/// Constructive solver: merge degeneracy classes, solve the pairwise
/// scalar problem over class values (s* from the stationarity condition,
/// a* from the constraint), pick the minimizing pair, and expand the
/// squared weights back into alpha* and phi*.
inline MinOverlapSolution solve_by_reduction(const SchmidtSpectrum& spectrum) {
    const auto classes = detail::merge_degenerate_classes(spectrum);
    const std::size_t n = spectrum.dim();

    ReductionTrace trace;
    trace.K_min = spectrum.min_class();
    trace.K_max = spectrum.max_class();

    if (classes.size() == 1) {
        // Uniform support: every phi attains overlap 1.
        const std::size_t k = classes.front().indices.front();
        trace.k0 = trace.k1 = k;
        trace.s_star = 1.0 / classes.front().value;
        trace.a_star = 0.5;
        trace.ratio_r = 1.0;
        trace.objective = 1.0;
        KetVector basis_vec = KetVector::basis(n, k);
        return MinOverlapSolution{1.0, basis_vec, basis_vec, trace};
    }

    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0, best_j = 0;
    double best_s = 0.0, best_a = 0.0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            const double p_lo = classes[i].value;
            const double p_hi = classes[j].value;
            const double s = 1.0 / std::sqrt(p_lo * p_hi);
            // Squared-weight split from the normalization constraint.
            const double a =
                (1.0 - s * s * p_hi * p_hi) / (s * s * (p_lo * p_lo - p_hi * p_hi));
            std::vector<double> weights(n, 0.0);
            weights[classes[i].indices.front()] = a;
            weights[classes[j].indices.front()] = 1.0 - a;
            const double obj = detail::ratio_objective(spectrum, weights);
            if (obj < best) {
                best = obj;
                best_i = i;
                best_j = j;
                best_s = s;
                best_a = a;
            }
        }
    }

    const auto& lo = classes[best_i];
    const auto& hi = classes[best_j];
    trace.k0 = lo.indices.front();
    trace.k1 = hi.indices.front();
    trace.s_star = best_s;
    trace.a_star = best_a;
    trace.ratio_r = lo.value / hi.value;
    trace.objective = best;

    std::vector<complex_t> alpha(n, complex_t{0.0, 0.0});
    alpha[trace.k0] = complex_t{std::sqrt(best_a), 0.0};
    alpha[trace.k1] = complex_t{std::sqrt(1.0 - best_a), 0.0};
    KetVector alpha_star = KetVector::normalized(std::move(alpha));
    // phi follows from the steering relation: beta_k = alpha_k sqrt(p_k)/sqrt(P_a).
    KetVector phi_star = steered_state(spectrum, alpha_star).remote_state;

    return MinOverlapSolution{best, std::move(phi_star), std::move(alpha_star),
                              std::move(trace)};
}

/// Seed-deterministic brute-force check: random unit vectors on the
/// support, followed by a golden-section sweep over every two-index family
/// cos(t)|i> + sin(t)|j>.  Evaluates the overlap through the state
/// definitions, independently of the closed form.
inline std::pair<double, KetVector> brute_force_oracle(const SchmidtSpectrum& spectrum,
                                                       std::size_t samples,
                                                       std::uint64_t seed) {
    if (samples < 1)
        throw invariant_error("brute_force_oracle: need at least one sample");
    const std::size_t n = spectrum.dim();
    const auto support = spectrum.support();

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    double best = std::numeric_limits<double>::infinity();
    std::vector<complex_t> best_phi;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<complex_t> amps(n, complex_t{0.0, 0.0});
        for (std::size_t k : support) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            amps[k] = complex_t{re, im};
        }
        KetVector phi = KetVector::normalized(amps);
        if (outcome_probability(spectrum, phi) <= kSupportEps) continue;
        const double val = mutual_overlap(spectrum, phi);
        if (val < best) {
            best = val;
            best_phi = phi.amplitudes();
        }
    }

    // Two-index refinement; the optimizer is known to have support <= 2.
    const double inv_gold = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t ii = 0; ii < support.size(); ++ii) {
        for (std::size_t jj = ii + 1; jj < support.size(); ++jj) {
            const std::size_t i = support[ii];
            const std::size_t j = support[jj];
            auto eval = [&](double theta) {
                std::vector<complex_t> amps(n, complex_t{0.0, 0.0});
                amps[i] = complex_t{std::cos(theta), 0.0};
                amps[j] = complex_t{std::sin(theta), 0.0};
                return mutual_overlap(spectrum, KetVector::normalized(amps));
            };
            double lo = 1e-9, hi = std::acos(-1.0) / 2.0 - 1e-9;
            double x1 = hi - inv_gold * (hi - lo);
            double x2 = lo + inv_gold * (hi - lo);
            double f1 = eval(x1), f2 = eval(x2);
            for (int it = 0; it < 120 && hi - lo > 1e-13; ++it) {
                if (f1 < f2) {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - inv_gold * (hi - lo);
                    f1 = eval(x1);
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + inv_gold * (hi - lo);
                    f2 = eval(x2);
                }
            }
            const double theta = (lo + hi) / 2.0;
            const double val = eval(theta);
            if (val < best) {
                best = val;
                std::vector<complex_t> amps(n, complex_t{0.0, 0.0});
                amps[i] = complex_t{std::cos(theta), 0.0};
                amps[j] = complex_t{std::sin(theta), 0.0};
                best_phi = amps;
            }
        }
    }

    return {best, KetVector::normalized(std::move(best_phi))};
}

}  // namespace steerkit
