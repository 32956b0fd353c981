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
#include <complex>
#include <cstddef>
#include <vector>

#include "steerkit/errors.hpp"
#include "steerkit/ket.hpp"
#include "steerkit/spectrum.hpp"

namespace steerkit {

/// P_beta = sum_k p_k |beta_k|^2, the probability of finding phi by a
/// measurement on one's own side.
inline double outcome_probability(const SchmidtSpectrum& spectrum,
                                  const KetVector& phi) {
    if (phi.dim() != spectrum.dim())
        throw invariant_error("outcome_probability: dimension mismatch");
    double p = 0.0;
    for (std::size_t k = 0; k < phi.dim(); ++k)
        p += spectrum.prob(k) * std::norm(phi[k]);
    return p;
}

/// The phi-steered state: what Bob assigns to Alice after he himself
/// measured phi.  Amplitudes conj(beta_k) sqrt(p_k) / sqrt(P_beta).
inline SteeringResult steered_state(const SchmidtSpectrum& spectrum,
                                    const KetVector& phi) {
    const double p_beta = outcome_probability(spectrum, phi);
    if (p_beta <= kSupportEps)
        throw zero_probability_error(
            "steered_state: phi is supported only where p_k = 0");
    std::vector<complex_t> amps(phi.dim());
    const double inv = 1.0 / std::sqrt(p_beta);
    for (std::size_t k = 0; k < phi.dim(); ++k)
        amps[k] = std::conj(phi[k]) * spectrum.coeff(k) * inv;
    return SteeringResult{KetVector::normalized(std::move(amps)), p_beta};
}

/// The phi-steering state: what Alice must have found in order to steer
/// phi onto Bob.  Defined by conj(alpha_k) sqrt(p_k) / sqrt(P_alpha) =
/// beta_k, i.e. alpha_k = conj(beta_k) sqrt(P_alpha) / sqrt(p_k) on the
/// support; phi with weight on a zero coefficient is unreachable.
inline SteeringResult steering_state(const SchmidtSpectrum& spectrum,
                                     const KetVector& phi) {
    if (phi.dim() != spectrum.dim())
        throw invariant_error("steering_state: dimension mismatch");
    double inv_p_alpha = 0.0;
    for (std::size_t k = 0; k < phi.dim(); ++k) {
        const double w = std::norm(phi[k]);
        if (!spectrum.in_support(k)) {
            if (w > kSupportEps)
                throw off_support_error(
                    "steering_state: phi has weight on a zero Schmidt coefficient");
            continue;
        }
        inv_p_alpha += w / spectrum.prob(k);
    }
    if (inv_p_alpha <= 0.0)
        throw zero_probability_error("steering_state: phi has zero weight");
    const double p_alpha = 1.0 / inv_p_alpha;
    std::vector<complex_t> amps(phi.dim(), complex_t{0.0, 0.0});
    for (std::size_t k = 0; k < phi.dim(); ++k)
        if (spectrum.in_support(k))
            amps[k] = std::conj(phi[k]) * std::sqrt(p_alpha) / spectrum.coeff(k);
    return SteeringResult{KetVector::normalized(std::move(amps)), p_alpha};
}

/// <chi_left(phi) | chi_right(phi)> = sqrt(P_alpha / P_beta), always real
/// and in (0, 1].
inline double mutual_overlap(const SchmidtSpectrum& spectrum, const KetVector& phi) {
    const auto left = steered_state(spectrum, phi);
    const auto right = steering_state(spectrum, phi);
    return inner_product(left.remote_state, right.remote_state).real();
}

/// <chi_left(phi) | chi_right(phi')>, from the explicit amplitude forms.
/// Vanishes exactly when <phi'|phi> = 0.
inline complex_t cross_overlap(const SchmidtSpectrum& spectrum, const KetVector& phi,
                               const KetVector& phi_prime) {
    const auto left = steered_state(spectrum, phi);
    const auto right = steering_state(spectrum, phi_prime);
    return inner_product(left.remote_state, right.remote_state);
}

enum class ReportClass {
    ConsistentWithDirectMeasurement,
    ConsistentWithSteering,
    Inconsistent,
};

/// Classifies a list of states reported across rounds: a set of mutually
/// orthogonal states spanning a measurement basis points to direct
/// measurement; non-orthogonal states that are all reachable by steering
/// point to Alice steering; anything else is inconsistent.
inline ReportClass classify_report(const SchmidtSpectrum& spectrum,
                                   const std::vector<KetVector>& reported_states) {
    if (reported_states.empty())
        throw invariant_error("classify_report: empty report list");

    std::vector<const KetVector*> distinct;
    for (const auto& s : reported_states) {
        if (s.dim() != spectrum.dim())
            throw invariant_error("classify_report: dimension mismatch");
        bool seen = false;
        for (const auto* d : distinct)
            if (std::abs(inner_product(*d, s)) >= 1.0 - kPhaseTol) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(&s);
    }

    bool all_orthogonal = true;
    for (std::size_t i = 0; i < distinct.size(); ++i)
        for (std::size_t j = i + 1; j < distinct.size(); ++j)
            if (std::abs(inner_product(*distinct[i], *distinct[j])) >= kPhaseTol)
                all_orthogonal = false;
    if (all_orthogonal && distinct.size() == spectrum.dim())
        return ReportClass::ConsistentWithDirectMeasurement;

    bool all_steerable = true;
    for (const auto* d : distinct) {
        for (std::size_t k = 0; k < d->dim(); ++k)
            if (!spectrum.in_support(k) && std::norm((*d)[k]) > kSupportEps)
                all_steerable = false;
    }
    if (!all_orthogonal && all_steerable)
        return ReportClass::ConsistentWithSteering;
    return ReportClass::Inconsistent;
}

}  // namespace steerkit
