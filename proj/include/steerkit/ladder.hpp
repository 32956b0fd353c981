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
#include <utility>
#include <vector>

#include "steerkit/errors.hpp"
#include "steerkit/ket.hpp"
#include "steerkit/spectrum.hpp"

namespace steerkit {

inline constexpr double kLadderResidualTol = 1e-14;

/// Trace of the alternating-update iteration psi_0, psi_1, ..., psi_M.
struct LadderTrace {
    std::vector<KetVector> states;
    bool converged;
    KetVector limit;
    std::size_t steps_taken;
};

/// One half-step of the politeness exchange: multiply each amplitude by
/// c_k = sqrt(p_k) and renormalize.  For complex psi this acts on the
/// amplitudes directly (no conjugation), so for real psi it coincides with
/// the steered-state map.
inline KetVector ladder_step(const SchmidtSpectrum& spectrum, const KetVector& psi) {
    if (psi.dim() != spectrum.dim())
        throw invariant_error("ladder_step: dimension mismatch");
    std::vector<complex_t> amps(psi.dim());
    double n2 = 0.0;
    for (std::size_t k = 0; k < psi.dim(); ++k) {
        amps[k] = spectrum.coeff(k) * psi[k];
        n2 += std::norm(amps[k]);
    }
    if (n2 <= kSupportEps)
        throw zero_probability_error("ladder_step: psi has no weight on the support");
    return KetVector::normalized(std::move(amps));
}

/// Iterates ladder_step until 1 - |<psi_m|psi_{m+1}>| < residual_tol or
/// max_steps is reached.
inline LadderTrace run_ladder(const SchmidtSpectrum& spectrum, const KetVector& psi0,
                              std::size_t max_steps,
                              double residual_tol = kLadderResidualTol) {
    std::vector<KetVector> states{psi0};
    bool converged = false;
    for (std::size_t m = 0; m <= max_steps; ++m) {
        const KetVector next = ladder_step(spectrum, states.back());
        const double residual = 1.0 - std::abs(inner_product(states.back(), next));
        if (residual < residual_tol) {
            converged = true;
            break;
        }
        if (m == max_steps) break;
        states.push_back(next);
    }
    KetVector limit = states.back();
    const std::size_t steps = states.size() - 1;
    return LadderTrace{std::move(states), converged, std::move(limit), steps};
}

/// Analytic limit: psi0 restricted to the indices achieving p_max, then
/// renormalized.
inline KetVector fixed_point(const SchmidtSpectrum& spectrum, const KetVector& psi0) {
    if (psi0.dim() != spectrum.dim())
        throw invariant_error("fixed_point: dimension mismatch");
    const auto top = spectrum.max_class();
    std::vector<complex_t> amps(psi0.dim(), complex_t{0.0, 0.0});
    double weight = 0.0;
    for (std::size_t k : top) {
        amps[k] = psi0[k];
        weight += std::norm(psi0[k]);
    }
    if (weight <= kSupportEps)
        throw zero_probability_error(
            "fixed_point: psi0 is orthogonal to the p_max class");
    return KetVector::normalized(std::move(amps));
}

}  // namespace steerkit
