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
#include <initializer_list>
#include <utility>
#include <vector>

#include "steerkit/errors.hpp"

namespace steerkit {

using complex_t = std::complex<double>;

/// Shared numeric tolerances.
inline constexpr double kNormTol = 1e-12;        ///< unit-norm check
inline constexpr double kSupportEps = 1e-12;     ///< probability treated as zero
inline constexpr double kUnitaryTol = 1e-10;     ///< basis orthonormality
inline constexpr double kDegeneracyRelTol = 1e-10;  ///< equal-coefficient classes
inline constexpr double kPhaseTol = 1e-10;       ///< phase-insensitive comparison

/// A finite complex amplitude vector with unit norm.
class KetVector {
  public:
    explicit KetVector(std::vector<complex_t> amplitudes)
        : amps_(std::move(amplitudes)) {
        if (amps_.empty()) throw invariant_error("KetVector: empty amplitude vector");
        double n2 = 0.0;
        for (const auto& a : amps_) n2 += std::norm(a);
        if (std::abs(n2 - 1.0) > kNormTol)
            throw invariant_error("KetVector: amplitudes are not unit norm");
    }

    KetVector(std::initializer_list<complex_t> amplitudes)
        : KetVector(std::vector<complex_t>(amplitudes)) {}

    /// Builds a ket from an arbitrary nonzero vector by rescaling it.
    static KetVector normalized(std::vector<complex_t> raw) {
        double n2 = 0.0;
        for (const auto& a : raw) n2 += std::norm(a);
        if (n2 <= 0.0 || raw.empty())
            throw invariant_error("KetVector::normalized: zero vector");
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& a : raw) a *= inv;
        return KetVector(std::move(raw));
    }

    /// Computational basis vector |k> in dimension n.
    static KetVector basis(std::size_t n, std::size_t k) {
        if (k >= n) throw invariant_error("KetVector::basis: index out of range");
        std::vector<complex_t> amps(n, complex_t{0.0, 0.0});
        amps[k] = complex_t{1.0, 0.0};
        return KetVector(std::move(amps));
    }

    std::size_t dim() const { return amps_.size(); }
    const complex_t& operator[](std::size_t k) const { return amps_[k]; }
    const std::vector<complex_t>& amplitudes() const { return amps_; }

  private:
    std::vector<complex_t> amps_;
};

/// <a|b> with conjugation on the first argument.
inline complex_t inner_product(const KetVector& a, const KetVector& b) {
    if (a.dim() != b.dim())
        throw invariant_error("inner_product: dimension mismatch");
    complex_t acc{0.0, 0.0};
    for (std::size_t k = 0; k < a.dim(); ++k) acc += std::conj(a[k]) * b[k];
    return acc;
}

/// True iff a and b agree up to a global phase: | |<a|b>| - 1 | < tol.
inline bool equal_up_to_phase(const KetVector& a, const KetVector& b,
                              double tol = kPhaseTol) {
    return std::abs(std::abs(inner_product(a, b)) - 1.0) < tol;
}

/// A steered or steering state together with the probability of the
/// outcome that produced it.
struct SteeringResult {
    KetVector remote_state;
    double probability;  // in (0, 1]
};

}  // namespace steerkit
