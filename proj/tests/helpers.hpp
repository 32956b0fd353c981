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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "steerkit/steerkit.hpp"

namespace steerkit::testing {

inline std::vector<double> random_probs(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> p(n);
    double sum = 0.0;
    for (auto& x : p) {
        x = u(rng);
        sum += x;
    }
    for (auto& x : p) x /= sum;
    std::sort(p.begin(), p.end());
    return p;
}

inline SchmidtSpectrum random_spectrum(std::mt19937_64& rng, std::size_t n) {
    return SchmidtSpectrum(random_probs(rng, n));
}

/// A spectrum whose top two distinct probabilities are separated by at
/// least min_rel_gap, so ladder convergence is fast and the p_max class is
/// unambiguous.
inline SchmidtSpectrum random_gapped_spectrum(std::mt19937_64& rng, std::size_t n,
                                              double min_rel_gap = 0.05) {
    for (;;) {
        auto p = random_probs(rng, n);
        if (n == 1) return SchmidtSpectrum(p);
        const double gap = (p[n - 1] - p[n - 2]) / p[n - 1];
        if (gap >= min_rel_gap) return SchmidtSpectrum(p);
    }
}

/// A spectrum whose smallest and largest probabilities are well separated.
inline SchmidtSpectrum random_nondegenerate_spectrum(std::mt19937_64& rng,
                                                     std::size_t n) {
    for (;;) {
        auto p = random_probs(rng, n);
        if ((p[n - 1] - p[0]) / p[n - 1] >= 1e-3) return SchmidtSpectrum(p);
    }
}

inline KetVector random_ket(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<complex_t> amps(n);
    for (auto& a : amps) a = complex_t{g(rng), g(rng)};
    return KetVector::normalized(std::move(amps));
}

inline KetVector random_real_ket(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<complex_t> amps(n);
    for (auto& a : amps) a = complex_t{g(rng), 0.0};
    return KetVector::normalized(std::move(amps));
}

inline Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = complex_t{g(rng), g(rng)};
    return Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ();
}

inline Eigen::MatrixXcd random_unit_matrix(std::mt19937_64& rng, std::size_t rows,
                                           std::size_t cols) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = complex_t{g(rng), g(rng)};
    return m / m.norm();
}

/// The ratio objective sum p |alpha|^2 / sqrt(sum p^2 |alpha|^2), written
/// out directly as an independent oracle for the overlap identity.
inline double ratio_in_alpha(const SchmidtSpectrum& sp, const KetVector& alpha) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < sp.dim(); ++k) {
        num += sp.prob(k) * std::norm(alpha[k]);
        den += sp.prob(k) * sp.prob(k) * std::norm(alpha[k]);
    }
    return num / std::sqrt(den);
}

/// P_alpha / P_beta route of the same identity, from the definitions.
inline double sqrt_prob_ratio(const SchmidtSpectrum& sp, const KetVector& phi) {
    double p_beta = 0.0, inv_p_alpha = 0.0;
    for (std::size_t k = 0; k < sp.dim(); ++k) {
        p_beta += sp.prob(k) * std::norm(phi[k]);
        inv_p_alpha += std::norm(phi[k]) / sp.prob(k);
    }
    return std::sqrt(1.0 / (inv_p_alpha * p_beta));
}

/// phi' orthogonal to phi, built by Gram-Schmidt from a random ket.
inline KetVector random_orthogonal_ket(std::mt19937_64& rng, const KetVector& phi) {
    for (;;) {
        KetVector cand = random_ket(rng, phi.dim());
        const complex_t ov = inner_product(phi, cand);
        std::vector<complex_t> amps(cand.dim());
        double n2 = 0.0;
        for (std::size_t k = 0; k < cand.dim(); ++k) {
            amps[k] = cand[k] - ov * phi[k];
            n2 += std::norm(amps[k]);
        }
        if (n2 > 1e-6) return KetVector::normalized(std::move(amps));
    }
}

}  // namespace steerkit::testing
