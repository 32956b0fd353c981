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
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "steerkit/errors.hpp"
#include "steerkit/ket.hpp"
#include "steerkit/spectrum.hpp"

namespace steerkit {

using AmplitudeMatrix = Eigen::MatrixXcd;

enum class Side { A, B };

/// A bipartite pure state in Schmidt form: a spectrum plus the two local
/// Schmidt bases.  Column k of basis_A (resp. basis_B) is Alice's (Bob's)
/// k-th Schmidt vector in the computational basis.
class BipartiteState {
  public:
    BipartiteState(SchmidtSpectrum spectrum, AmplitudeMatrix basis_A,
                   AmplitudeMatrix basis_B)
        : spectrum_(std::move(spectrum)),
          basis_A_(std::move(basis_A)),
          basis_B_(std::move(basis_B)) {
        check_unitary(basis_A_, "basis_A");
        check_unitary(basis_B_, "basis_B");
        const auto r = static_cast<Eigen::Index>(spectrum_.dim());
        if (r != std::min(basis_A_.cols(), basis_B_.cols()))
            throw invariant_error(
                "BipartiteState: spectrum length must be min(dim_A, dim_B)");
    }

    const SchmidtSpectrum& spectrum() const { return spectrum_; }
    const AmplitudeMatrix& basis_A() const { return basis_A_; }
    const AmplitudeMatrix& basis_B() const { return basis_B_; }
    std::size_t dim_A() const { return static_cast<std::size_t>(basis_A_.rows()); }
    std::size_t dim_B() const { return static_cast<std::size_t>(basis_B_.rows()); }

    /// Reassembles M_ij = sum_k c_k A_ik B_jk.
    AmplitudeMatrix amplitude_matrix() const {
        AmplitudeMatrix m = AmplitudeMatrix::Zero(basis_A_.rows(), basis_B_.rows());
        for (std::size_t k = 0; k < spectrum_.dim(); ++k) {
            const auto kk = static_cast<Eigen::Index>(k);
            m.noalias() += spectrum_.coeff(k) * basis_A_.col(kk) *
                           basis_B_.col(kk).transpose();
        }
        return m;
    }

  private:
    static void check_unitary(const AmplitudeMatrix& u, const char* name) {
        const AmplitudeMatrix g = u.adjoint() * u;
        const AmplitudeMatrix id =
            AmplitudeMatrix::Identity(u.cols(), u.cols());
        if ((g - id).cwiseAbs().maxCoeff() > kUnitaryTol)
            throw invariant_error(std::string("BipartiteState: ") + name +
                                  " is not unitary");
    }

    SchmidtSpectrum spectrum_;
    AmplitudeMatrix basis_A_;
    AmplitudeMatrix basis_B_;
};

/// Schmidt decomposition of an amplitude matrix M_ij (the coefficient of
/// |i>_A |j>_B).  The spectrum comes back ascending, with both bases
/// permuted consistently; zero coefficients are retained.
inline BipartiteState schmidt_decompose(const AmplitudeMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw invariant_error("schmidt_decompose: empty matrix");
    const double fnorm = m.norm();
    if (std::abs(fnorm - 1.0) > kUnitaryTol)
        throw invariant_error("schmidt_decompose: matrix is not unit Frobenius norm");

    Eigen::JacobiSVD<AmplitudeMatrix> svd(m / fnorm,
                                          Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Index r = std::min(m.rows(), m.cols());
    AmplitudeMatrix u = svd.matrixU();
    // M = U S V^dagger, so Bob's Schmidt vectors are the conjugated V columns.
    AmplitudeMatrix v = svd.matrixV().conjugate();

    // Jacobi returns descending singular values; flip the leading r columns.
    std::vector<double> probs(static_cast<std::size_t>(r));
    AmplitudeMatrix u_sorted = u;
    AmplitudeMatrix v_sorted = v;
    for (Eigen::Index k = 0; k < r; ++k) {
        const Eigen::Index src = r - 1 - k;
        const double s = svd.singularValues()(src);
        probs[static_cast<std::size_t>(k)] = s * s;
        u_sorted.col(k) = u.col(src);
        v_sorted.col(k) = v.col(src);
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    for (auto& p : probs) p /= total;

    return BipartiteState(SchmidtSpectrum(std::move(probs)), std::move(u_sorted),
                          std::move(v_sorted));
}

/// Partial projection: measure `measured_side` and find `outcome`, return
/// the conditional state of the other side and the outcome probability.
inline SteeringResult generic_steer(const BipartiteState& state, Side measured_side,
                                    const KetVector& outcome) {
    const AmplitudeMatrix m = state.amplitude_matrix();
    const std::size_t measured_dim =
        measured_side == Side::A ? state.dim_A() : state.dim_B();
    if (outcome.dim() != measured_dim)
        throw invariant_error("generic_steer: outcome dimension mismatch");

    const std::size_t remote_dim =
        measured_side == Side::A ? state.dim_B() : state.dim_A();
    std::vector<complex_t> remote(remote_dim, complex_t{0.0, 0.0});
    for (std::size_t i = 0; i < remote_dim; ++i) {
        complex_t acc{0.0, 0.0};
        for (std::size_t j = 0; j < measured_dim; ++j) {
            const complex_t amp =
                measured_side == Side::A
                    ? m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i))
                    : m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            acc += std::conj(outcome[j]) * amp;
        }
        remote[i] = acc;
    }
    double prob = 0.0;
    for (const auto& a : remote) prob += std::norm(a);
    if (prob <= kSupportEps)
        throw zero_probability_error("generic_steer: outcome has zero probability");
    return SteeringResult{KetVector::normalized(std::move(remote)), prob};
}

}  // namespace steerkit
