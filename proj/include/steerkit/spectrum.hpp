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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "steerkit/errors.hpp"
#include "steerkit/ket.hpp"

namespace steerkit {

/// Schmidt probabilities p_0 <= ... <= p_{n-1}, summing to one.  Zero
/// coefficients are retained but flagged outside the support.
class SchmidtSpectrum {
  public:
    explicit SchmidtSpectrum(std::vector<double> probs) : probs_(std::move(probs)) {
        if (probs_.empty())
            throw invariant_error("SchmidtSpectrum: empty probability vector");
        for (std::size_t k = 0; k < probs_.size(); ++k) {
            if (probs_[k] < -kSupportEps || probs_[k] > 1.0 + kNormTol)
                throw invariant_error("SchmidtSpectrum: probability outside [0,1]");
            if (probs_[k] < 0.0) probs_[k] = 0.0;
            if (k > 0 && probs_[k] < probs_[k - 1])
                throw invariant_error("SchmidtSpectrum: probabilities not ascending");
        }
        const double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0);
        if (std::abs(sum - 1.0) > kNormTol)
            throw invariant_error("SchmidtSpectrum: probabilities do not sum to 1");
        if (support().empty())
            throw invariant_error("SchmidtSpectrum: empty support");
    }

    /// Sorts before constructing; convenience for unordered input.
    static SchmidtSpectrum from_unsorted(std::vector<double> probs) {
        std::sort(probs.begin(), probs.end());
        return SchmidtSpectrum(std::move(probs));
    }

    static SchmidtSpectrum uniform(std::size_t n) {
        return SchmidtSpectrum(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    }

    std::size_t dim() const { return probs_.size(); }
    double prob(std::size_t k) const { return probs_[k]; }
    const std::vector<double>& probs() const { return probs_; }

    /// c_k = sqrt(p_k).
    double coeff(std::size_t k) const { return std::sqrt(probs_[k]); }

    bool in_support(std::size_t k) const { return probs_[k] > kSupportEps; }

    /// Indices with p_k > epsilon, in ascending order.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < probs_.size(); ++k)
            if (in_support(k)) idx.push_back(k);
        return idx;
    }

    /// Smallest support index (smallest nonzero probability).
    std::size_t support_front() const { return support().front(); }

    /// Relative-tolerance degeneracy test for two probabilities.
    static bool degenerate(double pa, double pb) {
        return std::abs(pa - pb) <= kDegeneracyRelTol * std::max(pa, pb);
    }

    /// Indices whose probability equals the largest one within the
    /// degeneracy tolerance (the p_max class).
    std::vector<std::size_t> max_class() const {
        const double pmax = probs_.back();
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < probs_.size(); ++k)
            if (in_support(k) && degenerate(probs_[k], pmax)) idx.push_back(k);
        return idx;
    }

    /// Indices whose probability equals the smallest support one.
    std::vector<std::size_t> min_class() const {
        const double pmin = probs_[support_front()];
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < probs_.size(); ++k)
            if (in_support(k) && degenerate(probs_[k], pmin)) idx.push_back(k);
        return idx;
    }

  private:
    std::vector<double> probs_;
};

}  // namespace steerkit
