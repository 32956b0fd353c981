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
#include <string>
#include <utility>
#include <vector>

#include "steerkit/bipartite.hpp"
#include "steerkit/ket.hpp"

namespace steerkit {

/// Outcomes of the Frauchiger-Renner scenario: the two-step inference
/// chain, the quantum joint probability of (ok-bar, ok), and the value the
/// naive steering update would predict.
struct FrOutcomeTable {
    double p_ok_ok;
    double p_naive;
    std::vector<std::pair<std::string, KetVector>> inference_chain;
};

/// The state sqrt(1/3)(|00> + |01> + |10>), amplitude matrix
/// (1/sqrt(3)) [[1,1],[1,0]].
inline AmplitudeMatrix fr_amplitude_matrix() {
    AmplitudeMatrix m(2, 2);
    const double c = 1.0 / std::sqrt(3.0);
    m << c, c, c, 0.0;
    return m;
}

inline BipartiteState build_fr_state() { return schmidt_decompose(fr_amplitude_matrix()); }

/// Bob finds |1>_B, infers Alice's state by steering, and Alice in turn
/// infers Bob's state as if she had measured.  Every step goes through
/// generic_steer.
inline std::vector<std::pair<std::string, KetVector>> run_inference_chain() {
    const BipartiteState state = build_fr_state();
    std::vector<std::pair<std::string, KetVector>> chain;
    chain.emplace_back("Bob", KetVector::basis(2, 1));
    const auto alice = generic_steer(state, Side::B, chain.back().second);
    chain.emplace_back("Alice-inferred", alice.remote_state);
    const auto bob_naive = generic_steer(state, Side::A, chain.back().second);
    chain.emplace_back("Bob-naive", bob_naive.remote_state);
    return chain;
}

/// ok = (|0> - |1>)/sqrt(2) on either side; the sign convention is fixed
/// here and swappable in one place.
inline KetVector fr_ok_vector() {
    const double c = 1.0 / std::sqrt(2.0);
    return KetVector({complex_t{c, 0.0}, complex_t{-c, 0.0}});
}

inline KetVector fr_fail_vector() {
    const double c = 1.0 / std::sqrt(2.0);
    return KetVector({complex_t{c, 0.0}, complex_t{c, 0.0}});
}

/// Joint probability of finding w-bar on side A and w on side B, computed
/// by steering on A then projecting on B.
inline double fr_joint_probability(const BipartiteState& state,
                                   const KetVector& w_bar, const KetVector& w) {
    const auto steered = generic_steer(state, Side::A, w_bar);
    const complex_t amp = inner_product(w, steered.remote_state);
    return steered.probability * std::norm(amp);
}

inline FrOutcomeTable compute_ok_probabilities() {
    const BipartiteState state = build_fr_state();
    FrOutcomeTable table;
    table.p_ok_ok = fr_joint_probability(state, fr_ok_vector(), fr_ok_vector());
    table.p_naive = 0.0;  // the claim reached by trusting the steering update
    table.inference_chain = run_inference_chain();
    return table;
}

}  // namespace steerkit
