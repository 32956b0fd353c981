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

#include <stdexcept>
#include <string>

namespace steerkit {

/// Base class for all steerkit errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (CLI exit code 2).
struct parse_error : error {
    using error::error;
};

/// A domain-type invariant is violated (CLI exit code 3).
struct invariant_error : error {
    using error::error;
};

/// A requested outcome or state has zero probability (CLI exit code 4).
struct zero_probability_error : error {
    using error::error;
};

/// A state has weight outside the Schmidt support, so no measurement on
/// the remote side can steer it (CLI exit code 5).
struct off_support_error : error {
    using error::error;
};

}  // namespace steerkit
