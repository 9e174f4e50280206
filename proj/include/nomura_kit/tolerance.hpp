// Copyright 2026 The nomura-kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "nomura_kit/errors.hpp"

namespace nk {

/// Numeric acceptance thresholds. Every predicate in the library is a
/// floating-point comparison; this is where the slack lives.
struct Tolerance {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;

  /// Same value for both knobs (the CLI's --tol).
  static Tolerance uniform(double eps) {
    if (!(eps > 0.0)) throw InvalidInput("tolerance must be positive");
    return Tolerance{eps, eps};
  }

  void validate() const {
    if (!(abs_eps > 0.0) || !(rel_eps > 0.0)) throw InvalidInput("tolerance must be positive");
  }
};

}  // namespace nk
