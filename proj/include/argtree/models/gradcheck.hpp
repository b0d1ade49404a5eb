// Copyright 2026 The argtree Authors.
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

#include <cstdint>

#include "argtree/models/kind.hpp"

namespace argtree {

struct GradCheckResult {
  double max_relative_error = 0.0;
  long long parameters = 0;
};

// Compares analytic gradients of the training objective with central finite
// differences (f(t + eps) - f(t - eps)) / (2 eps) on a small seeded instance,
// coordinate by coordinate. The error per coordinate is
// |analytic - numeric| / max(1, |numeric|). Supported kinds: LogReg, Pair,
// PathFlat, PathHier. Throws DataError on non-finite values.
GradCheckResult gradient_check(ModelKind kind, double epsilon = 1e-5, std::uint64_t seed = 1);

}  // namespace argtree
