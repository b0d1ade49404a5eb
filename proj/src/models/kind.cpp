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

#include "argtree/models/kind.hpp"

#include <string>

#include "argtree/common/error.hpp"

namespace argtree {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Majority: return "majority";
    case ModelKind::Length: return "length";
    case ModelKind::LogReg: return "logreg";
    case ModelKind::Pair: return "pair";
    case ModelKind::PathFlat: return "path-flat";
    case ModelKind::PathHier: return "path-hier";
  }
  return "majority";
}

ModelKind parse_model_kind(std::string_view text) {
  for (ModelKind k : {ModelKind::Majority, ModelKind::Length, ModelKind::LogReg, ModelKind::Pair,
                      ModelKind::PathFlat, ModelKind::PathHier}) {
    if (to_string(k) == text) return k;
  }
  throw UsageError("unknown model '" + std::string(text) +
                   "' (expected majority, length, logreg, pair, path-flat or path-hier)");
}

}  // namespace argtree
