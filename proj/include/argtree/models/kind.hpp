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

#include <string_view>

namespace argtree {

enum class ModelKind { Majority, Length, LogReg, Pair, PathFlat, PathHier };

std::string_view to_string(ModelKind kind);
// Throws UsageError on unknown names.
ModelKind parse_model_kind(std::string_view text);

inline bool is_neural(ModelKind kind) {
  return kind == ModelKind::Pair || kind == ModelKind::PathFlat || kind == ModelKind::PathHier;
}

}  // namespace argtree
