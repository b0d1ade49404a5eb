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

#include <span>
#include <string>
#include <vector>

#include "argtree/eval/stratified.hpp"

namespace argtree {

// CSV with one row per report, in input order:
//   model,task,<stratum>,<stratum>_n,...
// Accuracies are shortest round-trip decimals; empty strata leave the
// accuracy cell blank. Throws DataError when reports disagree on strata or
// the list is empty.
std::string format_report_csv(std::span<const EvalReport> reports);

// Aligned table of percentages (two decimals) with example counts.
std::string format_report_text(std::span<const EvalReport> reports);

std::vector<EvalReport> parse_report_csv(const std::string& text);

}  // namespace argtree
