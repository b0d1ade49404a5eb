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

#include <iosfwd>
#include <string>

#include "argtree/corpus/tree.hpp"

namespace argtree {

// Imports a numbered outline:
//
//   1. <thesis>
//   1.1. Pro: <claim>
//   1.1.1. Con: <claim>
//
// Claim ids are the dotted numbers ("1.1.1"); the parent of "a.b.c" is
// "a.b". Gaps in sibling numbering are accepted and children keep file
// order. Blank lines are skipped. Throws DataError with the line number on
// orphan numbering, an unknown stance keyword or a duplicate number.
ArgumentTree import_outline(std::istream& in, const std::string& topic_id);

}  // namespace argtree
