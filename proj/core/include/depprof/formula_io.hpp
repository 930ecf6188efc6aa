// Copyright 2026 The depprof Authors. All rights reserved.
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

#include <string>

#include "depprof/formula.hpp"

namespace depprof {

// Text syntax. Blocks are joined by '&' at the top level; a block is either a
// bare literal or a parenthesized disjunction of terms; a term is a bare
// literal, a bare '&'-chain of literals, or a parenthesized '&'-chain:
//
//   ((!x1 & !x2 & !x4) | (!x3 & !x4)) & ((!x1 & !x3) | (!x2 & !x5))
//
// Literals are `name` or `!name`, names match [A-Za-z_][A-Za-z0-9_]*.
// `true` alone is the formula without blocks, `(false)` the empty block and a
// `true` term the empty conjunction. An optional first line
// `variables: a,b,c` declares the variable order (including unused ones);
// otherwise variables are ordered by first appearance.

/// Throws InputError with a column position on syntax errors.
NormalizedFormula parse_formula(const std::string& text);
/// Canonical rendering; the variables line is only written when needed.
std::string formula_to_text(const NormalizedFormula& phi);

/// {"variables":[...],"blocks":[[["!x1","!x2"],["!x3"]],...]}
std::string formula_to_json(const NormalizedFormula& phi);
NormalizedFormula formula_from_json(const std::string& json);

}  // namespace depprof
