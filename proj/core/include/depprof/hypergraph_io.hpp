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

#include <iosfwd>
#include <string>

#include "depprof/hypergraph.hpp"

namespace depprof {

// Text format, one edge per line:
//
//   # comment
//   vertices: a,b,c,d
//   a,b
//   b,c
//   {}
//
// Vertex names are comma separated and trimmed. The optional `vertices:`
// header must be the first non-comment line and fixes the order of (possibly
// isolated) vertices; names first seen in edges are appended. `{}` denotes the
// empty edge. Blank lines are ignored. The writer always emits the header.

Hypergraph read_hypergraph_text(std::istream& in);
Hypergraph parse_hypergraph_text(const std::string& text);
/// Throws InputError if a vertex name cannot be represented in the text format.
void write_hypergraph_text(std::ostream& out, const Hypergraph& h);
std::string hypergraph_to_text(const Hypergraph& h);

/// {"vertices":[...],"edges":[[...],...]}
std::string hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& json);

}  // namespace depprof
