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

// Internal JSON codecs shared by the I/O translation units.

#pragma once

#include <nlohmann/json.hpp>

#include "depprof/formula.hpp"
#include "depprof/hypergraph.hpp"
#include "depprof/relation.hpp"

namespace depprof::detail {

using Json = nlohmann::ordered_json;

Json encode(const Hypergraph& h);
Hypergraph decode_hypergraph(const Json& j);

Json encode(const Relation& r);
Relation decode_relation(const Json& j);

Json encode(const NormalizedFormula& f);
NormalizedFormula decode_formula(const Json& j);

Json parse_json(const std::string& text);

}  // namespace depprof::detail
