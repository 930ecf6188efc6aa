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
#include <vector>

#include "depprof/relation.hpp"

namespace depprof {

/// Parses RFC 4180 style CSV: comma separated, double-quoted fields with ""
/// escapes, CRLF or LF line ends. A final line break does not open a record.
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

/// First record is the header. Values stay untyped; "" is an ordinary value.
/// Duplicate rows are dropped and counted (Relation::duplicates_removed).
Relation read_relation_csv(std::istream& in);
Relation parse_relation_csv(const std::string& text);
Relation load_relation(const std::string& path);

/// Quotes fields that are empty or contain ',', '"', CR or LF.
void write_relation_csv(std::ostream& out, const Relation& rel);
std::string relation_to_csv(const Relation& rel);

/// {"schema":[...],"rows":[[...],...]}
std::string relation_to_json(const Relation& rel);
Relation relation_from_json(const std::string& json);

}  // namespace depprof
