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

#include <fstream>
#include <sstream>

#include "depprof/errors.hpp"
#include "depprof/relation_io.hpp"
#include "json_codec.hpp"

namespace depprof {

Relation load_relation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  if (path.ends_with(".json")) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return relation_from_json(buf.str());
  }
  return read_relation_csv(in);
}

std::string relation_to_json(const Relation& rel) { return detail::encode(rel).dump(); }

Relation relation_from_json(const std::string& json) { return detail::decode_relation(detail::parse_json(json)); }

namespace detail {

Json encode(const Relation& r) {
  Json j;
  j["schema"] = r.schema();
  j["rows"] = r.rows();
  return j;
}

Relation decode_relation(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("schema")) throw InputError("relation JSON needs a \"schema\" array");
    auto schema = j.at("schema").get<std::vector<std::string>>();
    std::vector<Row> rows;
    if (j.contains("rows")) rows = j.at("rows").get<std::vector<Row>>();
    return Relation(std::move(schema), std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed relation JSON: ") + e.what());
  }
}

}  // namespace detail
}  // namespace depprof
