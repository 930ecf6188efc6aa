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

#include "depprof/hypergraph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "depprof/errors.hpp"
#include "json_codec.hpp"

namespace depprof {
namespace {

constexpr std::string_view kHeader = "vertices:";
constexpr std::string_view kEmptyEdge = "{}";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_names(std::string_view s, std::size_t line_no) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    auto name = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (name.empty()) throw InputError("line " + std::to_string(line_no) + ": empty vertex name");
    out.emplace_back(name);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void check_name(const std::string& name) {
  if (name.empty() || name != trim(name) || name.find_first_of(",\n") != std::string::npos ||
      name.front() == '#' || name == kEmptyEdge)
    throw InputError("vertex name '" + name + "' is not representable in the text format; use JSON");
}

}  // namespace

Hypergraph read_hypergraph_text(std::istream& in) {
  Hypergraph h;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (!seen_content && body.starts_with(kHeader)) {
      seen_content = true;
      for (const auto& v : split_names(body.substr(kHeader.size()), line_no)) {
        if (h.find_vertex(v)) throw InputError("line " + std::to_string(line_no) + ": duplicate vertex '" + v + "'");
        h.add_vertex(v);
      }
      continue;
    }
    seen_content = true;
    if (body == kEmptyEdge) {
      h.add_edge(VertexSet{});
      continue;
    }
    const auto names = split_names(body, line_no);
    h.add_edge_by_names(names);
  }
  return h;
}

Hypergraph parse_hypergraph_text(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph_text(in);
}

void write_hypergraph_text(std::ostream& out, const Hypergraph& h) {
  for (const auto& v : h.vertices()) check_name(v);
  out << kHeader;
  for (std::size_t i = 0; i < h.num_vertices(); ++i) out << (i == 0 ? "" : ",") << h.vertices()[i];
  out << '\n';
  for (const auto& e : h.edges()) {
    if (e.empty()) {
      out << kEmptyEdge << '\n';
      continue;
    }
    bool first = true;
    for (auto v : e) {
      out << (first ? "" : ",") << h.vertices()[v];
      first = false;
    }
    out << '\n';
  }
}

std::string hypergraph_to_text(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph_text(out, h);
  return out.str();
}

std::string hypergraph_to_json(const Hypergraph& h) { return detail::encode(h).dump(); }

Hypergraph hypergraph_from_json(const std::string& json) {
  return detail::decode_hypergraph(detail::parse_json(json));
}

namespace detail {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json encode(const Hypergraph& h) {
  Json j;
  j["vertices"] = h.vertices();
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back(h.names_of(e));
  j["edges"] = std::move(edges);
  return j;
}

Hypergraph decode_hypergraph(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("edges")) throw InputError("hypergraph JSON needs an \"edges\" array");
    std::vector<std::string> vertices;
    if (j.contains("vertices")) vertices = j.at("vertices").get<std::vector<std::string>>();
    Hypergraph h(vertices);
    for (const auto& e : j.at("edges")) h.add_edge_by_names(e.get<std::vector<std::string>>());
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed hypergraph JSON: ") + e.what());
  }
}

}  // namespace detail
}  // namespace depprof
