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

#include "depprof/instance_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "depprof/errors.hpp"
#include "depprof/formula_io.hpp"
#include "depprof/hypergraph_io.hpp"
#include "depprof/relation_io.hpp"
#include "depprof/verify.hpp"
#include "json_codec.hpp"

namespace depprof {
namespace {

using detail::Json;

Json encode_pair(const RelationPair& p) {
  Json j;
  j["r"] = detail::encode(p.r);
  j["s"] = detail::encode(p.s);
  return j;
}

RelationPair decode_pair(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("s")) throw InputError("relation pair JSON needs \"r\" and \"s\"");
  return {detail::decode_relation(j.at("r")), detail::decode_relation(j.at("s"))};
}

Json encode_instance(const Instance& inst) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::vector<Hypergraph>>) {
          Json list = Json::array();
          for (const auto& h : v) list.push_back(detail::encode(h));
          Json j;
          j["hypergraphs"] = std::move(list);
          return j;
        } else if constexpr (std::is_same_v<T, FixedRhsInstance>) {
          Json j;
          j["relation"] = detail::encode(v.relation);
          j["rhs"] = v.relation.schema()[v.rhs];
          return j;
        } else if constexpr (std::is_same_v<T, RelationPair>) {
          return encode_pair(v);
        } else if constexpr (std::is_same_v<T, PairBundle>) {
          Json j;
          j["first"] = encode_pair(v.first);
          j["second"] = encode_pair(v.second);
          return j;
        } else {
          return detail::encode(v);
        }
      },
      inst);
}

Instance decode_instance(const Json& j) {
  if (!j.is_object()) throw InputError("instance JSON must be an object");
  try {
    if (j.contains("hypergraphs")) {
      std::vector<Hypergraph> hs;
      for (const auto& h : j.at("hypergraphs")) hs.push_back(detail::decode_hypergraph(h));
      return hs;
    }
    if (j.contains("relation")) {
      auto rel = detail::decode_relation(j.at("relation"));
      const auto rhs = rel.attribute(j.at("rhs").get<std::string>());
      return FixedRhsInstance{std::move(rel), rhs};
    }
    if (j.contains("first")) return PairBundle{decode_pair(j.at("first")), decode_pair(j.at("second"))};
    if (j.contains("r")) return decode_pair(j);
    if (j.contains("schema")) return detail::decode_relation(j);
    if (j.contains("blocks")) return detail::decode_formula(j);
    if (j.contains("edges") || j.contains("vertices")) return detail::decode_hypergraph(j);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed instance JSON: ") + e.what());
  }
  throw InputError("unrecognized instance JSON");
}

Json names_json(const std::vector<std::string>& names) { return Json(names); }

}  // namespace

InstanceKind kind_of(const Instance& inst) { return static_cast<InstanceKind>(inst.index()); }

const char* kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kHypergraph:
      return "hypergraph";
    case InstanceKind::kHypergraphList:
      return "hypergraph-list";
    case InstanceKind::kRelation:
      return "relation";
    case InstanceKind::kFixedRhs:
      return "relation-with-rhs";
    case InstanceKind::kRelationPair:
      return "relation-pair";
    case InstanceKind::kPairBundle:
      return "relation-pair-bundle";
    case InstanceKind::kFormula:
      return "formula";
  }
  return "unknown";
}

std::string instance_to_json(const Instance& inst) { return encode_instance(inst).dump(); }

Instance instance_from_json(const std::string& json) { return decode_instance(detail::parse_json(json)); }

std::string instance_digest(const Instance& inst) { return fnv1a_hex(instance_to_json(inst)); }

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto text = buf.str();
  const auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".csv") return parse_relation_csv(text);
  if (ext == ".hg") return parse_hypergraph_text(text);
  if (ext == ".wf") return parse_formula(text);
  if (ext == ".json") return instance_from_json(text);
  throw InputError("unknown file extension '" + ext + "' (expected .csv, .hg, .wf or .json)");
}

Instance assemble_instance(InstanceKind want, std::vector<Instance> parts, const std::optional<std::string>& rhs) {
  const auto count = [&](InstanceKind k) {
    return static_cast<std::size_t>(
        std::count_if(parts.begin(), parts.end(), [&](const Instance& p) { return kind_of(p) == k; }));
  };
  const bool all_relations = !parts.empty() && count(InstanceKind::kRelation) == parts.size();
  if (rhs && want != InstanceKind::kFixedRhs) throw InputError("--rhs only applies to fixed right-hand-side inputs");

  if (parts.size() == 1 && kind_of(parts.front()) == want) return std::move(parts.front());
  switch (want) {
    case InstanceKind::kHypergraphList:
      if (!parts.empty() && count(InstanceKind::kHypergraph) == parts.size()) {
        std::vector<Hypergraph> hs;
        for (auto& p : parts) hs.push_back(std::get<Hypergraph>(std::move(p)));
        return hs;
      }
      break;
    case InstanceKind::kFixedRhs:
      if (parts.size() == 1 && all_relations) {
        if (!rhs) throw InputError("a right-hand-side attribute (--rhs) is required");
        auto rel = std::get<Relation>(std::move(parts.front()));
        const auto a = rel.attribute(*rhs);
        return FixedRhsInstance{std::move(rel), a};
      }
      break;
    case InstanceKind::kRelationPair:
      if (parts.size() == 2 && all_relations)
        return RelationPair{std::get<Relation>(std::move(parts[0])), std::get<Relation>(std::move(parts[1]))};
      break;
    case InstanceKind::kPairBundle:
      if (parts.size() == 4 && all_relations)
        return PairBundle{{std::get<Relation>(std::move(parts[0])), std::get<Relation>(std::move(parts[1]))},
                          {std::get<Relation>(std::move(parts[2])), std::get<Relation>(std::move(parts[3]))}};
      if (parts.size() == 2 && count(InstanceKind::kRelationPair) == 2)
        return PairBundle{std::get<RelationPair>(std::move(parts[0])), std::get<RelationPair>(std::move(parts[1]))};
      break;
    default:
      break;
  }
  std::string got;
  for (const auto& p : parts) got += (got.empty() ? "" : ", ") + std::string(kind_name(kind_of(p)));
  throw InputError(std::string("expected a ") + kind_name(want) + " input, got " + (got.empty() ? "nothing" : got));
}

std::string instance_to_text(const Instance& inst) {
  switch (kind_of(inst)) {
    case InstanceKind::kHypergraph:
      return hypergraph_to_text(std::get<Hypergraph>(inst));
    case InstanceKind::kRelation:
      return relation_to_csv(std::get<Relation>(inst));
    case InstanceKind::kFormula:
      return formula_to_text(std::get<NormalizedFormula>(inst)) + "\n";
    default:
      return encode_instance(inst).dump(2) + "\n";
  }
}

std::string ucc_json(const Relation& rel, const AttrSet& x) {
  Json j;
  j["kind"] = "ucc";
  j["columns"] = names_json(rel.names_of(x));
  return j.dump();
}

std::string fd_json(const Relation& rel, const FunctionalDependency& fd) {
  Json j;
  j["kind"] = "fd";
  j["lhs"] = names_json(rel.names_of(fd.lhs));
  j["rhs"] = rel.schema().at(fd.rhs);
  return j.dump();
}

std::string ind_json(const Relation& r, const Relation& s, const InclusionDependency& ind) {
  Json j;
  j["kind"] = "ind";
  Json lhs = Json::array();
  Json mapping = Json::object();
  for (std::size_t i = 0; i < ind.size(); ++i) {
    lhs.push_back(r.schema().at(ind.lhs[i]));
    mapping[r.schema().at(ind.lhs[i])] = s.schema().at(ind.rhs[i]);
  }
  j["lhs"] = std::move(lhs);
  j["mapping"] = std::move(mapping);
  return j.dump();
}

std::string transversal_json(const Hypergraph& h, const VertexSet& t) {
  Json j;
  j["kind"] = "transversal";
  j["vertices"] = names_json(h.names_of(t));
  return j.dump();
}

std::string tagged_transversal_json(const std::vector<Hypergraph>& hs, const TaggedTransversal& t) {
  const auto padded = pad_to_common_universe(hs);
  Json j;
  j["kind"] = "transversal";
  j["hypergraph"] = t.source_index;
  j["vertices"] = names_json(padded.front().names_of(t.vertex_set));
  return j.dump();
}

std::string assignment_json(const NormalizedFormula& phi, const Assignment& a) {
  Json j;
  j["kind"] = "assignment";
  j["true"] = names_json(phi.names_of(a));
  return j.dump();
}

}  // namespace depprof
