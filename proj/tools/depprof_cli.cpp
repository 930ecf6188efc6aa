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

// depprof: dependency discovery, reductions and their verification harness.
//
// Exit codes: 0 success (detect: found), 1 detect: not found / verify:
// bijection failed, 2 usage, input or refusal error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "depprof/discovery.hpp"
#include "depprof/errors.hpp"
#include "depprof/formula.hpp"
#include "depprof/gadget_registry.hpp"
#include "depprof/hypergraph.hpp"
#include "depprof/instance_io.hpp"
#include "depprof/oracle.hpp"
#include "depprof/random_instance.hpp"
#include "depprof/relation.hpp"

namespace {

using namespace depprof;

constexpr int kExitUsage = 2;

enum class Format { kJson, kText };

struct Globals {
  std::uint64_t seed = 1;
  std::string oracle_bound;
  Format format = Format::kJson;
};

void emit(const std::string& line) { std::cout << line << '\n' << std::flush; }

std::string join(const std::vector<std::string>& names, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? sep : "") + names[i];
  return out;
}

// "vars=12,attrs=7,rows=10"; missing keys keep their defaults.
OracleBounds parse_oracle_bound(const std::string& spec) {
  OracleBounds b;
  if (spec.empty()) return b;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    const auto item = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--oracle-bound expects key=value pairs, got '" + item + "'");
    const auto key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      value = std::stoul(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("--oracle-bound value for '" + key + "' is not a number");
    }
    if (key == "vars")
      b.max_variables = value;
    else if (key == "attrs")
      b.max_attributes = value;
    else if (key == "rows")
      b.max_rows = value;
    else
      throw InputError("--oracle-bound key must be vars, attrs or rows, got '" + key + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return b;
}

template <class T>
const T& expect(const Instance& inst, const std::string& path) {
  if (const auto* p = std::get_if<T>(&inst)) return *p;
  throw InputError(path + ": unexpected input kind " + kind_name(kind_of(inst)));
}

Relation load_relation_arg(const std::string& path) { return expect<Relation>(load_instance(path), path); }

// Solution printers for both output formats.

class Printer {
 public:
  explicit Printer(Format f) : format_(f) {}

  void ucc(const Relation& rel, const AttrSet& x) const {
    emit(json() ? ucc_json(rel, x) : "{" + join(rel.names_of(x)) + "}");
  }
  void fd(const Relation& rel, const FunctionalDependency& fd) const {
    emit(json() ? fd_json(rel, fd) : "{" + join(rel.names_of(fd.lhs)) + "} -> " + rel.schema()[fd.rhs]);
  }
  void ind(const Relation& r, const Relation& s, const InclusionDependency& d) const {
    if (json()) return emit(ind_json(r, s, d));
    std::vector<std::string> pairs;
    for (std::size_t i = 0; i < d.size(); ++i) pairs.push_back(r.schema()[d.lhs[i]] + "->" + s.schema()[d.rhs[i]]);
    emit("{" + join(pairs) + "}");
  }
  void transversal(const Hypergraph& h, const VertexSet& t) const {
    emit(json() ? transversal_json(h, t) : "{" + join(h.names_of(t)) + "}");
  }
  void tagged(const std::vector<Hypergraph>& padded, const TaggedTransversal& t) const {
    emit(json() ? tagged_transversal_json(padded, t)
                : std::to_string(t.source_index) + ": {" + join(padded[t.source_index].names_of(t.vertex_set)) + "}");
  }
  void assignment(const NormalizedFormula& phi, const Assignment& a) const {
    emit(json() ? assignment_json(phi, a) : "{" + join(phi.names_of(a)) + "}");
  }
  void instance(const Instance& inst) const {
    if (json()) return emit(instance_to_json(inst));
    std::cout << instance_to_text(inst) << std::flush;
  }

 private:
  bool json() const { return format_ == Format::kJson; }
  Format format_;
};

// Subcommands.

struct ProfileArgs {
  std::string input;
  bool uccs = false;
  bool fds = false;
  std::optional<std::string> fds_rhs;
  std::optional<std::size_t> max_size;
};

int run_profile(const ProfileArgs& a, const Printer& out) {
  const auto rel = load_relation_arg(a.input);
  const auto fits = [&](std::size_t size) { return !a.max_size || size <= *a.max_size; };
  if (a.fds_rhs) {
    for_each_minimal_fd_fixed(rel, rel.attribute(*a.fds_rhs), [&](const FunctionalDependency& fd) {
      if (fits(fd.lhs.size())) out.fd(rel, fd);
      return true;
    });
  } else if (a.fds) {
    for_each_minimal_fd(rel, [&](const FunctionalDependency& fd) {
      if (fits(fd.lhs.size())) out.fd(rel, fd);
      return true;
    });
  } else {
    for_each_minimal_ucc(rel, [&](const AttrSet& x) {
      if (fits(x.size())) out.ucc(rel, x);
      return true;
    });
  }
  return 0;
}

struct ProfileIndArgs {
  std::string left;
  std::string right;
  bool identity = false;
};

int run_profile_ind(const ProfileIndArgs& a, const Printer& out) {
  const auto r = load_relation_arg(a.left);
  const auto s = load_relation_arg(a.right);
  if (a.identity) {
    for (const auto& x : enumerate_maximal_inds_identity(r, s)) out.ind(r, s, InclusionDependency::identity(x));
  } else {
    for_each_maximal_ind(r, s, [&](const InclusionDependency& d) {
      out.ind(r, s, d);
      return true;
    });
  }
  return 0;
}

struct DetectArgs {
  std::string kind;
  std::vector<std::string> inputs;
  std::size_t k = 0;
  std::optional<std::string> rhs;
};

void require_inputs(const std::vector<std::string>& inputs, std::size_t n, const std::string& what) {
  if (inputs.size() != n)
    throw InputError(what + " takes " + std::to_string(n) + " input file" + (n == 1 ? "" : "s") + ", got " +
                     std::to_string(inputs.size()));
}

int run_detect(const DetectArgs& a, const Printer&, Format format) {
  bool found = false;
  if (a.kind == "hitting-set") {
    require_inputs(a.inputs, 1, a.kind);
    found = has_hitting_set_of_size(expect<Hypergraph>(load_instance(a.inputs[0]), a.inputs[0]), a.k);
  } else if (a.kind == "wsat") {
    require_inputs(a.inputs, 1, a.kind);
    found = weighted_sat(expect<NormalizedFormula>(load_instance(a.inputs[0]), a.inputs[0]), a.k);
  } else {
    DetectionQuery q;
    q.budget = a.k;
    q.fixed_rhs = a.rhs;
    std::size_t files = 1;
    if (a.kind == "ucc") {
      q.kind = DetectionKind::kUcc;
    } else if (a.kind == "fd") {
      q.kind = DetectionKind::kFd;
    } else if (a.kind == "fd-fixed") {
      q.kind = DetectionKind::kFdFixedRhs;
    } else if (a.kind == "ind") {
      q.kind = DetectionKind::kInd;
      files = 2;
    } else if (a.kind == "ind-identity") {
      q.kind = DetectionKind::kIndIdentity;
      files = 2;
    } else {
      throw InputError("unknown detection kind '" + a.kind +
                       "' (ucc, fd, fd-fixed, ind, ind-identity, hitting-set, wsat)");
    }
    q.validate();
    require_inputs(a.inputs, files, a.kind);
    const auto r = load_relation_arg(a.inputs[0]);
    if (files == 2) {
      const auto s = load_relation_arg(a.inputs[1]);
      found = run_detection(q, r, &s);
    } else {
      found = run_detection(q, r);
    }
  }
  if (format == Format::kJson)
    emit("{\"kind\":\"detect\",\"problem\":\"" + a.kind + "\",\"k\":" + std::to_string(a.k) +
         ",\"found\":" + (found ? "true" : "false") + "}");
  else
    emit(found ? "found" : "not found");
  return found ? 0 : 1;
}

struct GadgetArgs {
  std::string gadget;
  std::vector<std::string> inputs;
  std::optional<std::string> rhs;
  std::string output;
  std::optional<std::size_t> random;
};

Instance load_source(const GadgetEntry& g, const GadgetArgs& a) {
  std::vector<Instance> parts;
  for (const auto& path : a.inputs) parts.push_back(load_instance(path));
  return assemble_instance(g.source_kind, std::move(parts), a.rhs);
}

int run_reduce(const GadgetArgs& a, const Printer& out, Format format) {
  const auto& g = find_gadget(a.gadget);
  const auto target = g.forward(load_source(g, a));
  if (a.output.empty()) {
    out.instance(target);
    return 0;
  }
  std::ofstream file(a.output, std::ios::binary);
  if (!file) throw InputError("cannot write " + a.output);
  const bool as_json = a.output.ends_with(".json") || (format == Format::kJson && !a.output.ends_with(".csv") &&
                                                       !a.output.ends_with(".hg") && !a.output.ends_with(".wf"));
  file << (as_json ? instance_to_json(target) + "\n" : instance_to_text(target));
  return 0;
}

int run_verify(const GadgetArgs& a, const Globals& globals, Format format) {
  const auto& g = find_gadget(a.gadget);
  const auto bounds = parse_oracle_bound(globals.oracle_bound);
  std::vector<Instance> sources;
  if (a.random) {
    if (!a.inputs.empty()) throw InputError("--random replaces input files");
    for (std::size_t i = 0; i < *a.random; ++i) sources.push_back(g.random_source(globals.seed + i));
  } else {
    sources.push_back(load_source(g, a));
  }
  std::size_t failed = 0;
  for (const auto& src : sources) {
    const auto rep = g.verify(src, bounds);
    if (!rep.bijection_ok) ++failed;
    if (format == Format::kJson) {
      emit(rep.to_json());
    } else {
      std::string line = rep.gadget_name + " " + rep.instance_digest + " " + std::to_string(rep.source_count) + "/" +
                         std::to_string(rep.target_count) + (rep.bijection_ok ? " ok" : " MISMATCH");
      if (rep.mismatch_witness)
        line += " source=" + rep.mismatch_witness->first + " target=" + rep.mismatch_witness->second;
      emit(line);
    }
  }
  return failed == 0 ? 0 : 1;
}

struct OracleArgs {
  std::string kind;
  std::vector<std::string> inputs;
  std::optional<std::string> rhs;
};

int run_oracle(const OracleArgs& a, const Globals& globals, const Printer& out) {
  const auto bounds = parse_oracle_bound(globals.oracle_bound);
  if (a.kind == "uccs") {
    require_inputs(a.inputs, 1, a.kind);
    const auto rel = load_relation_arg(a.inputs[0]);
    for (const auto& x : oracle_minimal_uccs(rel, bounds)) out.ucc(rel, x);
  } else if (a.kind == "fds") {
    require_inputs(a.inputs, 1, a.kind);
    const auto rel = load_relation_arg(a.inputs[0]);
    const auto fds = a.rhs ? oracle_minimal_fds_fixed(rel, rel.attribute(*a.rhs), bounds) : oracle_minimal_fds(rel, bounds);
    for (const auto& fd : fds) out.fd(rel, fd);
  } else if (a.kind == "inds" || a.kind == "inds-identity") {
    require_inputs(a.inputs, 2, a.kind);
    const auto r = load_relation_arg(a.inputs[0]);
    const auto s = load_relation_arg(a.inputs[1]);
    if (a.kind == "inds") {
      for (const auto& d : oracle_maximal_inds(r, s, bounds)) out.ind(r, s, d);
    } else {
      for (const auto& x : oracle_maximal_identity_inds(r, s, bounds)) out.ind(r, s, InclusionDependency::identity(x));
    }
  } else if (a.kind == "transversals") {
    require_inputs(a.inputs, 1, a.kind);
    const auto h = expect<Hypergraph>(load_instance(a.inputs[0]), a.inputs[0]);
    for (const auto& t : oracle_minimal_transversals(h, bounds)) out.transversal(h, t);
  } else if (a.kind == "max-assignments") {
    require_inputs(a.inputs, 1, a.kind);
    const auto phi = expect<NormalizedFormula>(load_instance(a.inputs[0]), a.inputs[0]);
    for (const auto& x : oracle_maximal_satisfying_assignments(phi, bounds)) out.assignment(phi, x);
  } else {
    throw InputError("unknown oracle kind '" + a.kind +
                     "' (uccs, fds, inds, inds-identity, transversals, max-assignments)");
  }
  return 0;
}

int run_transversals(const std::vector<std::string>& inputs, const Printer& out) {
  if (inputs.empty()) throw InputError("transversals needs at least one hypergraph");
  std::vector<Hypergraph> hs;
  for (const auto& path : inputs) hs.push_back(expect<Hypergraph>(load_instance(path), path));
  if (hs.size() == 1) {
    for_each_minimal_transversal(hs[0], [&](const VertexSet& t) {
      out.transversal(hs[0], t);
      return true;
    });
    return 0;
  }
  const auto padded = pad_to_common_universe(hs);
  for_each_transversal_union(hs, [&](const TaggedTransversal& t) {
    out.tagged(padded, t);
    return true;
  });
  return 0;
}

int run_max_assignments(const std::string& input, const Printer& out) {
  const auto phi = expect<NormalizedFormula>(load_instance(input), input);
  for_each_maximal_satisfying_assignment(phi, [&](const Assignment& a) {
    out.assignment(phi, a);
    return true;
  });
  return 0;
}

int run_generate(const std::string& kind, const Globals& globals, const Printer& out) {
  if (kind == "hypergraph") {
    out.instance(random_hypergraph(globals.seed));
  } else if (kind == "relation") {
    out.instance(random_relation(globals.seed));
  } else if (kind == "formula") {
    out.instance(random_formula(globals.seed));
  } else if (kind == "relation-pair") {
    out.instance(random_relation_pair(globals.seed));
  } else {
    out.instance(find_gadget(kind).random_source(globals.seed));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dependency discovery, reductions between discovery problems and their verification harness."};
  app.name("depprof");
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for random instances")->capture_default_str();
  app.add_option("--oracle-bound", globals.oracle_bound, "Brute-force limits, e.g. vars=12,attrs=7,rows=10");
  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  ProfileArgs profile;
  auto* profile_cmd = app.add_subcommand("profile", "Enumerate minimal UCCs or FDs of a CSV table");
  profile_cmd->add_option("table", profile.input, "CSV file")->required();
  auto* uccs_flag = profile_cmd->add_flag("--uccs", profile.uccs, "Minimal unique column combinations (default)");
  auto* fds_flag = profile_cmd->add_flag("--fds", profile.fds, "Minimal non-trivial functional dependencies");
  auto* rhs_opt = profile_cmd->add_option("--fds-rhs", profile.fds_rhs, "Minimal FDs with this right-hand side");
  uccs_flag->excludes(fds_flag)->excludes(rhs_opt);
  fds_flag->excludes(rhs_opt);
  profile_cmd->add_option("--max-size", profile.max_size, "Only print solutions with at most this many attributes");

  ProfileIndArgs profile_ind;
  auto* profile_ind_cmd = app.add_subcommand("profile-ind", "Enumerate maximal INDs from one table into another");
  profile_ind_cmd->add_option("left", profile_ind.left, "CSV file r")->required();
  profile_ind_cmd->add_option("right", profile_ind.right, "CSV file s")->required();
  auto* identity_flag = profile_ind_cmd->add_flag("--identity", profile_ind.identity, "Identity column mapping");
  bool general = false;
  profile_ind_cmd->add_flag("--general", general, "Any injective column mapping (default)")->excludes(identity_flag);

  DetectArgs detect;
  auto* detect_cmd = app.add_subcommand("detect", "Decide whether a solution of size k exists (exit 0 found, 1 not)");
  detect_cmd->add_option("kind", detect.kind, "ucc, fd, fd-fixed, ind, ind-identity, hitting-set or wsat")->required();
  detect_cmd->add_option("inputs", detect.inputs, "Input files")->required();
  detect_cmd->add_option("-k", detect.k, "Solution size")->required();
  detect_cmd->add_option("--rhs", detect.rhs, "Right-hand side for fd-fixed");

  GadgetArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Apply a reduction gadget to an instance");
  reduce_cmd->add_option("gadget", reduce.gadget, "Gadget name")->required();
  reduce_cmd->add_option("inputs", reduce.inputs, "Input files")->required();
  reduce_cmd->add_option("--rhs", reduce.rhs, "Right-hand side attribute for fixed-RHS sources");
  reduce_cmd->add_option("-o,--output", reduce.output, "Output file (.json, .csv, .hg or .wf)");

  GadgetArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a gadget's solution bijection against brute force");
  verify_cmd->add_option("gadget", verify.gadget, "Gadget name")->required();
  verify_cmd->add_option("inputs", verify.inputs, "Input files");
  verify_cmd->add_option("--rhs", verify.rhs, "Right-hand side attribute for fixed-RHS sources");
  verify_cmd->add_option("--random", verify.random, "Check N seeded random instances, starting at --seed");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force enumeration");
  oracle_cmd->add_option("kind", oracle.kind, "uccs, fds, inds, inds-identity, transversals or max-assignments")
      ->required();
  oracle_cmd->add_option("inputs", oracle.inputs, "Input files")->required();
  oracle_cmd->add_option("--rhs", oracle.rhs, "Fixed right-hand side for fds");

  std::vector<std::string> transversal_inputs;
  auto* transversals_cmd =
      app.add_subcommand("transversals", "Minimal transversals of one hypergraph, or the tagged union of several");
  transversals_cmd->add_option("hypergraphs", transversal_inputs, "Hypergraph files")->required();

  std::string max_input;
  auto* max_cmd = app.add_subcommand("max-assignments", "Maximal satisfying assignments of an antimonotone formula");
  max_cmd->add_option("formula", max_input, "Formula file")->required();

  std::string generate_kind;
  auto* generate_cmd = app.add_subcommand("generate", "Print a seeded random instance");
  generate_cmd->add_option("kind", generate_kind, "hypergraph, relation, formula, relation-pair or a gadget name")
      ->required();

  auto* list_cmd = app.add_subcommand("gadgets", "List the registered gadgets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  globals.format = format_name == "text" ? Format::kText : Format::kJson;
  const Printer out(globals.format);
  try {
    if (*profile_cmd) return run_profile(profile, out);
    if (*profile_ind_cmd) return run_profile_ind(profile_ind, out);
    if (*detect_cmd) return run_detect(detect, out, globals.format);
    if (*reduce_cmd) return run_reduce(reduce, out, globals.format);
    if (*verify_cmd) return run_verify(verify, globals, globals.format);
    if (*oracle_cmd) return run_oracle(oracle, globals, out);
    if (*transversals_cmd) return run_transversals(transversal_inputs, out);
    if (*max_cmd) return run_max_assignments(max_input, out);
    if (*generate_cmd) return run_generate(generate_kind, globals, out);
    if (*list_cmd) {
      for (const auto& g : gadget_registry()) {
        if (globals.format == Format::kJson)
          emit(std::string("{\"name\":\"") + g.name + "\",\"source\":\"" + kind_name(g.source_kind) +
               "\",\"target\":\"" + kind_name(g.target_kind) + "\",\"decision\":" + (g.decision ? "true" : "false") +
               "}");
        else
          emit(g.name + ": " + kind_name(g.source_kind) + " -> " + kind_name(g.target_kind));
      }
      return 0;
    }
  } catch (const RefusalError& e) {
    std::cerr << "depprof: refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "depprof: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
