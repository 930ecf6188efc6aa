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

// Acceptance criteria AC1-AC8. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "depprof/discovery.hpp"
#include "depprof/formula.hpp"
#include "depprof/formula_io.hpp"
#include "depprof/gadget_registry.hpp"
#include "depprof/hypergraph.hpp"
#include "depprof/oracle.hpp"
#include "depprof/random_instance.hpp"
#include "depprof/reductions.hpp"

namespace {

using namespace depprof;
using Clock = std::chrono::steady_clock;

constexpr const char* kExampleFormula =
    "((!x1 & !x2 & !x4) | (!x3 & !x4)) & ((!x1 & !x3) | (!x2 & !x5) | (!x1 & !x4 & !x5))";

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %s  %s  [%.2f s, limit %.0f s%s]\n", id, pass ? "PASS" : "FAIL", out.detail.c_str(), secs, limit_s,
              in_time ? "" : ", TOO SLOW");
  std::fflush(stdout);
}

SizeBounds relation_corpus_bounds() {
  SizeBounds b;
  b.max_attributes = 7;
  b.max_rows = 10;
  b.max_domain = 3;
  return b;
}

SizeBounds hypergraph_corpus_bounds() {
  SizeBounds b;
  b.max_vertices = 7;
  b.max_edges = 12;
  return b;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Outcome ac1() {
  const auto phi = parse_formula(kExampleFormula);
  std::string got;
  bool ok = phi.num_variables() == 5 && phi.is_antimonotone();
  for (std::size_t k = 0; k <= 5; ++k) {
    const bool sat = weighted_sat(phi, k);
    got += (k ? "," : "") + std::to_string(k) + (sat ? ":T" : ":F");
    ok = ok && sat == (k <= 2);
  }
  return {ok, "weighted_sat k=0..5 -> " + got + " (want T,T,T,F,F,F)"};
}

Outcome ac2() {
  std::size_t mismatches = 0;
  std::size_t total = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto rel = random_relation(seed, relation_corpus_bounds());
    const auto fast = enumerate_minimal_uccs(rel);
    const auto slow = oracle_minimal_uccs(rel);
    total += slow.size();
    if (fast != slow) ++mismatches;
  }
  return {mismatches == 0, "500 relations, " + std::to_string(total) + " minimal UCCs, " +
                               std::to_string(mismatches) + " mismatching instances"};
}

Outcome ac3() {
  std::size_t oracle_mismatch = 0;
  std::size_t union_mismatch = 0;
  std::size_t total = 0;
  const auto g = gadgets::db_to_hypergraph_union();
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto rel = random_relation(seed, relation_corpus_bounds());
    const auto fast = enumerate_minimal_fds(rel);
    const auto slow = oracle_minimal_fds(rel);
    total += slow.size();
    if (fast != slow) ++oracle_mismatch;
    const auto hs = g.forward(rel);
    std::vector<FunctionalDependency> via_union;
    for (const auto& t : transversal_union(hs)) via_union.push_back(g.solution_back(rel, hs, t));
    std::sort(via_union.begin(), via_union.end());
    if (via_union != slow) ++union_mismatch;
  }
  return {oracle_mismatch == 0 && union_mismatch == 0,
          "500 relations, " + std::to_string(total) + " minimal FDs, " + std::to_string(oracle_mismatch) +
              " oracle mismatches, " + std::to_string(union_mismatch) + " transversal-union mismatches"};
}

Outcome ac4() {
  std::size_t enum_mismatch = 0;
  std::size_t min_mismatch = 0;
  std::size_t dual_checked = 0;
  std::size_t dual_mismatch = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto h = random_hypergraph(seed, hypergraph_corpus_bounds());
    const auto tr = minimal_transversals(h);
    if (tr != sorted(brute_force_minimal_transversals(h))) ++enum_mismatch;
    const auto m = minimize(h);
    if (minimal_transversals(m) != tr) ++min_mismatch;
    // Duality on the input itself when eligible, otherwise on its minimization.
    const auto& d = h.is_sperner() ? h : m;
    if (d.has_empty_edge() || !d.isolated_vertices().empty()) continue;
    ++dual_checked;
    const auto back = transversal_hypergraph(transversal_hypergraph(d));
    if (back.sorted_edges() != d.sorted_edges()) ++dual_mismatch;
  }
  const bool ok = enum_mismatch == 0 && min_mismatch == 0 && dual_mismatch == 0 && dual_checked > 0;
  return {ok, "500 hypergraphs, " + std::to_string(enum_mismatch) + " enumerator mismatches, " +
                  std::to_string(min_mismatch) + " Tr(min H) mismatches, duality checked on " +
                  std::to_string(dual_checked) + " with " + std::to_string(dual_mismatch) + " mismatches"};
}

Outcome ac5() {
  const std::vector<std::string> names{"hs_to_ucc",           "ucc_to_fd_fixed",        "fd_fixed_to_fd",
                                       "db_to_hypergraph_union", "hypergraph_union_to_db", "ind_identity_to_general",
                                       "conjoin_db_pairs",    "dnf_to_db_pair",         "wa3ns_to_ind_identity"};
  bool ok = true;
  std::string detail;
  for (const auto& name : names) {
    const auto& g = find_gadget(name);
    std::size_t passed = 0;
    std::size_t rejected = 0;
    std::string witness;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const auto inst = g.random_source(seed);
      const auto rep = g.verify(inst, OracleBounds{});
      if (rep.bijection_ok) {
        ++passed;
      } else if (witness.empty() && rep.mismatch_witness) {
        witness = " first witness seed " + std::to_string(seed) + ": " + rep.to_json();
      }
      if (!g.verify_mutated(inst, OracleBounds{}).bijection_ok) ++rejected;
    }
    const bool gadget_ok = passed == 200 && rejected > 0;
    ok = ok && gadget_ok;
    detail += "\n    " + name + ": " + std::to_string(passed) + "/200 bijections, mutation rejected on " +
              std::to_string(rejected) + "/200" + (gadget_ok ? "" : "  <-- FAIL" + witness);
  }
  return {ok, "9 gadgets x 200 seeded instances" + detail};
}

Outcome ac6() {
  std::size_t fd_checks = 0, fd_mismatch = 0, ind_checks = 0, ind_mismatch = 0;
  const auto& fd_gadget = find_gadget("fd_to_cnf");
  const auto& ind_gadget = find_gadget("ind_to_wa3ns");
  std::size_t harness_fail = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto fd_inst = fd_gadget.random_source(seed);
    const auto& rel = std::get<Relation>(fd_inst);
    const auto cnf = fd_to_cnf(rel);
    for (std::size_t k = 0; k <= rel.num_attributes() + 1; ++k, ++fd_checks)
      if (detect_fd(rel, k) != weighted_sat(cnf, k + 1)) ++fd_mismatch;
    if (!fd_gadget.verify(fd_inst, OracleBounds{}).bijection_ok) ++harness_fail;

    const auto ind_inst = ind_gadget.random_source(seed);
    const auto& p = std::get<RelationPair>(ind_inst);
    const auto phi = ind_to_wa3ns(p);
    for (std::size_t k = 0; k <= phi.num_variables(); ++k, ++ind_checks)
      if (detect_ind(p.r, p.s, k) != weighted_sat(phi, k)) ++ind_mismatch;
    if (!ind_gadget.verify(ind_inst, OracleBounds{}).bijection_ok) ++harness_fail;
  }
  return {fd_mismatch == 0 && ind_mismatch == 0 && harness_fail == 0,
          "200 instances each; FD: " + std::to_string(fd_checks) + " budgets, " + std::to_string(fd_mismatch) +
              " mismatches; IND: " + std::to_string(ind_checks) + " budgets, " + std::to_string(ind_mismatch) +
              " mismatches; oracle correspondence failures " + std::to_string(harness_fail)};
}

Outcome ac7() {
  SizeBounds b;
  b.max_variables = 10;
  b.max_blocks = 3;
  b.max_terms = 3;
  std::size_t mismatches = 0;
  std::size_t subsets = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto phi = random_formula(seed, b);
    const auto p = wa3ns_to_ind_identity(phi);
    const auto n = phi.num_variables();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m, ++subsets) {
      IndexSet x;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1) x.insert(i);
      if (evaluate(phi, x) != is_ind(p.r, p.s, InclusionDependency::identity(x))) ++mismatches;
    }
  }
  return {mismatches == 0, "100 formulas, " + std::to_string(subsets) + " subsets, " + std::to_string(mismatches) +
                               " indicator mismatches"};
}

Outcome ac8() {
  std::size_t mismatches = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto h = random_hypergraph(seed, hypergraph_corpus_bounds());
    const auto phi = hypergraph_to_antimonotone_cnf(h);
    std::vector<VertexSet> complements;
    for (const auto& a : maximal_satisfying_assignments(phi)) complements.push_back(a.complement(h.num_vertices()));
    if (sorted(complements) != sorted(brute_force_minimal_transversals(h))) ++mismatches;
  }
  return {mismatches == 0, "200 hypergraphs, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  report("AC1", 1, ac1);
  report("AC2", 60, ac2);
  report("AC3", 120, ac3);
  report("AC4", 60, ac4);
  report("AC5", 600, ac5);
  report("AC6", 300, ac6);
  report("AC7", 300, ac7);
  report("AC8", 60, ac8);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
