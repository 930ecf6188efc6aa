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

#include "depprof/random_instance.hpp"

#include <algorithm>
#include <numeric>

namespace depprof {
namespace {

std::vector<std::string> names(std::size_t n, std::size_t offset = 0) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(generated_name(offset + i));
  return out;
}

Row random_row(Rng& rng, std::size_t n, std::size_t domain) {
  Row row;
  for (std::size_t a = 0; a < n; ++a) row.push_back(std::to_string(rng.between(0, domain - 1)));
  return row;
}

}  // namespace

std::size_t Rng::between(std::size_t lo, std::size_t hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
}

std::string generated_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "c" + std::to_string(i);
}

Hypergraph random_hypergraph(std::uint64_t seed, const SizeBounds& b) {
  Rng rng(seed);
  const auto n = rng.between(b.min_vertices, b.max_vertices);
  Hypergraph h(names(n));
  const auto m = rng.between(0, b.max_edges);
  for (std::size_t j = 0; j < m; ++j) {
    VertexSet e;
    for (std::size_t v = 0; v < n; ++v)
      if (rng.percent(50)) e.insert(v);
    if (e.empty() && !b.allow_empty_edge && n > 0) e.insert(rng.between(0, n - 1));
    h.add_edge(std::move(e));
  }
  return h;
}

Relation random_relation(std::uint64_t seed, const SizeBounds& b) {
  Rng rng(seed);
  const auto n = rng.between(std::max<std::size_t>(1, b.min_attributes), b.max_attributes);
  const auto rows = rng.between(b.min_rows, b.max_rows);
  const auto domain = rng.between(1, b.max_domain);
  std::vector<Row> data;
  for (std::size_t i = 0; i < rows; ++i) data.push_back(random_row(rng, n, domain));
  return Relation(names(n), std::move(data));
}

NormalizedFormula random_formula(std::uint64_t seed, const SizeBounds& b) {
  Rng rng(seed);
  const auto n = rng.between(std::max<std::size_t>(1, b.min_variables), b.max_variables);
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  NormalizedFormula phi(std::move(vars));
  const auto blocks = rng.between(1, b.max_blocks);
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < blocks; ++k) {
    Block block;
    const auto terms = rng.between(1, b.max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.between(0, i - 1)]);
      const auto size = rng.between(0, std::min(b.max_term_size, n));
      IndexSet vs(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size));
      block.push_back(Term::all_negative(vs));
    }
    phi.add_block(std::move(block));
  }
  return phi;
}

RelationPair random_relation_pair(std::uint64_t seed, const SizeBounds& b) {
  Rng rng(seed);
  auto r = random_relation(rng.between(0, ~std::size_t{0} - 1), b);
  const auto ns = b.same_schema ? r.num_attributes()
                                : rng.between(std::max<std::size_t>(1, b.min_attributes), b.max_attributes);
  const auto schema = b.same_schema ? r.schema() : names(ns, 15);
  const auto rows = rng.between(b.min_rows, b.max_rows);
  const auto domain = rng.between(1, b.max_domain);
  std::vector<Row> data;
  for (std::size_t i = 0; i < rows; ++i) {
    if (r.num_rows() > 0 && rng.percent(b.copy_percent)) {
      const auto& src = r.rows()[rng.between(0, r.num_rows() - 1)];
      Row row;
      for (std::size_t j = 0; j < ns; ++j) row.push_back(b.same_schema ? src[j] : src[rng.between(0, src.size() - 1)]);
      if (rng.percent(50)) row[rng.between(0, ns - 1)] = std::to_string(rng.between(0, domain - 1));
      data.push_back(std::move(row));
    } else {
      data.push_back(random_row(rng, ns, domain));
    }
  }
  return {std::move(r), Relation(schema, std::move(data))};
}

}  // namespace depprof
