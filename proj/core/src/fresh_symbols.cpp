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

#include "depprof/fresh_symbols.hpp"

#include <algorithm>

namespace depprof {

FreshSymbolPool::FreshSymbolPool(const std::vector<std::string_view>& taken) : prefix_("!f") {
  while (std::any_of(taken.begin(), taken.end(), [&](std::string_view v) { return v.starts_with(prefix_); }))
    prefix_ += '_';
}

FreshSymbolPool FreshSymbolPool::avoiding(std::initializer_list<const Relation*> relations) {
  std::vector<std::string_view> taken;
  for (const auto* rel : relations) {
    for (const auto& a : rel->schema()) taken.emplace_back(a);
    for (const auto& row : rel->rows())
      for (const auto& v : row) taken.emplace_back(v);
  }
  return FreshSymbolPool(taken);
}

std::string FreshSymbolPool::next() { return prefix_ + std::to_string(counter_++); }

}  // namespace depprof
