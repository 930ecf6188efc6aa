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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "depprof/relation.hpp"

namespace depprof {

/// Issues symbols `<prefix><n>` that cannot occur among the values it was
/// built from. The prefix starts as "!f" and is extended with '_' until no
/// taken value starts with it.
class FreshSymbolPool {
 public:
  FreshSymbolPool() : FreshSymbolPool(std::vector<std::string_view>{}) {}
  explicit FreshSymbolPool(const std::vector<std::string_view>& taken);

  /// Pool avoiding every value (and attribute name) of the given relations.
  static FreshSymbolPool avoiding(std::initializer_list<const Relation*> relations);

  std::string next();
  const std::string& prefix() const { return prefix_; }
  std::size_t issued() const { return counter_; }

 private:
  std::string prefix_;
  std::size_t counter_ = 0;
};

}  // namespace depprof
