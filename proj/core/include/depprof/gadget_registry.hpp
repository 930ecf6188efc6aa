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

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "depprof/instance_io.hpp"
#include "depprof/oracle.hpp"
#include "depprof/verify.hpp"

namespace depprof {

/// A gadget with its harness hooks. Parsimonious gadgets are checked for a
/// bijection between brute-force solution sets; decision gadgets for
/// parameter correspondence over every budget k.
struct GadgetEntry {
  std::string name;
  InstanceKind source_kind;
  InstanceKind target_kind;
  bool decision = false;
  /// What the deliberately broken variant does.
  std::string mutation;

  std::function<Instance(const Instance&)> forward;
  /// Source and target are enumerated by the oracles; the row bound applies
  /// to the source only. Throws RefusalError when a bound is exceeded.
  std::function<VerificationReport(const Instance&, const OracleBounds&)> verify;
  std::function<VerificationReport(const Instance&, const OracleBounds&)> verify_mutated;
  /// Seeded source instance sized so that source and target stay within
  /// the default oracle bounds.
  std::function<Instance(std::uint64_t)> random_source;
};

const std::vector<GadgetEntry>& gadget_registry();
/// Throws InputError for unknown names.
const GadgetEntry& find_gadget(std::string_view name);

}  // namespace depprof
