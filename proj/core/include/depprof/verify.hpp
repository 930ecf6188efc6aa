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
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "depprof/errors.hpp"

namespace depprof {

struct VerificationReport {
  std::string gadget_name;
  std::string instance_digest;
  std::size_t source_count = 0;
  std::size_t target_count = 0;
  bool bijection_ok = false;
  /// (source side, target side); either may be empty when the mismatch is
  /// a missing preimage or an unmapped source solution.
  std::optional<std::pair<std::string, std::string>> mismatch_witness;

  std::string to_json() const;
};

/// FNV-1a 64-bit hash, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Checks that `back` maps `target` injectively onto `source`, and that
/// every image is a source solution. Records the first mismatch.
template <class S, class T>
VerificationReport check_bijection(std::string gadget_name, std::string digest, const std::vector<S>& source,
                                   const std::vector<T>& target, const std::function<S(const T&)>& back,
                                   const std::function<std::string(const S&)>& show_source,
                                   const std::function<std::string(const T&)>& show_target) {
  VerificationReport report{std::move(gadget_name), std::move(digest), source.size(), target.size(), true, {}};
  const std::set<S> wanted(source.begin(), source.end());
  std::set<S> hit;
  auto fail = [&](std::string s, std::string t) {
    if (!report.mismatch_witness) report.mismatch_witness.emplace(std::move(s), std::move(t));
    report.bijection_ok = false;
  };
  for (const auto& t : target) {
    std::optional<S> image;
    try {
      image = back(t);
    } catch (const InputError&) {
      fail("", show_target(t));
      continue;
    }
    if (!wanted.contains(*image) || !hit.insert(*image).second) fail(show_source(*image), show_target(t));
  }
  for (const auto& s : source)
    if (!hit.contains(s)) fail(show_source(s), "");
  if (report.source_count != report.target_count) report.bijection_ok = false;
  return report;
}

/// Parameter correspondence for decision gadgets: source_sizes[k] must equal
/// target_sizes[map(k)] for every k; targets out of range count as false.
VerificationReport check_parameter_correspondence(std::string gadget_name, std::string digest,
                                                  const std::vector<bool>& source_sizes,
                                                  const std::vector<bool>& target_sizes,
                                                  const std::function<std::size_t(std::size_t)>& map);

}  // namespace depprof
