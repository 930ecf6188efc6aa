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

#include "depprof/verify.hpp"

#include <cstdio>

#include "json_codec.hpp"

namespace depprof {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string VerificationReport::to_json() const {
  detail::Json j;
  j["gadget"] = gadget_name;
  j["instanceDigest"] = instance_digest;
  j["sourceCount"] = source_count;
  j["targetCount"] = target_count;
  j["bijectionOk"] = bijection_ok;
  if (mismatch_witness)
    j["mismatchWitness"] = {{"source", mismatch_witness->first}, {"target", mismatch_witness->second}};
  return j.dump();
}

VerificationReport check_parameter_correspondence(std::string gadget_name, std::string digest,
                                                  const std::vector<bool>& source_sizes,
                                                  const std::vector<bool>& target_sizes,
                                                  const std::function<std::size_t(std::size_t)>& map) {
  VerificationReport report{std::move(gadget_name), std::move(digest), 0, 0, true, {}};
  for (std::size_t k = 0; k < source_sizes.size(); ++k) {
    const auto mk = map(k);
    const bool src = source_sizes[k];
    const bool tgt = mk < target_sizes.size() && target_sizes[mk];
    report.source_count += src;
    report.target_count += tgt;
    if (src != tgt && !report.mismatch_witness) {
      report.bijection_ok = false;
      report.mismatch_witness.emplace("k=" + std::to_string(k) + (src ? " found" : " none"),
                                      "k=" + std::to_string(mk) + (tgt ? " found" : " none"));
    }
  }
  // Target weights with no source preimage must be unsatisfiable.
  std::vector<bool> covered(target_sizes.size(), false);
  for (std::size_t k = 0; k < source_sizes.size(); ++k)
    if (map(k) < covered.size()) covered[map(k)] = true;
  for (std::size_t w = 0; w < target_sizes.size(); ++w) {
    if (covered[w] || !target_sizes[w]) continue;
    ++report.target_count;
    report.bijection_ok = false;
    if (!report.mismatch_witness) report.mismatch_witness.emplace("", "k=" + std::to_string(w) + " found");
  }
  return report;
}

}  // namespace depprof
