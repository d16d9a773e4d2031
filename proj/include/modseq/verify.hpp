// Copyright 2026 The modseq Authors.
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

// Conformance suites re-checking each implemented identity on enumerable
// instances against materialized sequences.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modseq/modular.hpp"

namespace modseq {

struct Claim {
  std::string_view id;
  std::string_view statement;
};

std::span<const Claim> claim_registry();
// nullptr for unknown ids.
const Claim* find_claim(std::string_view id);

struct Failure {
  std::string claim_id;
  // JSON texts, so a failure can be replayed from its record.
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct ConformanceReport {
  std::string suite;
  std::uint64_t instance_count = 0;
  std::vector<Failure> failures;
  double wall_seconds = 0;

  bool ok() const { return failures.empty(); }
  // One JSON object per failure, then a summary object; newline-terminated.
  std::string to_records() const;
  std::string summary() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

ConformanceReport verify_lemmas(const PrimePower& ring, std::uint64_t s_max);
// Empty c_set means every nonzero constant.
ConformanceReport verify_periods(const PrimePower& ring, std::uint64_t s_max,
                                 std::span<const Residue> c_set = {},
                                 std::uint64_t seed = kDefaultSeed);
ConformanceReport verify_structure(std::span<const std::uint64_t> moduli, std::uint64_t samples,
                                   std::uint64_t seed = kDefaultSeed);
ConformanceReport verify_vieru(unsigned k_max);

}  // namespace modseq
