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

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace modseq {

// Caller supplied arguments outside an operation's domain.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request would materialize more data than the configured limits allow.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bounds on how much a single operation may materialize.
struct Limits {
  // Largest primitive order s that may be computed by iterated summation.
  std::uint64_t max_order = std::uint64_t{1} << 16;
  // Largest number of residues a single materialized period may hold.
  std::size_t max_length = std::size_t{1} << 24;
};

}  // namespace modseq
