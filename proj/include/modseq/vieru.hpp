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

// Zero counts of the primitives of v = [2,1,2,0,0,1,0,0] mod 4: a direct
// oracle, the six-case recursion on blocks 2^k <= s < 2^{k+1}, and the
// correction sequence d_k in its equivalent forms.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "modseq/sequence.hpp"

namespace modseq {

// [2,1,2,4,8,1,8,4] mod 12.
PeriodicSequence vieru_sequence();
// Its 2-part [2,1,2,0,0,1,0,0] mod 4.
PeriodicSequence vieru_seed();

// v^s = 2 bin_{s+4} + 3 bin_{s+3} + 2 bin_{s+2} + 3 bin_{s+1} + 2 bin_s mod 4.
PeriodicSequence vieru_primitive(std::uint64_t s, const Limits& limits = {});
// Zeros in one minimal period of vieru_primitive(s).
std::uint64_t z_oracle(std::uint64_t s, const Limits& limits = {});

// The initial block for 32 <= s < 64 as printed in the source table.
extern const std::array<std::uint64_t, 32> kPrintedZ5;
// The same block recomputed by z_oracle.
std::array<std::uint64_t, 32> regenerate_z5();

// Scaled constants for block k: c, c', c''.
std::array<std::uint64_t, 4> vieru_c(unsigned k);
std::array<std::uint64_t, 4> vieru_c_prime(unsigned k);
std::array<std::uint64_t, 4> vieru_c_second(unsigned k);

enum class VieruCase { A, B, C, D, E, F };
const char* to_string(VieruCase c);

struct CaseInfo {
  VieruCase kind;
  unsigned k;
  unsigned i;  // 1..4 for B, D, F; 0 otherwise
};
// s >= 64.
CaseInfo classify_vieru_case(std::uint64_t s);

class VieruRecursion {
 public:
  enum class Base { Oracle, Printed };

  explicit VieruRecursion(Base base = Base::Oracle, Limits limits = {});

  // Z(s) by the recursion for s >= 64, the base block for 32 <= s < 64 and
  // the oracle below 32.
  std::uint64_t z(std::uint64_t s);
  Base base() const { return base_; }

 private:
  Base base_;
  Limits limits_;
  std::array<std::uint64_t, 32> block_{};
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

std::uint64_t z_recursive(std::uint64_t s, VieruRecursion::Base base = VieruRecursion::Base::Oracle);

// First and one-past-last s of the d_k range.
std::uint64_t d_range_begin(unsigned k);
std::uint64_t d_range_end(unsigned k);

// 2^{z(s+1)} + 2^{z(s+3)} - 2 * 2^{z(s+1 | s+3)}.
std::uint64_t d_closed(unsigned k, std::uint64_t s);
// d_5 = (4,8,4,4), d_{k+1} = (2 d_k, 4, 2^{k-1}, 2^{k-2}, 2^{k-2}, d_k).
std::vector<std::uint64_t> d_recursive(unsigned k);
// 2^{wt(2^k + 2^{k-1} - 4 - s) + 1}.
std::uint64_t d_hamming(unsigned k, std::uint64_t s);
// |E_{s+1} symmetric difference E_{s+3}| over [0, 2^{k+2}), by enumeration.
std::uint64_t d_from_esets(unsigned k, std::uint64_t s);
// 2^{k - a(s - 2^k - 2^{k-2} + 4)}.
std::uint64_t d_a063787(unsigned k, std::uint64_t s);

// a(2^t) = t + 1, a(2^t + i) = 1 + a(i) for 0 < i < 2^t.
unsigned a063787(std::uint64_t n);

// Hamming weights of 1 .. 2^{h+1} - 4 via w_2 = (1,1,2,1),
// w_{h+1} = (w_h, h, h, h+1, 1, w_h + 1).
std::vector<unsigned> w_sequence(unsigned h);

// d_k(2^k + 2^{k-2} + 2^{t_1} + ... + 2^{t_h} - 4) == 2^{k-h-t_h} for
// strictly decreasing exponents; UsageError when s leaves the d_k range.
bool a_relation_check(unsigned k, std::span<const unsigned> exponents);

}  // namespace modseq
