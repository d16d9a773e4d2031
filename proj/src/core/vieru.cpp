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

#include "modseq/vieru.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "modseq/binomial.hpp"

namespace modseq {

namespace {

constexpr PrimePower kZ4{2, 2};

std::array<std::uint64_t, 4> scaled(std::array<std::uint64_t, 4> base, unsigned k) {
  if (k < 5) throw UsageError("the recursion constants are defined for k >= 5");
  for (auto& x : base) x <<= (k - 5);
  return base;
}

void require_d_range(unsigned k, std::uint64_t s) {
  if (k < 5) throw UsageError("d_k is defined for k >= 5");
  if (k > 60) throw UsageError("k too large");
  if (s < d_range_begin(k) || s >= d_range_end(k)) {
    throw UsageError("s = " + std::to_string(s) + " outside the d_" + std::to_string(k) +
                     " range [" + std::to_string(d_range_begin(k)) + ", " +
                     std::to_string(d_range_end(k)) + ")");
  }
}

unsigned block_of(std::uint64_t s) {
  return static_cast<unsigned>(digits(s, 2).leading_index());
}

}  // namespace

const std::array<std::uint64_t, 32> kPrintedZ5 = {
    32, 48,  64,  88,  64,  80,  88,  92,  64,  80,  88,  104, 92,  104, 108, 94,
    78, 88, 96, 108, 96, 104, 108, 110, 102, 108, 112, 118, 114, 118, 120, 64};

PeriodicSequence vieru_sequence() {
  const std::vector<std::int64_t> v = {2, 1, 2, 4, 8, 1, 8, 4};
  return PeriodicSequence::from_values(12, v);
}

PeriodicSequence vieru_seed() {
  const std::vector<std::int64_t> v = {2, 1, 2, 0, 0, 1, 0, 0};
  return PeriodicSequence::from_values(4, v);
}

PeriodicSequence vieru_primitive(std::uint64_t s, const Limits& limits) {
  static constexpr std::array<Residue, 5> kCoeff = {2, 3, 2, 3, 2};  // bin_s .. bin_{s+4}
  PeriodicSequence acc = PeriodicSequence::constant(4, 0);
  for (std::uint64_t j = 0; j < kCoeff.size(); ++j) {
    acc = acc + scalar_mul(kCoeff[j], bin_seq(kZ4, s + j, limits));
  }
  return acc;
}

std::uint64_t z_oracle(std::uint64_t s, const Limits& limits) {
  const PeriodicSequence f = vieru_primitive(s, limits);
  return static_cast<std::uint64_t>(std::count(f.values().begin(), f.values().end(), 0));
}

std::array<std::uint64_t, 32> regenerate_z5() {
  std::array<std::uint64_t, 32> out{};
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = z_oracle(32 + i);
  return out;
}

std::array<std::uint64_t, 4> vieru_c(unsigned k) { return scaled({48, 32, 40, 44}, k); }
std::array<std::uint64_t, 4> vieru_c_prime(unsigned k) { return scaled({48, 40, 44, 48}, k); }
std::array<std::uint64_t, 4> vieru_c_second(unsigned k) { return scaled({32, 32, 48, 64}, k); }

const char* to_string(VieruCase c) {
  static constexpr const char* kNames[] = {"A", "B", "C", "D", "E", "F"};
  return kNames[static_cast<int>(c)];
}

CaseInfo classify_vieru_case(std::uint64_t s) {
  if (s < 64) throw UsageError("the six-case recursion starts at s = 64");
  const unsigned k = block_of(s);
  const std::uint64_t K = std::uint64_t{1} << k;
  const std::uint64_t quarter = K >> 2;
  const std::uint64_t half = K >> 1;
  if (s <= K + quarter - 5) return {VieruCase::A, k, 0};
  if (s <= K + quarter - 1) return {VieruCase::B, k, static_cast<unsigned>(s - (K + quarter - 5))};
  if (s <= K + half - 5) return {VieruCase::C, k, 0};
  if (s <= K + half - 1) return {VieruCase::D, k, static_cast<unsigned>(s - (K + half - 5))};
  if (s <= 2 * K - 5) return {VieruCase::E, k, 0};
  return {VieruCase::F, k, static_cast<unsigned>(s - (2 * K - 5))};
}

VieruRecursion::VieruRecursion(Base base, Limits limits) : base_(base), limits_(limits) {
  block_ = base == Base::Printed ? kPrintedZ5 : regenerate_z5();
}

std::uint64_t VieruRecursion::z(std::uint64_t s) {
  if (s < 32) return z_oracle(s, limits_);
  if (s < 64) return block_[s - 32];
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  const CaseInfo c = classify_vieru_case(s);
  const unsigned k = c.k;
  const std::uint64_t K = std::uint64_t{1} << k;
  std::uint64_t out = 0;
  switch (c.kind) {
    case VieruCase::A: out = 2 * z(s - K / 2); break;
    case VieruCase::B: out = z(s - K / 2 - K / 8) + vieru_c(k)[c.i - 1]; break;
    case VieruCase::C: out = 2 * z(s - K / 2) - d_closed(k, s); break;
    case VieruCase::D: out = z(s - K / 2 - K / 4) + vieru_c_prime(k)[c.i - 1]; break;
    case VieruCase::E: out = z(s - K) + 2 * K; break;
    case VieruCase::F: out = z(s - K) + vieru_c_second(k)[c.i - 1]; break;
  }
  memo_.emplace(s, out);
  return out;
}

std::uint64_t z_recursive(std::uint64_t s, VieruRecursion::Base base) {
  VieruRecursion rec(base);
  return rec.z(s);
}

std::uint64_t d_range_begin(unsigned k) {
  return (std::uint64_t{1} << k) + (std::uint64_t{1} << (k - 2));
}

std::uint64_t d_range_end(unsigned k) {
  return (std::uint64_t{1} << k) + (std::uint64_t{1} << (k - 1)) - 4;
}

std::uint64_t d_closed(unsigned k, std::uint64_t s) {
  require_d_range(k, s);
  const auto two = [](unsigned e) { return std::uint64_t{1} << e; };
  return two(zero_count(s + 1)) + two(zero_count(s + 3)) -
         2 * two(zero_count(bitwise_or(s + 1, s + 3)));
}

std::vector<std::uint64_t> d_recursive(unsigned k) {
  if (k < 5) throw UsageError("d_k is defined for k >= 5");
  std::vector<std::uint64_t> d = {4, 8, 4, 4};
  for (unsigned j = 5; j < k; ++j) {
    std::vector<std::uint64_t> next;
    next.reserve(2 * d.size() + 4);
    std::transform(d.begin(), d.end(), std::back_inserter(next), [](auto x) { return 2 * x; });
    next.insert(next.end(), {4, std::uint64_t{1} << (j - 1), std::uint64_t{1} << (j - 2),
                             std::uint64_t{1} << (j - 2)});
    next.insert(next.end(), d.begin(), d.end());
    d = std::move(next);
  }
  return d;
}

std::uint64_t d_hamming(unsigned k, std::uint64_t s) {
  require_d_range(k, s);
  const std::uint64_t n = (std::uint64_t{1} << k) + (std::uint64_t{1} << (k - 1)) - 4 - s;
  return std::uint64_t{1} << (hamming_weight(n) + 1);
}

std::uint64_t d_from_esets(unsigned k, std::uint64_t s) {
  require_d_range(k, s);
  const ESet a = e_set(kZ4, s + 1, -1);
  const ESet b = e_set(kZ4, s + 3, -1);
  std::vector<std::uint64_t> diff;
  std::set_symmetric_difference(a.indices.begin(), a.indices.end(), b.indices.begin(),
                                b.indices.end(), std::back_inserter(diff));
  return diff.size();
}

std::uint64_t d_a063787(unsigned k, std::uint64_t s) {
  require_d_range(k, s);
  return std::uint64_t{1} << (k - a063787(s - d_range_begin(k) + 4));
}

unsigned a063787(std::uint64_t n) {
  if (n == 0) throw UsageError("a(n) is defined for n >= 1");
  // Unrolling the recursion: h set bits with lowest 2^t give h + t.
  return static_cast<unsigned>(std::popcount(n) + std::countr_zero(n));
}

std::vector<unsigned> w_sequence(unsigned h) {
  if (h < 2) throw UsageError("w_h is defined for h >= 2");
  std::vector<unsigned> w = {1, 1, 2, 1};
  for (unsigned j = 2; j < h; ++j) {
    std::vector<unsigned> next(w);
    next.insert(next.end(), {j, j, j + 1, 1});
    std::transform(w.begin(), w.end(), std::back_inserter(next), [](unsigned x) { return x + 1; });
    w = std::move(next);
  }
  return w;
}

bool a_relation_check(unsigned k, std::span<const unsigned> exponents) {
  if (exponents.empty()) throw UsageError("a_relation_check needs at least one exponent");
  if (k < 5 || k > 60) throw UsageError("k out of range");
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i && exponents[i] >= exponents[i - 1]) {
      throw UsageError("exponents must be strictly decreasing");
    }
    if (exponents[i] >= k) throw UsageError("exponent too large for k");
    sum += std::uint64_t{1} << exponents[i];
  }
  const std::uint64_t s = d_range_begin(k) + sum - 4;
  if (sum < 4) throw UsageError("s falls below the d_k range");
  require_d_range(k, s);
  const auto h = static_cast<unsigned>(exponents.size());
  const unsigned t_h = exponents.back();
  if (h + t_h > k) return false;
  return d_closed(k, s) == (std::uint64_t{1} << (k - h - t_h));
}

}  // namespace modseq
