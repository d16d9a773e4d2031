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

// Periodic sequences over Z_m and the shift, difference and sum operators.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modseq/errors.hpp"
#include "modseq/modular.hpp"

namespace modseq {

// A periodic sequence over Z_m stored as exactly one minimal period.
// Two sequences are equal iff they share the modulus and canonical values.
class PeriodicSequence {
 public:
  // Reduces entries mod m and contracts to the minimal period.
  static PeriodicSequence from_values(std::uint64_t m, std::span<const std::int64_t> raw);
  static PeriodicSequence from_residues(std::uint64_t m, std::vector<Residue> raw);
  static PeriodicSequence constant(std::uint64_t m, Residue c);

  std::uint64_t modulus() const { return modulus_; }
  std::size_t period() const { return values_.size(); }
  std::span<const Residue> values() const { return values_; }
  Residue nth(std::uint64_t n) const { return values_[n % values_.size()]; }
  Residue operator[](std::uint64_t n) const { return nth(n); }
  bool is_zero() const { return values_.size() == 1 && values_[0] == 0; }

  // The first `length` terms; `length` need not be a multiple of the period.
  std::vector<Residue> expand(std::size_t length) const;

  // "[2,1] mod 3"
  std::string to_string() const;

  bool operator==(const PeriodicSequence&) const = default;

 private:
  PeriodicSequence(std::uint64_t m, std::vector<Residue> values)
      : modulus_(m), values_(std::move(values)) {}

  std::uint64_t modulus_;
  std::vector<Residue> values_;
};

struct SequenceHash {
  std::size_t operator()(const PeriodicSequence& f) const noexcept;
};

// Length of the minimal period of a list read as one full period.
std::size_t minimal_period(std::span<const Residue> values);

PeriodicSequence shift(const PeriodicSequence& f, std::uint64_t j);
PeriodicSequence delta(const PeriodicSequence& f);
PeriodicSequence delta_pow(const PeriodicSequence& f, std::uint64_t times);
// Sigma_c: Sigma_c f(0) = c, Sigma_c f(n) = f(n-1) + Sigma_c f(n-1).
PeriodicSequence sigma(const PeriodicSequence& f, Residue c = 0);
// s-fold Sigma_0.
PeriodicSequence primitive(const PeriodicSequence& f, std::uint64_t s,
                           const Limits& limits = {});
Residue trace(const PeriodicSequence& f);
inline std::size_t period(const PeriodicSequence& f) { return f.period(); }

PeriodicSequence add(const PeriodicSequence& f, const PeriodicSequence& g);
PeriodicSequence subtract(const PeriodicSequence& f, const PeriodicSequence& g);
PeriodicSequence negate(const PeriodicSequence& f);
PeriodicSequence scalar_mul(Residue c, const PeriodicSequence& f);

inline PeriodicSequence operator+(const PeriodicSequence& f, const PeriodicSequence& g) {
  return add(f, g);
}
inline PeriodicSequence operator-(const PeriodicSequence& f, const PeriodicSequence& g) {
  return subtract(f, g);
}
inline PeriodicSequence operator*(Residue c, const PeriodicSequence& f) {
  return scalar_mul(c, f);
}

// Entrywise reduction mod p^ell; p^ell must exactly divide the modulus.
PeriodicSequence p_part(const PeriodicSequence& f, std::uint64_t p, unsigned ell);
// Inverse of the p-part decomposition for pairwise coprime moduli.
PeriodicSequence crt_combine(std::span<const PeriodicSequence> parts);
// All p-parts of f, ordered by prime.
std::vector<PeriodicSequence> p_parts(const PeriodicSequence& f);

}  // namespace modseq
