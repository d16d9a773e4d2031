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

// Exact modular and p-adic primitives: residues, valuations, base-p digits,
// Kummer borrow counting and binomial residues.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modseq/errors.hpp"

namespace modseq {

using Residue = std::uint64_t;

// p-adic valuation; the zero integer (or zero coset) has infinite valuation.
class Valuation {
 public:
  static Valuation finite(unsigned v) { return Valuation(v); }
  static Valuation infinite() { return Valuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  // Throws UsageError when infinite.
  unsigned value() const;

  bool operator==(const Valuation&) const = default;
  // Infinite compares greater than every finite valuation.
  std::strong_ordering operator<=>(const Valuation& other) const;

  std::string to_string() const;

 private:
  Valuation() = default;
  explicit Valuation(unsigned v) : value_(v) {}
  std::optional<unsigned> value_;
};

struct PrimePower {
  std::uint64_t p = 2;
  unsigned ell = 1;

  std::uint64_t modulus() const;
  bool operator==(const PrimePower&) const = default;
};

struct PrimeFactor {
  std::uint64_t p;
  unsigned exponent;
  bool operator==(const PrimeFactor&) const = default;
};

// The ambient ring Z_m, with its factorization and, when m = p^ell, the
// prime-power view.
class ModulusContext {
 public:
  static ModulusContext make(std::uint64_t m);
  static ModulusContext prime_power(std::uint64_t p, unsigned ell);

  std::uint64_t modulus() const { return m_; }
  const std::optional<PrimePower>& as_prime_power() const { return prime_power_; }
  std::span<const PrimeFactor> factorization() const { return factors_; }
  // Throws UsageError unless m is a prime power.
  PrimePower require_prime_power() const;

 private:
  ModulusContext() = default;
  std::uint64_t m_ = 0;
  std::optional<PrimePower> prime_power_;
  std::vector<PrimeFactor> factors_;
};

bool is_prime(std::uint64_t n);
std::vector<PrimeFactor> factorize(std::uint64_t n);

// Exponentiation with overflow detection (throws ResourceError).
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

Residue mul_mod(Residue a, Residue b, std::uint64_t m);
Residue pow_mod(Residue a, std::uint64_t e, std::uint64_t m);
// Inverse of a unit; throws UsageError when gcd(a, m) != 1.
Residue inverse_mod(Residue a, std::uint64_t m);
// Reduces any signed integer into [0, m).
Residue reduce(std::int64_t x, std::uint64_t m);

Valuation valuation(std::int64_t x, std::uint64_t p);
// Valuation of a residue class of Z_{p^ell}: infinite for the zero coset.
Valuation valuation(Residue r, const PrimePower& ctx);

// Base-p expansion, least significant digit first, without leading zeros.
class DigitVector {
 public:
  DigitVector(std::uint64_t base, std::vector<unsigned> digits);

  std::uint64_t base() const { return base_; }
  std::span<const unsigned> digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  // Digit at position i, zero beyond the leading digit.
  unsigned operator[](std::size_t i) const {
    return i < digits_.size() ? digits_[i] : 0u;
  }
  // Index k of the most significant digit; throws UsageError for zero.
  std::size_t leading_index() const;
  // Number of zero digits among positions 0..k.
  std::size_t zero_count() const;
  std::uint64_t value() const;
  // Most significant digit first, e.g. "[1002120]_3".
  std::string to_string() const;

  bool operator==(const DigitVector&) const = default;

 private:
  std::uint64_t base_;
  std::vector<unsigned> digits_;
};

DigitVector digits(std::uint64_t n, std::uint64_t p);

// Zero digits in the binary expansion of s >= 1.
unsigned zero_count(std::uint64_t s);
unsigned hamming_weight(std::uint64_t n);
inline std::uint64_t bitwise_or(std::uint64_t s, std::uint64_t t) { return s | t; }

// Number of borrows in the base-p subtraction n - s.
Valuation kummer_valuation(std::uint64_t n, std::uint64_t s, std::uint64_t p);

// C(n, s) mod m through exact big-integer arithmetic.
Residue binom_mod_exact(std::uint64_t n, std::uint64_t s, const ModulusContext& ctx);
// C(n, s) mod m: zero when the Kummer borrow count reaches ell, otherwise the
// unit part is accumulated factor by factor; general moduli go through CRT.
Residue binom_mod(std::uint64_t n, std::uint64_t s, const ModulusContext& ctx);

// Smallest h >= 1 with h*c = 0 mod m.
std::uint64_t additive_order(Residue c, std::uint64_t m);

}  // namespace modseq
