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

#include "modseq/modular.hpp"

#include <gmp.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <utility>

namespace modseq {

namespace {

__extension__ typedef unsigned __int128 u128;

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw UsageError("expected a prime, got " + std::to_string(p));
  }
}

// RAII holder for a GMP integer.
class BigInt {
 public:
  BigInt() { mpz_init(z_); }
  ~BigInt() { mpz_clear(z_); }
  BigInt(const BigInt&) = delete;
  BigInt& operator=(const BigInt&) = delete;
  mpz_ptr get() { return z_; }

 private:
  mpz_t z_;
};

// C(n, s) mod p^ell via unit accumulation; assumes borrows < ell.
Residue binom_unit_path(std::uint64_t n, std::uint64_t s, const PrimePower& pp,
                        unsigned borrows) {
  const std::uint64_t q = pp.modulus();
  s = std::min(s, n - s);
  Residue num = 1 % q;
  Residue den = 1 % q;
  for (std::uint64_t i = 1; i <= s; ++i) {
    std::uint64_t top = n - s + i;
    std::uint64_t bottom = i;
    while (top % pp.p == 0) top /= pp.p;
    while (bottom % pp.p == 0) bottom /= pp.p;
    num = mul_mod(num, top % q, q);
    den = mul_mod(den, bottom % q, q);
  }
  Residue unit = mul_mod(num, inverse_mod(den, q), q);
  return mul_mod(unit, checked_pow(pp.p, borrows) % q, q);
}

Residue binom_prime_power(std::uint64_t n, std::uint64_t s, const PrimePower& pp) {
  const unsigned borrows = kummer_valuation(n, s, pp.p).value();
  if (borrows >= pp.ell) return 0;
  return binom_unit_path(n, s, pp, borrows);
}

}  // namespace

unsigned Valuation::value() const {
  if (!value_) throw UsageError("valuation is infinite");
  return *value_;
}

std::strong_ordering Valuation::operator<=>(const Valuation& other) const {
  if (is_infinite() || other.is_infinite()) {
    return is_infinite() <=> other.is_infinite();
  }
  return *value_ <=> *other.value_;
}

std::string Valuation::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

std::uint64_t PrimePower::modulus() const { return checked_pow(p, ell); }

ModulusContext ModulusContext::make(std::uint64_t m) {
  if (m < 2) throw UsageError("modulus must be at least 2, got " + std::to_string(m));
  if (m > (std::uint64_t{1} << 62)) throw UsageError("modulus too large");
  ModulusContext ctx;
  ctx.m_ = m;
  ctx.factors_ = factorize(m);
  if (ctx.factors_.size() == 1) {
    ctx.prime_power_ = PrimePower{ctx.factors_[0].p, ctx.factors_[0].exponent};
  }
  return ctx;
}

ModulusContext ModulusContext::prime_power(std::uint64_t p, unsigned ell) {
  require_prime(p);
  if (ell < 1) throw UsageError("prime-power exponent must be at least 1");
  return make(checked_pow(p, ell));
}

PrimePower ModulusContext::require_prime_power() const {
  if (!prime_power_) {
    throw UsageError("modulus " + std::to_string(m_) + " is not a prime power");
  }
  return *prime_power_;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimeFactor> factorize(std::uint64_t n) {
  std::vector<PrimeFactor> out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw ResourceError("integer power " + std::to_string(base) + "^" +
                          std::to_string(exp) + " overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

Residue mul_mod(Residue a, Residue b, std::uint64_t m) {
  return static_cast<Residue>((static_cast<u128>(a) * b) % m);
}

Residue pow_mod(Residue a, std::uint64_t e, std::uint64_t m) {
  Residue r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

Residue inverse_mod(Residue a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) {
    throw UsageError(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  }
  return reduce(t, m);
}

Residue reduce(std::int64_t x, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  std::int64_t r = x % sm;
  if (r < 0) r += sm;
  return static_cast<Residue>(r);
}

Valuation valuation(std::int64_t x, std::uint64_t p) {
  require_prime(p);
  if (x == 0) return Valuation::infinite();
  // Magnitude as unsigned to cover INT64_MIN.
  std::uint64_t u = x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x);
  unsigned v = 0;
  while (u % p == 0) {
    u /= p;
    ++v;
  }
  return Valuation::finite(v);
}

Valuation valuation(Residue r, const PrimePower& ctx) {
  const std::uint64_t q = ctx.modulus();
  r %= q;
  if (r == 0) return Valuation::infinite();
  unsigned v = 0;
  while (r % ctx.p == 0) {
    r /= ctx.p;
    ++v;
  }
  return Valuation::finite(v);
}

DigitVector::DigitVector(std::uint64_t base, std::vector<unsigned> digits)
    : base_(base), digits_(std::move(digits)) {
  if (base_ < 2) throw UsageError("digit base must be at least 2");
  for (unsigned d : digits_) {
    if (d >= base_) throw UsageError("digit out of range for base " + std::to_string(base_));
  }
  if (!digits_.empty() && digits_.back() == 0) {
    throw UsageError("digit vector is not canonical: leading zero");
  }
}

std::size_t DigitVector::leading_index() const {
  if (digits_.empty()) throw UsageError("zero has no leading digit");
  return digits_.size() - 1;
}

std::size_t DigitVector::zero_count() const {
  return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), 0u));
}

std::uint64_t DigitVector::value() const {
  std::uint64_t v = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * base_ + *it;
  return v;
}

std::string DigitVector::to_string() const {
  std::string body;
  if (digits_.empty()) body = "0";
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    if (base_ <= 10) {
      body += static_cast<char>('0' + *it);
    } else {
      if (it != digits_.rbegin()) body += ' ';
      body += std::to_string(*it);
    }
  }
  return "[" + body + "]_" + std::to_string(base_);
}

DigitVector digits(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  std::vector<unsigned> d;
  while (n) {
    d.push_back(static_cast<unsigned>(n % p));
    n /= p;
  }
  return DigitVector(p, std::move(d));
}

unsigned zero_count(std::uint64_t s) {
  if (s == 0) throw UsageError("zero_count requires s >= 1");
  return static_cast<unsigned>(std::bit_width(s)) - hamming_weight(s);
}

unsigned hamming_weight(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

Valuation kummer_valuation(std::uint64_t n, std::uint64_t s, std::uint64_t p) {
  require_prime(p);
  if (s > n) throw UsageError("kummer_valuation requires s <= n");
  unsigned borrows = 0;
  unsigned borrow = 0;
  while (n || s) {
    const std::uint64_t a = n % p;
    const std::uint64_t b = s % p + borrow;
    borrow = a < b ? 1 : 0;
    borrows += borrow;
    n /= p;
    s /= p;
  }
  return Valuation::finite(borrows);
}

Residue binom_mod_exact(std::uint64_t n, std::uint64_t s, const ModulusContext& ctx) {
  if (s > n) return 0;
  BigInt c, m;
  mpz_bin_uiui(c.get(), n, s);
  mpz_set_ui(m.get(), ctx.modulus());
  mpz_mod(c.get(), c.get(), m.get());
  return mpz_get_ui(c.get());
}

Residue binom_mod(std::uint64_t n, std::uint64_t s, const ModulusContext& ctx) {
  if (s > n) return 0;
  if (const auto& pp = ctx.as_prime_power()) return binom_prime_power(n, s, *pp);
  // CRT over the prime-power components.
  const std::uint64_t m = ctx.modulus();
  Residue acc = 0;
  for (const PrimeFactor& f : ctx.factorization()) {
    const PrimePower pp{f.p, f.exponent};
    const std::uint64_t q = pp.modulus();
    const std::uint64_t rest = m / q;
    const Residue part = binom_prime_power(n, s, pp);
    const Residue coeff = mul_mod(rest, inverse_mod(rest % q, q), m);
    acc = (acc + mul_mod(part, coeff, m)) % m;
  }
  return acc;
}

std::uint64_t additive_order(Residue c, std::uint64_t m) {
  if (m == 0) throw UsageError("modulus must be positive");
  return m / std::gcd(c % m, m);
}

}  // namespace modseq
