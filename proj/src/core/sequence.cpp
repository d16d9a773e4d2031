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

#include "modseq/sequence.hpp"

#include <numeric>

namespace modseq {

namespace {

void require_modulus(std::uint64_t m) {
  if (m < 2) throw UsageError("modulus must be at least 2, got " + std::to_string(m));
  if (m > (std::uint64_t{1} << 62)) throw UsageError("modulus too large");
}

void require_same_modulus(const PeriodicSequence& f, const PeriodicSequence& g) {
  if (f.modulus() != g.modulus()) {
    throw UsageError("sequences live over different moduli (" + std::to_string(f.modulus()) +
                     " vs " + std::to_string(g.modulus()) + ")");
  }
}

std::size_t checked_lcm(std::size_t a, std::size_t b, const Limits& limits) {
  const std::size_t l = std::lcm(a, b);
  if (l > limits.max_length) {
    throw ResourceError("combined period " + std::to_string(l) +
                        " exceeds the materialization limit");
  }
  return l;
}

std::uint64_t entry_sum(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

}  // namespace

PeriodicSequence PeriodicSequence::from_values(std::uint64_t m,
                                               std::span<const std::int64_t> raw) {
  require_modulus(m);
  if (raw.empty()) throw UsageError("a periodic sequence needs at least one value");
  std::vector<Residue> values;
  values.reserve(raw.size());
  for (std::int64_t x : raw) values.push_back(reduce(x, m));
  return from_residues(m, std::move(values));
}

PeriodicSequence PeriodicSequence::from_residues(std::uint64_t m, std::vector<Residue> raw) {
  require_modulus(m);
  if (raw.empty()) throw UsageError("a periodic sequence needs at least one value");
  for (Residue& r : raw) r %= m;
  raw.resize(minimal_period(raw));
  return PeriodicSequence(m, std::move(raw));
}

PeriodicSequence PeriodicSequence::constant(std::uint64_t m, Residue c) {
  require_modulus(m);
  return PeriodicSequence(m, {c % m});
}

std::vector<Residue> PeriodicSequence::expand(std::size_t length) const {
  std::vector<Residue> out(length);
  const std::size_t tau = values_.size();
  for (std::size_t i = 0; i < length; ++i) out[i] = values_[i % tau];
  return out;
}

std::string PeriodicSequence::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values_[i]);
  }
  return s + "] mod " + std::to_string(modulus_);
}

std::size_t SequenceHash::operator()(const PeriodicSequence& f) const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(f.modulus());
  for (Residue r : f.values()) h = h * 1000003u ^ std::hash<Residue>{}(r);
  return h;
}

std::size_t minimal_period(std::span<const Residue> values) {
  const std::size_t n = values.size();
  // Any two periods' gcd is a period, so only divisors of n need scanning.
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = values[i] == values[i - d];
    if (ok) return d;
  }
  return n;
}

PeriodicSequence shift(const PeriodicSequence& f, std::uint64_t j) {
  const std::size_t tau = f.period();
  std::vector<Residue> out(tau);
  for (std::size_t i = 0; i < tau; ++i) out[i] = f.nth(i + j % tau);
  return PeriodicSequence::from_residues(f.modulus(), std::move(out));
}

PeriodicSequence delta(const PeriodicSequence& f) {
  const std::uint64_t m = f.modulus();
  const std::size_t tau = f.period();
  std::vector<Residue> out(tau);
  for (std::size_t i = 0; i < tau; ++i) out[i] = (f.nth(i + 1) + m - f.nth(i)) % m;
  return PeriodicSequence::from_residues(m, std::move(out));
}

PeriodicSequence delta_pow(const PeriodicSequence& f, std::uint64_t times) {
  PeriodicSequence g = f;
  for (std::uint64_t i = 0; i < times; ++i) g = delta(g);
  return g;
}

PeriodicSequence sigma(const PeriodicSequence& f, Residue c) {
  const std::uint64_t m = f.modulus();
  const std::size_t tau = f.period();
  // The period of Sigma f is the additive order of tr f times tau(f).
  const std::uint64_t h = additive_order(trace(f), m);
  if (h > Limits{}.max_length / tau) {
    throw ResourceError("primitive would need " + std::to_string(h) + "x" +
                        std::to_string(tau) + " entries");
  }
  const std::size_t length = static_cast<std::size_t>(h) * tau;
  std::vector<Residue> out(length);
  out[0] = c % m;
  for (std::size_t n = 1; n < length; ++n) {
    out[n] = entry_sum(out[n - 1], f.values()[(n - 1) % tau], m);
  }
  return PeriodicSequence::from_residues(m, std::move(out));
}

PeriodicSequence primitive(const PeriodicSequence& f, std::uint64_t s, const Limits& limits) {
  if (s > limits.max_order) {
    throw ResourceError("primitive order " + std::to_string(s) + " exceeds the cap " +
                        std::to_string(limits.max_order) +
                        "; use analytic period prediction instead");
  }
  PeriodicSequence g = f;
  for (std::uint64_t i = 0; i < s; ++i) {
    g = sigma(g);
    if (g.period() > limits.max_length) {
      throw ResourceError("primitive period exceeds the materialization limit; "
                          "use analytic period prediction instead");
    }
  }
  return g;
}

Residue trace(const PeriodicSequence& f) {
  const std::uint64_t m = f.modulus();
  Residue acc = 0;
  for (Residue r : f.values()) acc = entry_sum(acc, r, m);
  return acc;
}

PeriodicSequence add(const PeriodicSequence& f, const PeriodicSequence& g) {
  require_same_modulus(f, g);
  const std::uint64_t m = f.modulus();
  const std::size_t length = checked_lcm(f.period(), g.period(), Limits{});
  std::vector<Residue> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = entry_sum(f.nth(i), g.nth(i), m);
  return PeriodicSequence::from_residues(m, std::move(out));
}

PeriodicSequence negate(const PeriodicSequence& f) {
  const std::uint64_t m = f.modulus();
  std::vector<Residue> out(f.values().begin(), f.values().end());
  for (Residue& r : out) r = (m - r) % m;
  return PeriodicSequence::from_residues(m, std::move(out));
}

PeriodicSequence subtract(const PeriodicSequence& f, const PeriodicSequence& g) {
  return add(f, negate(g));
}

PeriodicSequence scalar_mul(Residue c, const PeriodicSequence& f) {
  const std::uint64_t m = f.modulus();
  std::vector<Residue> out(f.values().begin(), f.values().end());
  for (Residue& r : out) r = mul_mod(c % m, r, m);
  return PeriodicSequence::from_residues(m, std::move(out));
}

PeriodicSequence p_part(const PeriodicSequence& f, std::uint64_t p, unsigned ell) {
  if (!is_prime(p)) throw UsageError("expected a prime, got " + std::to_string(p));
  const std::uint64_t q = checked_pow(p, ell);
  const std::uint64_t m = f.modulus();
  if (ell == 0 || m % q != 0 || (m / q) % p == 0) {
    throw UsageError(std::to_string(p) + "^" + std::to_string(ell) +
                     " does not exactly divide the modulus " + std::to_string(m));
  }
  std::vector<Residue> out(f.values().begin(), f.values().end());
  for (Residue& r : out) r %= q;
  return PeriodicSequence::from_residues(q, std::move(out));
}

std::vector<PeriodicSequence> p_parts(const PeriodicSequence& f) {
  std::vector<PeriodicSequence> out;
  for (const PrimeFactor& pf : factorize(f.modulus())) out.push_back(p_part(f, pf.p, pf.exponent));
  return out;
}

PeriodicSequence crt_combine(std::span<const PeriodicSequence> parts) {
  if (parts.empty()) throw UsageError("crt_combine needs at least one part");
  std::uint64_t m = 1;
  std::size_t length = 1;
  for (const PeriodicSequence& part : parts) {
    if (std::gcd(m, part.modulus()) != 1) {
      throw UsageError("crt_combine needs pairwise coprime moduli");
    }
    if (part.modulus() > (std::uint64_t{1} << 62) / m) throw UsageError("combined modulus too large");
    m *= part.modulus();
    length = checked_lcm(length, part.period(), Limits{});
  }
  // CRT basis: e_i = 1 mod m_i, 0 mod m_j.
  std::vector<Residue> basis;
  for (const PeriodicSequence& part : parts) {
    const std::uint64_t q = part.modulus();
    const std::uint64_t rest = m / q;
    basis.push_back(mul_mod(rest, inverse_mod(rest % q, q), m));
  }
  std::vector<Residue> out(length, 0);
  for (std::size_t i = 0; i < length; ++i) {
    Residue acc = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      acc = entry_sum(acc, mul_mod(parts[j].nth(i), basis[j], m), m);
    }
    out[i] = acc;
  }
  return PeriodicSequence::from_residues(m, std::move(out));
}

}  // namespace modseq
