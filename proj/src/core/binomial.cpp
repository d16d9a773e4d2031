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

#include "modseq/binomial.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace modseq {

namespace {

unsigned digit_at(std::uint64_t n, std::uint64_t p, unsigned j) {
  for (unsigned i = 0; i < j && n; ++i) n /= p;
  return static_cast<unsigned>(n % p);
}

unsigned leading(std::uint64_t s, std::uint64_t p) {
  return static_cast<unsigned>(digits(s, p).leading_index());
}

std::size_t checked_length(std::uint64_t n, const Limits& limits, const char* what) {
  if (n > limits.max_length) {
    throw ResourceError(std::string(what) + " needs " + std::to_string(n) +
                        " entries, above the materialization limit " +
                        std::to_string(limits.max_length));
  }
  return static_cast<std::size_t>(n);
}

// Strips the p-part of x into v, returning the cofactor.
std::uint64_t strip(std::uint64_t x, std::uint64_t p, unsigned& v) {
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return x;
}

PeriodicSequence block_operator(const PeriodicSequence& f, std::uint64_t q, unsigned t,
                                const Limits& limits, bool alternate) {
  if (!is_prime(q)) throw UsageError("block operators need a prime q, got " + std::to_string(q));
  const std::uint64_t block = checked_pow(q, t);
  const std::size_t length =
      checked_length(std::lcm<std::uint64_t>(f.period(), block), limits, "block operator input");
  checked_length(static_cast<std::uint64_t>(length) * q, limits, "block operator output");
  const std::vector<Residue> src = f.expand(length);
  std::vector<Residue> out;
  out.reserve(length * q);
  for (std::size_t start = 0; start < length; start += block) {
    for (std::uint64_t r = 0; r < q; ++r) {
      if (alternate && r + 1 < q) {
        out.insert(out.end(), block, 0);
      } else {
        out.insert(out.end(), src.begin() + start, src.begin() + start + block);
      }
    }
  }
  return PeriodicSequence::from_residues(f.modulus(), std::move(out));
}

void require_window(const PrimePower& ring, unsigned k, int m) {
  if (k <= ring.ell) {
    throw UsageError("reductions need k > ell (k = " + std::to_string(k) + ")");
  }
  if (m < -1 || m > static_cast<int>(k - ring.ell) - 1) {
    throw UsageError("window position m = " + std::to_string(m) + " outside [-1, " +
                     std::to_string(static_cast<int>(k - ring.ell) - 1) + "]");
  }
}

}  // namespace

std::uint64_t delete_digit(std::uint64_t n, std::uint64_t p, unsigned j) {
  const std::uint64_t low = checked_pow(p, j);
  return (n / (low * p)) * low + n % low;
}

PeriodicSequence bin_seq(const PrimePower& ring, std::uint64_t s, const Limits& limits) {
  const std::uint64_t q = ring.modulus();
  if (s == 0) return PeriodicSequence::constant(q, 1);
  const std::uint64_t p = ring.p;
  const std::size_t length =
      checked_length(checked_pow(p, ring.ell + leading(s, p)), limits, "bin_s");
  std::vector<Residue> out(length, 0);
  // Walk down the column: C(n+1, s) = C(n, s) (n + 1) / (n + 1 - s), keeping
  // the p-adic valuation apart from the unit part.
  unsigned v = 0;
  Residue unit = 1;
  out[s] = 1;
  for (std::uint64_t n = s; n + 1 < length; ++n) {
    unsigned up = 0;
    unsigned down = 0;
    const std::uint64_t num = strip(n + 1, p, up);
    const std::uint64_t den = strip(n + 1 - s, p, down);
    v = v + up - down;
    unit = mul_mod(mul_mod(unit, num % q, q), inverse_mod(den % q, q), q);
    out[n + 1] = v >= ring.ell ? 0 : mul_mod(unit, checked_pow(p, v), q);
  }
  return PeriodicSequence::from_residues(q, std::move(out));
}

PeriodicSequence double_seq(const PeriodicSequence& f, std::uint64_t q, unsigned t,
                            const Limits& limits) {
  return block_operator(f, q, t, limits, false);
}

PeriodicSequence alt_seq(const PeriodicSequence& f, std::uint64_t q, unsigned t,
                         const Limits& limits) {
  return block_operator(f, q, t, limits, true);
}

bool nu_equiv(const PeriodicSequence& f, const PeriodicSequence& g) {
  if (f.modulus() != g.modulus()) {
    throw UsageError("nu_equiv needs sequences over the same ring");
  }
  const PrimePower ring = ModulusContext::make(f.modulus()).require_prime_power();
  const std::size_t length = std::lcm(f.period(), g.period());
  for (std::size_t n = 0; n < length; ++n) {
    if (valuation(f.nth(n), ring) != valuation(g.nth(n), ring)) return false;
  }
  return true;
}

BinomialStats stats(const PeriodicSequence& f, const PrimePower& ring) {
  if (f.modulus() != ring.modulus()) {
    throw UsageError("stats: sequence modulus " + std::to_string(f.modulus()) +
                     " differs from the ring " + std::to_string(ring.modulus()));
  }
  BinomialStats out;
  out.p = ring.p;
  out.ell = ring.ell;
  out.period = f.period();
  out.pi.assign(ring.ell, 0);
  for (Residue r : f.values()) {
    const Valuation v = valuation(r, ring);
    if (v.is_infinite()) {
      ++out.zeros;
    } else {
      ++out.pi[v.value()];
    }
  }
  return out;
}

BinomialStats binomial_stats(const PrimePower& ring, std::uint64_t s, const Limits& limits) {
  BinomialStats out = stats(bin_seq(ring, s, limits), ring);
  out.s = s;
  return out;
}

const char* to_string(ReductionLemma lemma) {
  switch (lemma) {
    case ReductionLemma::AllTop: return "AllP-1";
    case ReductionLemma::AllZero: return "AllZero";
    case ReductionLemma::TopZeros: return "P-1Zeros";
  }
  return "unknown";
}

const char* to_string(ReductionOperator op) {
  return op == ReductionOperator::Alt ? "Alt" : "Double";
}

bool has_top_zeros_window(const PrimePower& ring, std::uint64_t s, int m) {
  if (s == 0 || ring.ell < 2) return false;
  const unsigned k = leading(s, ring.p);
  if (k <= ring.ell || m < -1 || m > static_cast<int>(k - ring.ell) - 1) return false;
  const auto top = static_cast<unsigned>(static_cast<int>(k) - m - 1);
  if (digit_at(s, ring.p, top) != ring.p - 1) return false;
  for (unsigned j = top - ring.ell + 1; j < top; ++j) {
    if (digit_at(s, ring.p, j) != 0) return false;
  }
  return true;
}

namespace {

// Visits applicable steps in scan order until visit returns false.
template <class Visit>
void scan_reductions(const PrimePower& ring, std::uint64_t s, Visit&& visit) {
  if (s == 0) return;
  const std::uint64_t p = ring.p;
  const unsigned ell = ring.ell;
  const DigitVector ds = digits(s, p);
  const auto k = static_cast<unsigned>(ds.leading_index());
  if (k <= ell) return;

  auto make = [&](ReductionLemma lemma, int m, unsigned deleted, ReductionOperator op) {
    ReductionStep step;
    step.ring = ring;
    step.lemma = lemma;
    step.m = m;
    step.k = k;
    step.s = s;
    step.deleted_digit = deleted;
    step.s_prime = delete_digit(s, p, deleted);
    step.op = op;
    step.scale_exponent = deleted;
    return step;
  };

  for (int m = -1; m <= static_cast<int>(k - ell) - 1; ++m) {
    const auto top = static_cast<unsigned>(static_cast<int>(k) - m - 1);
    const unsigned bottom = top + 1 - ell;
    bool all_top = true;
    bool all_zero = true;
    for (unsigned j = bottom; j <= top; ++j) {
      all_top = all_top && ds[j] == p - 1;
      all_zero = all_zero && ds[j] == 0;
    }
    if (all_top) {
      ReductionStep step = make(ReductionLemma::AllTop, m, bottom, ReductionOperator::Alt);
      // Deleting the leading digit must leave exactly k digits.
      if (step.s_prime > 0 && leading(step.s_prime, p) + 1 == k && !visit(std::move(step))) return;
    }
    if (has_top_zeros_window(ring, s, m)) {
      ReductionStep step = make(ReductionLemma::TopZeros, m, top - 1, ReductionOperator::Double);
      step.e_size = e_size(ring, s, m);
      if (!visit(std::move(step))) return;
    }
    if (all_zero && m >= 0) {
      if (!visit(make(ReductionLemma::AllZero, m, top, ReductionOperator::Double))) return;
    }
  }
}

}  // namespace

std::vector<ReductionStep> find_reductions(const PrimePower& ring, std::uint64_t s) {
  std::vector<ReductionStep> out;
  scan_reductions(ring, s, [&](ReductionStep&& st) {
    out.push_back(std::move(st));
    return true;
  });
  return out;
}

BinomialStats apply_reduction(const ReductionStep& step, const BinomialStats& reduced) {
  const std::uint64_t p = step.ring.p;
  const unsigned ell = step.ring.ell;
  if (reduced.pi.size() != ell || reduced.p != p) {
    throw UsageError("apply_reduction: statistics belong to a different ring");
  }
  BinomialStats out = reduced;
  out.s = step.s;
  out.period = reduced.period * p;
  switch (step.lemma) {
    case ReductionLemma::AllTop:
      out.zeros = reduced.zeros + (p - 1) * checked_pow(p, step.k + ell - 1);
      break;
    case ReductionLemma::AllZero:
      for (auto& x : out.pi) x *= p;
      out.zeros = reduced.zeros * p;
      break;
    case ReductionLemma::TopZeros: {
      const std::uint64_t e = step.e_size.value_or(0);
      for (auto& x : out.pi) x *= p;
      out.pi[ell - 1] += e;
      out.zeros = reduced.zeros * p - e;
      break;
    }
  }
  return out;
}

PeriodicSequence reduction_rhs(const ReductionStep& step, const Limits& limits) {
  const PeriodicSequence base = bin_seq(step.ring, step.s_prime, limits);
  if (step.op == ReductionOperator::Alt) {
    return alt_seq(base, step.ring.p, step.scale_exponent, limits);
  }
  PeriodicSequence out = double_seq(base, step.ring.p, step.scale_exponent, limits);
  if (step.lemma == ReductionLemma::TopZeros) {
    const Residue scale = checked_pow(step.ring.p, step.ring.ell - 1);
    out = out + scalar_mul(scale, chi_e(step.ring, step.s, step.m));
  }
  return out;
}

ReductionChain reduce_chain(const PrimePower& ring, std::uint64_t s, const Limits& limits) {
  ReductionChain chain;
  std::uint64_t cur = s;
  for (;;) {
    std::optional<ReductionStep> first;
    scan_reductions(ring, cur, [&](ReductionStep&& st) {
      first = std::move(st);
      return false;
    });
    if (!first) break;
    cur = first->s_prime;
    chain.steps.push_back(std::move(*first));
  }
  chain.s_star = cur;
  chain.base = binomial_stats(ring, cur, limits);
  chain.result = chain.base;
  for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
    chain.result = apply_reduction(*it, chain.result);
  }
  return chain;
}

ESet e_set(const PrimePower& ring, std::uint64_t s, int m) {
  if (!has_top_zeros_window(ring, s, m)) {
    throw UsageError("s = " + std::to_string(s) + " has no (p-1)0..0 window at m = " +
                     std::to_string(m));
  }
  const std::uint64_t p = ring.p;
  const unsigned ell = ring.ell;
  const unsigned k = leading(s, p);
  require_window(ring, k, m);
  const auto top = static_cast<unsigned>(static_cast<int>(k) - m - 1);  // k-m-1
  const unsigned below = top - ell;                                   // k-m-ell-1
  const unsigned width = k + ell;
  const std::uint64_t bound = checked_pow(p, width);
  checked_length(bound, Limits{}, "E_s enumeration");
  const DigitVector ds = digits(s, p);

  ESet out{s, m, {}};
  std::vector<unsigned> a(width);
  for (std::uint64_t n = 0; n < bound; ++n) {
    std::uint64_t x = n;
    for (unsigned j = 0; j < width; ++j, x /= p) a[j] = static_cast<unsigned>(x % p);
    bool ok = a[top] == p - 1 && a[top - 1] != 0 && a[below] < ds[below];
    for (unsigned i = 3; ok && i <= ell; ++i) ok = a[top + 1 - i] == 0;
    for (unsigned j = 0; ok && j < below; ++j) ok = a[j] >= ds[j];
    for (unsigned j = top + 1; ok && j <= k; ++j) ok = a[j] >= ds[j];
    if (ok) out.indices.push_back(n);
  }
  return out;
}

std::uint64_t e_size(const PrimePower& ring, std::uint64_t s, int m) {
  if (!has_top_zeros_window(ring, s, m)) {
    throw UsageError("s = " + std::to_string(s) + " has no (p-1)0..0 window at m = " +
                     std::to_string(m));
  }
  const std::uint64_t p = ring.p;
  const unsigned ell = ring.ell;
  const unsigned k = leading(s, p);
  const auto top = static_cast<unsigned>(static_cast<int>(k) - m - 1);
  const unsigned below = top - ell;
  const DigitVector ds = digits(s, p);
  std::uint64_t size = checked_pow(p, ell - 1) * (p - 1) * ds[below];
  for (unsigned j = top + 1; j <= k; ++j) size *= p - ds[j];
  for (unsigned i = 0; i < below; ++i) size *= p - ds[i];
  return size;
}

PeriodicSequence chi_e(const PrimePower& ring, std::uint64_t s, int m) {
  const ESet e = e_set(ring, s, m);
  const unsigned k = leading(s, ring.p);
  std::vector<Residue> out(checked_pow(ring.p, k + ring.ell), 0);
  for (std::uint64_t n : e.indices) out[n] = 1;
  return PeriodicSequence::from_residues(ring.modulus(), std::move(out));
}

}  // namespace modseq
