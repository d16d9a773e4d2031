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

// Idempotent/nilpotent splitting, generating vectors and analytic period
// prediction for primitives.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "modseq/sequence.hpp"

namespace modseq {

enum class SequenceKind { Idempotent, Nilpotent, Mixed };

const char* to_string(SequenceKind kind);

// Delta^M f = Delta^u f with M minimal, t = M - u, kbar = ceil(u / t).
struct OrbitParams {
  std::uint64_t u = 0;
  std::uint64_t m = 0;
  std::uint64_t t = 0;
  std::uint64_t kbar = 0;
};

struct SplitResult {
  PeriodicSequence idempotent_part;
  PeriodicSequence nilpotent_part;
  std::uint64_t idempotency_index;  // t
  std::uint64_t nilpotency_index;   // kbar * t; 0 when the nilpotent part is zero
  OrbitParams orbit;
};

// The unique decomposition f = f_I + f_N found from the Delta-orbit of f.
SplitResult split(const PeriodicSequence& f, std::uint64_t max_orbit = std::uint64_t{1} << 20);

// The zero sequence counts as nilpotent.
SequenceKind classify(const PeriodicSequence& f);

// Over Z_{p^ell}: nilpotent iff the period is a power of p.
bool is_nilpotent_by_period(const PeriodicSequence& f);

// For tau(f) = q p^t with p not dividing q: the sum of the shifts
// theta^{j p^t} f for j = 1..q.
PeriodicSequence periodised(const PeriodicSequence& f);
// The periodised sequence scaled by q^{-1}; equals the nilpotent part.
PeriodicSequence nilpotent_part_by_periodising(const PeriodicSequence& f);

struct GeneratingVector {
  PrimePower ring;
  SequenceKind kind;
  // e_i = Delta^i f(0) for i < eta.
  std::vector<Residue> entries;
  // Last entry of minimal p-adic valuation; empty for the zero vector.
  std::optional<std::size_t> leading_index;

  std::size_t index() const { return entries.size(); }
  // Throws UsageError for the zero vector.
  Residue leading_value() const;
};

// Requires a prime-power modulus and a pure (idempotent or nilpotent)
// sequence; mixed sequences are rejected so callers split explicitly.
GeneratingVector generating_vector(const PeriodicSequence& f);

std::vector<Residue> nilpotent_to_constants(const PeriodicSequence& f);
// sum_i Sigma^i [c_i].
PeriodicSequence reconstruct_from_constants(std::uint64_t modulus,
                                            std::span<const Residue> constants,
                                            const Limits& limits = {});

// Remainder of z modulo eta in [0, eta).
std::uint64_t overline(std::int64_t z, std::uint64_t eta);

// Sigma^s f = Delta^{ov(-s)} f - sum_{j<s} Sigma^j [e_{ov(j-s)}] for
// idempotent f and s >= 1.
PeriodicSequence idem_primitive(const PeriodicSequence& f, std::uint64_t s,
                                const Limits& limits = {});

// tau(Sigma^s [c]) = p^{ell - nu(c) + k_s} for c != 0; 1 when s = 0.
std::uint64_t predict_period_constant(Residue c, std::uint64_t s, const PrimePower& ring);

struct PeriodPrediction {
  std::uint64_t predicted_period = 0;
  // Smallest s for which the prediction is proven.
  std::uint64_t valid_from = 0;
  std::size_t leading_index = 0;
  Residue leading_value = 0;
  SequenceKind kind = SequenceKind::Nilpotent;
  // Set when s < valid_from.
  bool advisory = false;
};

// Minimal mu with eta - gamma - 1 < p^mu (p - 1).
unsigned leading_threshold_exponent(std::uint64_t p, std::uint64_t eta, std::uint64_t gamma);

PeriodPrediction predict_period_nilpotent(const PeriodicSequence& f, std::uint64_t s);
PeriodPrediction predict_period_idempotent(const PeriodicSequence& f, std::uint64_t s);
// Dispatches on the kind; mixed sequences are rejected.
PeriodPrediction predict_period(const PeriodicSequence& f, std::uint64_t s);

// Prediction for an arbitrary modulus through its p-parts; the period of the
// whole is the lcm of the parts' periods.
struct CompositePrediction {
  struct Part {
    PrimePower ring;
    SequenceKind kind;
    std::optional<PeriodPrediction> prediction;  // empty for mixed parts
  };
  std::vector<Part> parts;
  std::optional<std::uint64_t> period;  // empty when some part is mixed
  bool advisory = false;
};
CompositePrediction predict_period_composite(const PeriodicSequence& f, std::uint64_t s);

struct PartialSumValuation {
  // Sum of Sigma^s[c](n) for n < p^{ell - t + k}, computed in Z_{p^ell}.
  Residue materialized_sum = 0;
  // nu_p of the integer c * C(p^{ell - t + k}, s + 1).
  unsigned exact_valuation = 0;
  bool all_digits_top = false;  // every base-p digit of s equals p - 1
  // exact_valuation == ell - 1 when all_digits_top, >= ell otherwise.
  bool consistent = false;
};
PartialSumValuation partial_sum_valuation(Residue c, std::uint64_t s, const PrimePower& ring,
                                          const Limits& limits = {});

// sum_{i <= t} Sigma^i f, materialized.
PeriodicSequence cumulative_primitive(const PeriodicSequence& f, std::uint64_t t,
                                      const Limits& limits = {});
// tau(sum_{i <= t} Sigma^i f) = tau(Sigma^{t + gamma} [e_gamma]) for nilpotent f.
PeriodPrediction predict_cumulative_period(const PeriodicSequence& f, std::uint64_t t);

}  // namespace modseq
