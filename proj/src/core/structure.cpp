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

#include "modseq/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace modseq {

namespace {

// Horner evaluation of sum_j Sigma^j [c_j].
PeriodicSequence horner_constants(std::uint64_t m, std::span<const Residue> c,
                                  const Limits& limits) {
  if (c.empty()) return PeriodicSequence::constant(m, 0);
  if (c.size() - 1 > limits.max_order) {
    throw ResourceError("sum of constant primitives exceeds the order cap");
  }
  PeriodicSequence acc = PeriodicSequence::constant(m, c.back());
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    acc = PeriodicSequence::constant(m, c[j]) + sigma(acc);
    if (acc.period() > limits.max_length) {
      throw ResourceError("sum of constant primitives exceeds the materialization limit");
    }
  }
  return acc;
}

std::int64_t signed_pow(std::uint64_t p, unsigned e) {
  return static_cast<std::int64_t>(checked_pow(p, e));
}

}  // namespace

const char* to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Idempotent: return "idempotent";
    case SequenceKind::Nilpotent: return "nilpotent";
    case SequenceKind::Mixed: return "mixed";
  }
  return "unknown";
}

SplitResult split(const PeriodicSequence& f, std::uint64_t max_orbit) {
  std::unordered_map<PeriodicSequence, std::uint64_t, SequenceHash> seen;
  std::vector<PeriodicSequence> orbit;
  PeriodicSequence g = f;
  OrbitParams params;
  for (std::uint64_t i = 0;; ++i) {
    if (auto it = seen.find(g); it != seen.end()) {
      params.u = it->second;
      params.m = i;
      break;
    }
    if (i >= max_orbit) throw ResourceError("Delta-orbit longer than the configured bound");
    seen.emplace(g, i);
    orbit.push_back(g);
    g = delta(g);
  }
  params.t = params.m - params.u;
  params.kbar = (params.u + params.t - 1) / params.t;
  const PeriodicSequence& f_i = orbit[params.kbar * params.t];
  return SplitResult{f_i, f - f_i, params.t, params.kbar * params.t, params};
}

SequenceKind classify(const PeriodicSequence& f) {
  const SplitResult r = split(f);
  if (r.idempotent_part.is_zero()) return SequenceKind::Nilpotent;
  if (r.nilpotent_part.is_zero()) return SequenceKind::Idempotent;
  return SequenceKind::Mixed;
}

bool is_nilpotent_by_period(const PeriodicSequence& f) {
  const PrimePower ring = ModulusContext::make(f.modulus()).require_prime_power();
  std::size_t tau = f.period();
  while (tau % ring.p == 0) tau /= ring.p;
  return tau == 1;
}

PeriodicSequence periodised(const PeriodicSequence& f) {
  const PrimePower ring = ModulusContext::make(f.modulus()).require_prime_power();
  const std::size_t tau = f.period();
  std::size_t block = 1;
  while ((tau / block) % ring.p == 0) block *= ring.p;
  const std::size_t q = tau / block;
  const std::uint64_t m = f.modulus();
  std::vector<Residue> out(tau, 0);
  for (std::size_t i = 0; i < tau; ++i) {
    Residue acc = 0;
    for (std::size_t j = 1; j <= q; ++j) acc = (acc + f.nth(i + j * block)) % m;
    out[i] = acc;
  }
  return PeriodicSequence::from_residues(m, std::move(out));
}

PeriodicSequence nilpotent_part_by_periodising(const PeriodicSequence& f) {
  const PrimePower ring = ModulusContext::make(f.modulus()).require_prime_power();
  std::size_t q = f.period();
  while (q % ring.p == 0) q /= ring.p;
  return scalar_mul(inverse_mod(q % f.modulus(), f.modulus()), periodised(f));
}

Residue GeneratingVector::leading_value() const {
  if (!leading_index) throw UsageError("the zero generating vector has no leading component");
  return entries[*leading_index];
}

GeneratingVector generating_vector(const PeriodicSequence& f) {
  const PrimePower ring = ModulusContext::make(f.modulus()).require_prime_power();
  const SplitResult r = split(f);
  GeneratingVector gv{ring, SequenceKind::Nilpotent, {}, std::nullopt};
  std::uint64_t eta = 0;
  if (f.is_zero()) {
    eta = 1;
  } else if (r.idempotent_part.is_zero()) {
    eta = r.nilpotency_index;
  } else if (r.nilpotent_part.is_zero()) {
    gv.kind = SequenceKind::Idempotent;
    eta = r.idempotency_index;
  } else {
    throw UsageError("generating vectors are defined for idempotent or nilpotent sequences; "
                     "split the sequence first");
  }
  PeriodicSequence g = f;
  for (std::uint64_t i = 0; i < eta; ++i) {
    gv.entries.push_back(g.nth(0));
    g = delta(g);
  }
  Valuation best = Valuation::infinite();
  for (std::size_t i = 0; i < gv.entries.size(); ++i) {
    const Valuation v = valuation(gv.entries[i], ring);
    if (v.is_finite() && v <= best) {
      best = v;
      gv.leading_index = i;
    }
  }
  return gv;
}

std::vector<Residue> nilpotent_to_constants(const PeriodicSequence& f) {
  const GeneratingVector gv = generating_vector(f);
  if (gv.kind != SequenceKind::Nilpotent) {
    throw UsageError("nilpotent_to_constants requires a nilpotent sequence");
  }
  return gv.entries;
}

PeriodicSequence reconstruct_from_constants(std::uint64_t modulus,
                                            std::span<const Residue> constants,
                                            const Limits& limits) {
  return horner_constants(modulus, constants, limits);
}

std::uint64_t overline(std::int64_t z, std::uint64_t eta) {
  if (eta == 0) throw UsageError("overline needs a positive modulus");
  return reduce(z, eta);
}

PeriodicSequence idem_primitive(const PeriodicSequence& f, std::uint64_t s,
                                const Limits& limits) {
  if (s < 1) throw UsageError("idem_primitive requires s >= 1");
  const GeneratingVector gv = generating_vector(f);
  if (gv.kind != SequenceKind::Idempotent) {
    throw UsageError("idem_primitive requires an idempotent sequence");
  }
  if (s > limits.max_order) throw ResourceError("primitive order exceeds the cap");
  const std::uint64_t eta = gv.index();
  const auto ss = static_cast<std::int64_t>(s);
  std::vector<Residue> constants(s);
  for (std::uint64_t j = 0; j < s; ++j) {
    constants[j] = gv.entries[overline(static_cast<std::int64_t>(j) - ss, eta)];
  }
  return delta_pow(f, overline(-ss, eta)) - horner_constants(f.modulus(), constants, limits);
}

std::uint64_t predict_period_constant(Residue c, std::uint64_t s, const PrimePower& ring) {
  const Valuation t = valuation(c, ring);
  if (t.is_infinite()) throw UsageError("period prediction needs a nonzero constant");
  if (s == 0) return 1;
  const std::size_t k = digits(s, ring.p).leading_index();
  return checked_pow(ring.p, ring.ell - t.value() + static_cast<unsigned>(k));
}

unsigned leading_threshold_exponent(std::uint64_t p, std::uint64_t eta, std::uint64_t gamma) {
  const std::uint64_t lhs = eta - gamma - 1;
  unsigned mu = 0;
  while (lhs >= checked_pow(p, mu) * (p - 1)) ++mu;
  return mu;
}

PeriodPrediction predict_period_nilpotent(const PeriodicSequence& f, std::uint64_t s) {
  const GeneratingVector gv = generating_vector(f);
  if (gv.kind != SequenceKind::Nilpotent) {
    throw UsageError("predict_period_nilpotent requires a nilpotent sequence");
  }
  if (!gv.leading_index) throw UsageError("the zero sequence has no leading component");
  const std::size_t gamma = *gv.leading_index;
  const unsigned mu = leading_threshold_exponent(gv.ring.p, gv.index(), gamma);
  const std::int64_t from = signed_pow(gv.ring.p, mu) - static_cast<std::int64_t>(gamma);
  PeriodPrediction out;
  out.kind = SequenceKind::Nilpotent;
  out.leading_index = gamma;
  out.leading_value = gv.leading_value();
  out.predicted_period = predict_period_constant(out.leading_value, s + gamma, gv.ring);
  out.valid_from = static_cast<std::uint64_t>(std::max<std::int64_t>(0, from));
  out.advisory = s < out.valid_from;
  return out;
}

PeriodPrediction predict_period_idempotent(const PeriodicSequence& f, std::uint64_t s) {
  const GeneratingVector gv = generating_vector(f);
  if (gv.kind != SequenceKind::Idempotent) {
    throw UsageError("predict_period_idempotent requires an idempotent sequence");
  }
  if (!gv.leading_index) throw UsageError("the zero sequence has no leading component");
  const std::size_t gamma = *gv.leading_index;
  const auto eta = static_cast<std::int64_t>(gv.index());
  const unsigned mu = leading_threshold_exponent(gv.ring.p, gv.index(), gamma);
  const std::int64_t order = static_cast<std::int64_t>(s) - eta + static_cast<std::int64_t>(gamma);
  const std::int64_t from =
      std::max(eta, eta + signed_pow(gv.ring.p, mu) - static_cast<std::int64_t>(gamma));
  PeriodPrediction out;
  out.kind = SequenceKind::Idempotent;
  out.leading_index = gamma;
  out.leading_value = gv.leading_value();
  const std::uint64_t constant_period =
      order <= 0 ? 1
                 : predict_period_constant(out.leading_value, static_cast<std::uint64_t>(order),
                                           gv.ring);
  out.predicted_period = std::lcm<std::uint64_t>(f.period(), constant_period);
  out.valid_from = static_cast<std::uint64_t>(std::max<std::int64_t>(0, from));
  out.advisory = s < out.valid_from;
  return out;
}

PeriodPrediction predict_period(const PeriodicSequence& f, std::uint64_t s) {
  switch (classify(f)) {
    case SequenceKind::Nilpotent: return predict_period_nilpotent(f, s);
    case SequenceKind::Idempotent: return predict_period_idempotent(f, s);
    case SequenceKind::Mixed: break;
  }
  throw UsageError("period prediction needs an idempotent or nilpotent sequence; "
                   "split the sequence first");
}

CompositePrediction predict_period_composite(const PeriodicSequence& f, std::uint64_t s) {
  CompositePrediction out;
  std::uint64_t period = 1;
  bool complete = true;
  for (const PeriodicSequence& part : p_parts(f)) {
    const PrimePower ring = ModulusContext::make(part.modulus()).require_prime_power();
    CompositePrediction::Part entry{ring, classify(part), std::nullopt};
    if (part.is_zero()) {
      // Every primitive of zero is zero.
      entry.prediction = PeriodPrediction{1, 0, 0, 0, SequenceKind::Nilpotent, false};
    } else if (entry.kind != SequenceKind::Mixed) {
      entry.prediction = predict_period(part, s);
    }
    if (entry.prediction) {
      period = std::lcm(period, entry.prediction->predicted_period);
      out.advisory = out.advisory || entry.prediction->advisory;
    } else {
      complete = false;
    }
    out.parts.push_back(entry);
  }
  if (complete) out.period = period;
  return out;
}

PartialSumValuation partial_sum_valuation(Residue c, std::uint64_t s, const PrimePower& ring,
                                          const Limits& limits) {
  const Valuation tv = valuation(c, ring);
  if (tv.is_infinite()) throw UsageError("partial_sum_valuation needs c != 0");
  if (s < 1) throw UsageError("partial_sum_valuation needs s >= 1");
  const unsigned t = tv.value();
  const DigitVector ds = digits(s, ring.p);
  const auto k = static_cast<unsigned>(ds.leading_index());
  const std::uint64_t length = checked_pow(ring.p, ring.ell - t + k);
  const std::uint64_t q = ring.modulus();

  const PeriodicSequence prim = primitive(PeriodicSequence::constant(q, c), s, limits);
  PartialSumValuation out;
  for (std::uint64_t n = 0; n < length; ++n) out.materialized_sum = (out.materialized_sum + prim.nth(n)) % q;
  out.all_digits_top = std::all_of(ds.digits().begin(), ds.digits().end(),
                                   [&](unsigned d) { return d == ring.p - 1; });
  out.exact_valuation = t + kummer_valuation(length, s + 1, ring.p).value();
  const ModulusContext ctx = ModulusContext::make(q);
  const bool identity = out.materialized_sum == mul_mod(c, binom_mod_exact(length, s + 1, ctx), q);
  const bool classified = out.all_digits_top ? out.exact_valuation == ring.ell - 1
                                             : out.exact_valuation >= ring.ell;
  out.consistent = identity && classified;
  return out;
}

PeriodicSequence cumulative_primitive(const PeriodicSequence& f, std::uint64_t t,
                                      const Limits& limits) {
  if (t > limits.max_order) throw ResourceError("cumulative primitive order exceeds the cap");
  PeriodicSequence acc = f;
  for (std::uint64_t i = 0; i < t; ++i) {
    acc = f + sigma(acc);
    if (acc.period() > limits.max_length) {
      throw ResourceError("cumulative primitive exceeds the materialization limit");
    }
  }
  return acc;
}

PeriodPrediction predict_cumulative_period(const PeriodicSequence& f, std::uint64_t t) {
  // Same leading component and threshold as the single primitive.
  return predict_period_nilpotent(f, t);
}

}  // namespace modseq
