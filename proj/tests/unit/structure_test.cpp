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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "modseq/structure.hpp"
#include "oracle.hpp"

namespace modseq {
namespace {

PeriodicSequence seq(std::uint64_t m, std::vector<std::int64_t> v) {
  return PeriodicSequence::from_values(m, v);
}
std::vector<Residue> vals(const PeriodicSequence& f) { return {f.values().begin(), f.values().end()}; }

// Cyclic difference on one stored period.
std::vector<Residue> cyc_delta(const std::vector<Residue>& v, std::uint64_t m) {
  std::vector<Residue> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[(i + 1) % v.size()] + m - v[i]) % m;
  return out;
}

bool all_zero(const std::vector<Residue>& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

// Smallest eta <= bound with Delta^eta f = 0, or 0.
std::uint64_t oracle_nil_index(std::vector<Residue> v, std::uint64_t m, std::uint64_t bound) {
  if (all_zero(v)) return 0;
  for (std::uint64_t i = 1; i <= bound; ++i) {
    v = cyc_delta(v, m);
    if (all_zero(v)) return i;
  }
  return 0;
}

// Smallest eta <= bound with Delta^eta f = f, or 0.
std::uint64_t oracle_idem_index(const std::vector<Residue>& v, std::uint64_t m, std::uint64_t bound) {
  auto w = v;
  for (std::uint64_t i = 1; i <= bound; ++i) {
    w = cyc_delta(w, m);
    if (oracle::expand(w, v.size()) == v) return i;
  }
  return 0;
}

PeriodicSequence random_with_period(std::mt19937_64& rng, std::uint64_t m, std::size_t len) {
  std::vector<std::int64_t> v(len);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % m);
  return seq(m, v);
}

PeriodicSequence random_nilpotent(std::mt19937_64& rng, std::uint64_t p, unsigned ell) {
  const std::size_t len = oracle::ipow(p, static_cast<unsigned>(rng() % 4));
  return random_with_period(rng, oracle::ipow(p, ell), len);
}

// Zero trace with period prime to p.
PeriodicSequence random_idempotent(std::mt19937_64& rng, std::uint64_t p, unsigned ell) {
  const std::uint64_t m = oracle::ipow(p, ell);
  std::size_t len = 0;
  do len = 1 + rng() % 8; while (len % p == 0);
  std::vector<std::int64_t> v(len);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i + 1 < len; ++i) sum += v[i] = static_cast<std::int64_t>(rng() % m);
  v[len - 1] = static_cast<std::int64_t>(m) * 64 - sum;
  return seq(m, v);
}

const PeriodicSequence kV2 = PeriodicSequence::from_values(4, std::vector<std::int64_t>{2, 1, 2, 0, 0, 1, 0, 0});
const PeriodicSequence kIdem = PeriodicSequence::from_values(4, std::vector<std::int64_t>{1, 3, 0});

TEST(Split, PaperExamples) {
  const auto a = split(seq(3, {2, 1}));
  EXPECT_EQ(a.idempotent_part, seq(3, {2, 1}));
  EXPECT_TRUE(a.nilpotent_part.is_zero());
  EXPECT_EQ(a.idempotency_index, 1u);

  const auto b = split(seq(4, {0, 1, 2, 3}));
  EXPECT_TRUE(b.idempotent_part.is_zero());
  EXPECT_EQ(b.nilpotency_index, 2u);
  EXPECT_EQ(classify(seq(4, {0, 1, 2, 3})), SequenceKind::Nilpotent);

  const auto c = split(kIdem);
  EXPECT_EQ(c.idempotent_part, kIdem);
  EXPECT_EQ(c.idempotency_index, 6u);
}

TEST(Split, InvariantsAgainstOracle) {
  std::mt19937_64 rng(29);
  for (std::uint64_t m : {4u, 8u, 9u, 12u, 27u}) {
    for (int trial = 0; trial < 80; ++trial) {
      const auto f = random_with_period(rng, m, 1 + rng() % 9);
      const auto r = split(f);
      EXPECT_EQ(r.idempotent_part + r.nilpotent_part, f);
      EXPECT_EQ(delta_pow(r.idempotent_part, r.idempotency_index), r.idempotent_part);
      EXPECT_TRUE(delta_pow(r.nilpotent_part, r.nilpotency_index).is_zero());
      EXPECT_EQ(f.period(), std::lcm(r.idempotent_part.period(), r.nilpotent_part.period()));
      const auto nil = oracle_nil_index(vals(r.nilpotent_part), m, 4096);
      EXPECT_EQ(nil == 0, r.nilpotent_part.is_zero());
      if (!r.idempotent_part.is_zero()) {
        EXPECT_GT(oracle_idem_index(vals(r.idempotent_part), m, 4096), 0u);
      }
      // Unique: splitting either part returns it unchanged.
      EXPECT_TRUE(split(r.idempotent_part).nilpotent_part.is_zero());
      EXPECT_TRUE(split(r.nilpotent_part).idempotent_part.is_zero());
    }
  }
}

TEST(Split, ExoticIdempotentsModThree) {
  const auto a = seq(3, {1, 1, 1, 0, 0, 2, 0, 0, 0, 2, 2, 2, 0, 0, 1, 0, 0, 0});
  EXPECT_EQ(classify(a), SequenceKind::Idempotent);
  EXPECT_EQ(split(a).idempotency_index, 9u);
  EXPECT_EQ(oracle_idem_index(vals(a), 3, 200), 9u);
  EXPECT_EQ(a.period(), 18u);

  const auto b = seq(3, {0, 2, 0, 0, 1});
  EXPECT_EQ(classify(b), SequenceKind::Idempotent);
  EXPECT_EQ(split(b).idempotency_index, 80u);
  EXPECT_EQ(oracle_idem_index(vals(b), 3, 200), 80u);
  EXPECT_EQ(b.period(), 5u);
}

TEST(Split, IsLocal) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_with_period(rng, 36, 1 + rng() % 12);
    const auto r = split(f);
    for (const auto& part : p_parts(f)) {
      const auto pp = ModulusContext::make(part.modulus()).require_prime_power();
      const auto rp = split(part);
      EXPECT_EQ(rp.idempotent_part, p_part(r.idempotent_part, pp.p, pp.ell));
      EXPECT_EQ(rp.nilpotent_part, p_part(r.nilpotent_part, pp.p, pp.ell));
    }
  }
}

TEST(NilpotentByPeriod, Criterion) {
  EXPECT_TRUE(is_nilpotent_by_period(kV2));
  EXPECT_FALSE(is_nilpotent_by_period(seq(3, {2, 1})));
  EXPECT_TRUE(is_nilpotent_by_period(seq(9, {5})));
  std::mt19937_64 rng(37);
  for (std::uint64_t m : {4u, 8u, 9u, 25u}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = random_with_period(rng, m, 1 + rng() % 10);
      const bool nil = split(f).idempotent_part.is_zero();
      EXPECT_EQ(is_nilpotent_by_period(f), nil) << f.to_string();
    }
  }
}

TEST(Periodised, NilpotentPartByScaling) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_with_period(rng, 9, 1 + rng() % 12);
    EXPECT_EQ(nilpotent_part_by_periodising(f), split(f).nilpotent_part) << f.to_string();
  }
  // p does not divide tau: the periodised sequence is the constant trace.
  const auto g = seq(9, {1, 5, 7, 2});
  EXPECT_EQ(periodised(g), PeriodicSequence::constant(9, trace(g)));
}

TEST(GeneratingVector, Examples) {
  const auto a = generating_vector(seq(3, {2, 1}));
  EXPECT_EQ(a.entries, (std::vector<Residue>{2}));
  EXPECT_EQ(a.leading_index, 0u);

  const auto b = generating_vector(kV2);
  EXPECT_EQ(b.kind, SequenceKind::Nilpotent);
  EXPECT_EQ(b.entries, (std::vector<Residue>{2, 3, 2, 3, 2}));
  EXPECT_EQ(b.leading_index, 3u);
  EXPECT_EQ(b.leading_value(), 3u);

  EXPECT_EQ(generating_vector(kIdem).entries, (std::vector<Residue>{1, 2, 3, 1, 0, 1}));
  EXPECT_EQ(generating_vector(kIdem).leading_index, 5u);
  EXPECT_EQ(generating_vector(seq(8, {0, 2})).entries, (std::vector<Residue>{0, 2, 4}));

  EXPECT_THROW((void)generating_vector(seq(4, {1, 0, 0})), UsageError);  // mixed
  EXPECT_THROW((void)generating_vector(seq(12, {1, 2})), UsageError);    // not a prime power
}

TEST(GeneratingVector, EntriesAreDifferencesAtZero) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_nilpotent(rng, 2, 3);
    if (f.is_zero()) continue;
    const auto gv = generating_vector(f);
    auto v = vals(f);
    for (std::size_t i = 0; i < gv.entries.size(); ++i) {
      EXPECT_EQ(gv.entries[i], v[0]);
      v = cyc_delta(v, 8);
    }
    EXPECT_TRUE(all_zero(v));
    EXPECT_NE(gv.entries.back(), 0u);
  }
}

TEST(GeneratingVector, InjectiveOnEachKind) {
  std::mt19937_64 rng(47);
  std::map<std::vector<Residue>, PeriodicSequence> seen_nil, seen_idem;
  for (int trial = 0; trial < 400; ++trial) {
    const auto f = trial % 2 ? random_nilpotent(rng, 3, 2) : random_idempotent(rng, 3, 2);
    const auto gv = generating_vector(f);
    auto& seen = gv.kind == SequenceKind::Nilpotent ? seen_nil : seen_idem;
    const auto [it, fresh] = seen.emplace(gv.entries, f);
    if (!fresh) EXPECT_EQ(it->second, f);
  }
}

TEST(Constants, RoundTrip) {
  EXPECT_EQ(nilpotent_to_constants(seq(8, {0, 2})), (std::vector<Residue>{0, 2, 4}));
  EXPECT_EQ(nilpotent_to_constants(seq(5, {3})), (std::vector<Residue>{3}));
  const auto c = nilpotent_to_constants(kV2);
  EXPECT_EQ(reconstruct_from_constants(4, c), kV2);

  // Both summands of [0,2] mod 8 have period 4 while the sum has period 2.
  EXPECT_EQ(sigma(seq(8, {2})).period(), 4u);
  EXPECT_EQ(primitive(seq(8, {4}), 2).period(), 4u);
  EXPECT_EQ(seq(8, {0, 2}).period(), 2u);

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const auto f = random_nilpotent(rng, 2, 3);
    EXPECT_EQ(reconstruct_from_constants(8, nilpotent_to_constants(f)), f);
  }
}

TEST(Trace, IdempotentCriterion) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_idempotent(rng, 2, 3);
    EXPECT_EQ(trace(f), 0u);
    EXPECT_EQ(classify(f), f.is_zero() ? SequenceKind::Nilpotent : SequenceKind::Idempotent);
  }
}

TEST(Overline, RemainderInRange) {
  EXPECT_EQ(overline(-8, 6), 4u);
  EXPECT_EQ(overline(-1, 6), 5u);
  EXPECT_EQ(overline(13, 6), 1u);
  EXPECT_EQ(overline(0, 6), 0u);
}

TEST(IdemPrimitive, FormulaAndPrintout) {
  EXPECT_EQ(delta_pow(kIdem, 4), seq(4, {0, 1, 3}));
  const std::vector<Residue> printed = {0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0, 1, 1, 2, 1, 1,
                                        1, 2, 1, 1, 2, 1, 1, 2, 2, 0, 2, 2, 2, 0, 2, 2,
                                        3, 3, 2, 3, 3, 2, 3, 3, 3, 2, 3, 3, 0, 1, 3, 0};
  const auto g = primitive(kIdem, 8);
  EXPECT_EQ(vals(g), printed);
  EXPECT_EQ(idem_primitive(kIdem, 8), g);
  const auto stream = oracle::primitive_stream(oracle::expand({1, 3, 0}, 96), 4, 8);
  EXPECT_EQ(oracle::prefix(stream, 48), printed);

  // s = 1 reduces to Delta^{eta-1} f - [e_{eta-1}].
  const auto gv = generating_vector(kIdem);
  EXPECT_EQ(sigma(kIdem), delta_pow(kIdem, 5) - PeriodicSequence::constant(4, gv.entries[5]));

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_idempotent(rng, 3, 2);
    if (f.is_zero()) continue;
    const std::uint64_t s = 1 + rng() % 15;
    EXPECT_EQ(idem_primitive(f, s), primitive(f, s)) << f.to_string() << " s=" << s;
  }
}

TEST(Prediction, ConstantPrimitives) {
  const PrimePower z4{2, 2};
  EXPECT_EQ(predict_period_constant(1, 7, z4), 16u);
  EXPECT_EQ(predict_period_constant(2, 4, z4), 8u);
  EXPECT_EQ(predict_period_constant(1, 1, PrimePower{3, 3}), 27u);
  EXPECT_EQ(oracle::measured_period(oracle::binomial_column(4, 7, 64)), 16u);
  EXPECT_EQ(oracle::measured_period(oracle::primitive_stream(oracle::expand({2}, 64), 4, 4)), 8u);
}

TEST(Prediction, VieruSeedAllS) {
  for (std::uint64_t s = 0; s <= 128; ++s) {
    const auto pr = predict_period_nilpotent(kV2, s);
    unsigned k = 0;
    for (std::uint64_t t = s + 3; t > 1; t >>= 1) ++k;
    EXPECT_EQ(pr.predicted_period, 1ull << (2 + k)) << s;
    EXPECT_EQ(pr.leading_index, 3u);
    EXPECT_EQ(primitive(kV2, s).period(), pr.predicted_period) << s;
  }
}

TEST(Prediction, PrimeFieldLeadsWithLastEntry) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_nilpotent(rng, 3, 1);
    if (f.is_zero()) continue;
    const auto gv = generating_vector(f);
    EXPECT_EQ(*gv.leading_index, gv.entries.size() - 1);
    // Constants need s >= 1; every other f is covered from s = 0.
    const std::uint64_t s = rng() % 40;
    const auto pr = predict_period_nilpotent(f, s);
    EXPECT_EQ(pr.valid_from, f.period() == 1 ? 1u : 0u);
    if (pr.advisory) continue;
    EXPECT_EQ(primitive(f, s).period(), pr.predicted_period);
  }
}

TEST(Prediction, NilpotentPastThreshold) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_nilpotent(rng, 2, 3);
    if (f.is_zero()) continue;
    const auto p0 = predict_period_nilpotent(f, 0);
    for (std::uint64_t s = p0.valid_from; s < p0.valid_from + 40; ++s) {
      const auto pr = predict_period_nilpotent(f, s);
      EXPECT_FALSE(pr.advisory);
      const auto stream = oracle::primitive_stream(oracle::expand(vals(f), 4 * pr.predicted_period), 8, s);
      ASSERT_EQ(oracle::measured_period(stream), pr.predicted_period) << f.to_string() << " s=" << s;
    }
  }
}

TEST(Prediction, IdempotentExample) {
  const auto pr = predict_period_idempotent(kIdem, 8);
  EXPECT_EQ(pr.predicted_period, 48u);
  EXPECT_EQ(pr.valid_from, 6u);
  for (std::uint64_t s = 6; s < 60; ++s) {
    unsigned k = 0;
    for (std::uint64_t t = s - 1; t > 1; t >>= 1) ++k;
    EXPECT_EQ(predict_period(kIdem, s).predicted_period, 3ull << (2 + k)) << s;
    EXPECT_EQ(primitive(kIdem, s).period(), 3ull << (2 + k)) << s;
  }
}

TEST(Prediction, IdempotentPastThreshold) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_idempotent(rng, 3, 2);
    if (f.is_zero()) continue;
    const auto p0 = predict_period_idempotent(f, 0);
    if (p0.valid_from > 64) continue;
    for (std::uint64_t s = p0.valid_from; s < p0.valid_from + 25; ++s) {
      const auto pr = predict_period_idempotent(f, s);
      ASSERT_EQ(primitive(f, s).period(), pr.predicted_period) << f.to_string() << " s=" << s;
    }
  }
}

TEST(Prediction, CompositeAndAdvisory) {
  const auto v = seq(12, {2, 1, 2, 4, 8, 1, 8, 4});
  const auto cp = predict_period_composite(v, 10);
  ASSERT_EQ(cp.parts.size(), 2u);
  ASSERT_TRUE(cp.period.has_value());
  EXPECT_EQ(*cp.period, primitive(v, 10).period());
  const auto mixed = predict_period_composite(seq(4, {1, 0, 0}), 5);
  EXPECT_FALSE(mixed.period.has_value());
  EXPECT_THROW((void)predict_period(seq(4, {1, 0, 0}), 5), UsageError);
}

TEST(PartialSums, ValuationClassification) {
  const PrimePower z4{2, 2};
  const auto a = partial_sum_valuation(1, 3, z4);
  EXPECT_TRUE(a.all_digits_top);
  EXPECT_EQ(a.exact_valuation, 1u);
  EXPECT_TRUE(a.consistent);
  const auto b = partial_sum_valuation(1, 2, z4);
  EXPECT_FALSE(b.all_digits_top);
  EXPECT_EQ(b.materialized_sum, 0u);
  EXPECT_TRUE(b.consistent);
  for (std::uint64_t s = 1; s < 100; ++s) {
    for (Residue c : {1u, 2u, 3u, 4u, 6u}) {
      EXPECT_TRUE(partial_sum_valuation(c, s, PrimePower{3, 2}).consistent) << c << " " << s;
    }
  }
}

TEST(Cumulative, PeriodFollowsLeadingTerm) {
  EXPECT_EQ(cumulative_primitive(kV2, 8).period(), 32u);
  EXPECT_EQ(predict_cumulative_period(kV2, 8).predicted_period, 32u);
  EXPECT_EQ(cumulative_primitive(seq(4, {3}), 0).period(), 1u);
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_nilpotent(rng, 2, 3);
    if (f.is_zero()) continue;
    const auto p0 = predict_cumulative_period(f, 0);
    for (std::uint64_t t = p0.valid_from; t < p0.valid_from + 20; ++t) {
      // Stream oracle: running sum of the primitives.
      const std::size_t len = 4 * predict_cumulative_period(f, t).predicted_period;
      std::vector<Residue> acc(len, 0);
      auto cur = oracle::expand(vals(f), len);
      for (std::uint64_t i = 0; i <= t; ++i) {
        for (std::size_t n = 0; n < len; ++n) acc[n] = (acc[n] + cur[n]) % 8;
        cur = oracle::primitive_stream(cur, 8, 1);
      }
      EXPECT_EQ(oracle::measured_period(acc), predict_cumulative_period(f, t).predicted_period);
    }
  }
}

}  // namespace
}  // namespace modseq
