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

#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "modseq/record.hpp"
#include "modseq/sequence.hpp"
#include "oracle.hpp"

namespace modseq {
namespace {

PeriodicSequence seq(std::uint64_t m, std::vector<std::int64_t> v) {
  return PeriodicSequence::from_values(m, v);
}

std::vector<Residue> vals(const PeriodicSequence& f) { return {f.values().begin(), f.values().end()}; }

PeriodicSequence random_seq(std::mt19937_64& rng, std::uint64_t m) {
  std::vector<std::int64_t> v(1 + rng() % 12);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % m);
  return seq(m, v);
}

const PeriodicSequence kVieru = PeriodicSequence::from_values(12, std::vector<std::int64_t>{2, 1, 2, 4, 8, 1, 8, 4});

TEST(PeriodicSequence, CanonicalMinimalPeriod) {
  EXPECT_EQ(kVieru.period(), 8u);
  EXPECT_EQ(vals(kVieru), (std::vector<Residue>{2, 1, 2, 4, 8, 1, 8, 4}));
  EXPECT_EQ(seq(4, {1, 2, 1, 2, 1, 2}), seq(4, {1, 2}));
  EXPECT_EQ(seq(4, {5, -2}), seq(4, {1, 2}));
  EXPECT_EQ(seq(5, {3, 3, 3}).period(), 1u);
  EXPECT_NE(seq(4, {1, 2}), seq(8, {1, 2}));
  EXPECT_EQ(seq(3, {2, 1}).to_string(), "[2,1] mod 3");
  EXPECT_THROW(seq(4, {}), UsageError);
  EXPECT_THROW(seq(1, {0}), UsageError);
}

TEST(PeriodicSequence, MinimalPeriodMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Residue> base(1 + rng() % 6);
    for (auto& x : base) x = rng() % 3;
    const auto rep = oracle::expand(base, base.size() * (1 + rng() % 4));
    EXPECT_EQ(minimal_period(rep), oracle::measured_period(rep));
  }
}

TEST(Operators, DeltaOfIdempotentExample) {
  EXPECT_EQ(delta(seq(3, {2, 1})), seq(3, {2, 1}));
}

TEST(Operators, ShiftAndDeltaMatchStreams) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t m = 2 + rng() % 15;
    const auto f = random_seq(rng, m);
    const auto stream = oracle::expand(vals(f), 4 * f.period() + 1);
    const auto d = oracle::delta_stream(stream, m);
    EXPECT_EQ(delta(f).expand(d.size()), d);
    const std::uint64_t j = rng() % 30;
    for (std::size_t n = 0; n < 20; ++n) EXPECT_EQ(shift(f, j).nth(n), f.nth(n + j));
  }
}

TEST(Operators, SigmaOfConstant) {
  const auto g = sigma(seq(4, {1}));
  EXPECT_EQ(g, seq(4, {0, 1, 2, 3}));
  EXPECT_EQ(g.period(), 4u);
}

TEST(Operators, SigmaIsRightInverseOfDelta) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t m = 2 + rng() % 20;
    const auto f = random_seq(rng, m);
    const Residue c = rng() % m;
    EXPECT_EQ(delta(sigma(f, c)), f);
    // Sigma_c(Delta f) = f + [c - f(0)].
    EXPECT_EQ(sigma(delta(f), c), f + PeriodicSequence::constant(m, (c + m - f.nth(0)) % m));
  }
}

TEST(Operators, PrimitiveMatchesPrefixSums) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint64_t m = std::vector<std::uint64_t>{4, 8, 9, 12, 25}[rng() % 5];
    const auto f = random_seq(rng, m);
    const std::uint64_t s = rng() % 12;
    const auto g = primitive(f, s);
    // Every primitive period divides period(f) times m^s; a stream of four
    // periods of g is enough to compare.
    const auto stream = oracle::primitive_stream(oracle::expand(vals(f), 4 * g.period() * f.period()), m, s);
    EXPECT_EQ(g.expand(stream.size()), stream) << f.to_string() << " s=" << s;
  }
}

TEST(Operators, ConstantPrimitiveIsBinomialColumn) {
  for (std::uint64_t m : {4u, 9u}) {
    for (Residue c = 1; c < m; ++c) {
      for (std::uint64_t s = 0; s <= 20; ++s) {
        const auto g = primitive(PeriodicSequence::constant(m, c), s);
        const auto col = oracle::binomial_column(m, s, g.period());
        for (std::size_t n = 0; n < g.period(); ++n) ASSERT_EQ(g.nth(n), c * col[n] % m);
      }
    }
  }
}

TEST(Operators, PrimitiveCapIsEnforced) {
  Limits tiny;
  tiny.max_length = 64;
  EXPECT_THROW((void)primitive(seq(4, {1}), 40, tiny), ResourceError);
  Limits shallow;
  shallow.max_order = 10;
  EXPECT_THROW((void)primitive(seq(4, {1}), 11, shallow), ResourceError);
}

TEST(Operators, TraceAndPrimitivePeriod) {
  EXPECT_EQ(trace(seq(3, {2, 1})), 0u);
  EXPECT_EQ(sigma(seq(4, {1})).period(), 4u);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t m = 2 + rng() % 30;
    const auto f = random_seq(rng, m);
    const auto stream = oracle::primitive_stream(oracle::expand(vals(f), f.period() * m), m, 1);
    const std::uint64_t want = oracle::measured_period(stream);
    EXPECT_EQ(sigma(f).period(), want);
    const std::uint64_t order = m / std::gcd<std::uint64_t>(trace(f), m);
    EXPECT_EQ(want, f.period() * order) << f.to_string();
  }
}

TEST(Operators, LinearAlgebra) {
  const auto f = seq(9, {1, 8, 4});
  const auto g = seq(9, {2, 5});
  EXPECT_EQ((f + g) - g, f);
  EXPECT_EQ(f + negate(f), PeriodicSequence::constant(9, 0));
  EXPECT_EQ(scalar_mul(3, f), seq(9, {3, 6, 3}));
  EXPECT_EQ((f + g).period(), 6u);
  EXPECT_THROW((void)(f + seq(4, {1})), UsageError);
}

TEST(PParts, VieruExample) {
  const auto parts = p_parts(kVieru);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], seq(4, {2, 1, 2, 0, 0, 1, 0, 0}));
  EXPECT_EQ(parts[1], seq(3, {2, 1}));
  EXPECT_EQ(crt_combine(parts), kVieru);
  // The idempotent lifts that sum to V.
  const auto lift2 = seq(12, {6, 9, 6, 0, 0, 9, 0, 0});
  const auto lift3 = seq(12, {8, 4});
  EXPECT_EQ(lift2 + lift3, kVieru);
  EXPECT_EQ(p_part(lift2, 2, 2), parts[0]);
  EXPECT_EQ(p_part(lift2, 3, 1), seq(3, {0}));
  EXPECT_EQ(p_part(lift3, 3, 1), parts[1]);
  EXPECT_EQ(p_part(lift3, 2, 2), seq(4, {0}));
}

TEST(PParts, RoundTripRandom) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t m = std::vector<std::uint64_t>{6, 12, 30, 36, 90, 210}[rng() % 6];
    const auto f = random_seq(rng, m);
    EXPECT_EQ(crt_combine(p_parts(f)), f);
  }
  EXPECT_THROW((void)p_part(kVieru, 2, 1), UsageError);
  const std::vector<PeriodicSequence> clash = {seq(4, {1}), seq(2, {1})};
  EXPECT_THROW((void)crt_combine(clash), UsageError);
}

TEST(Records, RoundTrip) {
  EXPECT_EQ(to_record(kVieru), R"({"modulus":12,"period":[2,1,2,4,8,1,8,4]})");
  EXPECT_EQ(parse_sequence_record(to_record(kVieru)), kVieru);
  std::istringstream in("{\"modulus\":4,\"period\":[1,2]}\n\n{\"modulus\":3,\"period\":[2,1]}\n");
  const auto all = parse_sequence_records(in);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[1], seq(3, {2, 1}));
}

TEST(Records, DiagnosticsNameLineAndField) {
  std::istringstream in("{\"modulus\":4,\"period\":[1,2]}\n{\"modulus\":4,\"period\":[1,\"x\"]}\n");
  try {
    (void)parse_sequence_records(in);
    FAIL() << "expected a usage error";
  } catch (const UsageError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("line 2"), std::string::npos) << what;
    EXPECT_NE(what.find("period"), std::string::npos) << what;
  }
  EXPECT_THROW((void)parse_sequence_record("{\"period\":[1]}"), UsageError);
  EXPECT_THROW((void)parse_sequence_record("{\"modulus\":1,\"period\":[0]}"), UsageError);
  EXPECT_THROW((void)parse_sequence_record("not json"), UsageError);
}

}  // namespace
}  // namespace modseq
