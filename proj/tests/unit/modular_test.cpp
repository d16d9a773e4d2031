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

#include <vector>

#include "modseq/modular.hpp"
#include "oracle.hpp"

namespace modseq {
namespace {

TEST(Valuation, ZeroIsInfinite) {
  EXPECT_TRUE(valuation(std::int64_t{0}, 3).is_infinite());
  EXPECT_THROW((void)valuation(std::int64_t{0}, 3).value(), UsageError);
  EXPECT_LT(Valuation::finite(100), Valuation::infinite());
}

TEST(Valuation, MatchesTrialDivision) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (std::int64_t x = 1; x < 2000; ++x) {
      EXPECT_EQ(valuation(x, p).value(), oracle::residue_valuation(x, p, 64)) << x << " " << p;
      EXPECT_EQ(valuation(-x, p), valuation(x, p));
    }
  }
}

TEST(Valuation, ResidueInPrimePowerRing) {
  const PrimePower z9{3, 2};
  EXPECT_TRUE(valuation(Residue{0}, z9).is_infinite());
  EXPECT_EQ(valuation(Residue{3}, z9).value(), 1u);
  EXPECT_EQ(valuation(Residue{6}, z9).value(), 1u);
  EXPECT_EQ(valuation(Residue{4}, z9).value(), 0u);
}

TEST(Valuation, RejectsNonPrime) { EXPECT_THROW((void)valuation(std::int64_t{4}, 6), UsageError); }

TEST(Digits, KummerWorkedExample) {
  EXPECT_EQ(digits(798, 3).to_string(), "[1002120]_3");
  EXPECT_EQ(digits(454, 3).to_string(), "[121211]_3");
  EXPECT_EQ(digits(798, 3).leading_index(), 6u);
}

TEST(Digits, RoundTripAndPadding) {
  for (std::uint64_t p : {2u, 3u, 7u}) {
    for (std::uint64_t n = 1; n < 500; ++n) {
      const DigitVector d = digits(n, p);
      EXPECT_EQ(d.value(), n);
      const auto ref = oracle::base_digits(n, p);
      ASSERT_EQ(d.size(), ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(d[i], ref[i]);
      EXPECT_EQ(d[ref.size() + 3], 0u);
    }
  }
  EXPECT_TRUE(digits(0, 5).empty());
  EXPECT_THROW((void)digits(0, 5).leading_index(), UsageError);
  EXPECT_THROW((void)digits(5, 1), UsageError);
}

TEST(Digits, ZeroCountAndWeight) {
  EXPECT_EQ(zero_count(1), 0u);
  EXPECT_EQ(zero_count(8), 3u);
  EXPECT_EQ(zero_count(0b101101), 2u);
  EXPECT_EQ(hamming_weight(0b101101), 4u);
  EXPECT_EQ(hamming_weight(0), 0u);
  EXPECT_EQ(bitwise_or(5, 10), 15u);
}

TEST(Kummer, WorkedExample) { EXPECT_EQ(kummer_valuation(798, 454, 3), Valuation::finite(4)); }

TEST(Kummer, MatchesLegendre) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (std::uint64_t n = 0; n < 200; ++n) {
      for (std::uint64_t s = 0; s <= n; ++s) {
        ASSERT_EQ(kummer_valuation(n, s, p).value(), oracle::binomial_valuation(n, s, p))
            << n << " " << s << " " << p;
      }
    }
  }
}

TEST(Kummer, RejectsSAboveN) { EXPECT_THROW((void)kummer_valuation(3, 5, 2), UsageError); }

TEST(Binomial, FastAndExactAgreeWithPascal) {
  for (std::uint64_t m : {2u, 4u, 8u, 9u, 12u, 27u, 30u, 49u}) {
    const auto ctx = ModulusContext::make(m);
    const auto t = oracle::pascal(m, 160, 160);
    for (std::uint64_t n = 0; n < 160; ++n) {
      for (std::uint64_t s = 0; s <= n + 2 && s <= 159; ++s) {
        const std::uint64_t want = s <= n ? t[n][s] : 0;
        ASSERT_EQ(binom_mod(n, s, ctx), want) << n << " " << s << " mod " << m;
        ASSERT_EQ(binom_mod_exact(n, s, ctx), want) << n << " " << s << " mod " << m;
      }
    }
  }
}

TEST(Binomial, LargeArgumentsAgree) {
  const auto ctx = ModulusContext::make(1u << 10);
  for (std::uint64_t n : {1000003ull, 123456789ull, 9999999967ull}) {
    for (std::uint64_t s : {1ull, 17ull, 1023ull, 65537ull}) {
      EXPECT_EQ(binom_mod(n, s, ctx), binom_mod_exact(n, s, ctx)) << n << " " << s;
    }
  }
}

TEST(ModulusContext, Factorization) {
  const auto ctx = ModulusContext::make(360);
  ASSERT_EQ(ctx.factorization().size(), 3u);
  EXPECT_EQ(ctx.factorization()[0], (PrimeFactor{2, 3}));
  EXPECT_FALSE(ctx.as_prime_power().has_value());
  EXPECT_THROW((void)ctx.require_prime_power(), UsageError);
  EXPECT_EQ(ModulusContext::make(81).require_prime_power(), (PrimePower{3, 4}));
  EXPECT_THROW((void)ModulusContext::make(1), UsageError);
  EXPECT_THROW((void)ModulusContext::prime_power(6, 2), UsageError);
}

TEST(Arithmetic, InverseAndOrder) {
  EXPECT_EQ(inverse_mod(3, 4), 3u);
  EXPECT_EQ(mul_mod(inverse_mod(7, 30), 7, 30), 1u);
  EXPECT_THROW((void)inverse_mod(2, 4), UsageError);
  EXPECT_EQ(additive_order(1, 4), 4u);
  EXPECT_EQ(additive_order(2, 4), 2u);
  EXPECT_EQ(additive_order(0, 4), 1u);
  EXPECT_EQ(additive_order(6, 9), 3u);
  EXPECT_EQ(reduce(-1, 12), 11u);
  EXPECT_THROW((void)checked_pow(10, 30), ResourceError);
}

}  // namespace
}  // namespace modseq
