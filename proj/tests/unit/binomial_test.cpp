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
#include <numeric>
#include <random>
#include <vector>

#include "modseq/binomial.hpp"
#include "oracle.hpp"

namespace modseq {
namespace {

constexpr PrimePower kZ4{2, 2};

PeriodicSequence seq(std::uint64_t m, std::vector<std::int64_t> v) {
  return PeriodicSequence::from_values(m, v);
}

oracle::Stats as_oracle(const BinomialStats& st) { return {st.period, st.zeros, st.pi}; }

// Pointwise valuations agree over a common multiple of both periods.
bool oracle_nu_equiv(const PeriodicSequence& f, const PeriodicSequence& g, const PrimePower& r) {
  const std::size_t len = std::lcm(f.period(), g.period());
  for (std::size_t n = 0; n < len; ++n) {
    if (oracle::residue_valuation(f.nth(n), r.p, r.ell) !=
        oracle::residue_valuation(g.nth(n), r.p, r.ell)) {
      return false;
    }
  }
  return true;
}

const PeriodicSequence kH = PeriodicSequence::from_values(11, std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8});

TEST(BinSeq, MatchesPascalColumns) {
  for (const PrimePower r : {PrimePower{2, 2}, PrimePower{2, 3}, PrimePower{3, 2}, PrimePower{5, 1}}) {
    const std::uint64_t m = r.modulus();
    for (std::uint64_t s = 0; s < 90; ++s) {
      const auto b = bin_seq(r, s);
      const auto col = oracle::binomial_column(m, s, 2 * b.period());
      ASSERT_EQ(b.expand(col.size()), col) << "s=" << s << " mod " << m;
      ASSERT_EQ(b.period(), oracle::measured_period(col));
    }
  }
  EXPECT_EQ(bin_seq(kZ4, 1), seq(4, {0, 1, 2, 3}));
  EXPECT_EQ(bin_seq(kZ4, 0).period(), 1u);
}

TEST(BinSeq, SpotValuesAndPeriodFormula) {
  std::mt19937_64 rng(83);
  const PrimePower r{3, 2};
  const auto ctx = ModulusContext::make(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t s = 1 + rng() % 300;
    const auto b = bin_seq(r, s);
    const std::uint64_t n = rng() % 100000;
    EXPECT_EQ(b.nth(n), binom_mod_exact(n, s, ctx));
    unsigned k = 0;
    for (std::uint64_t t = s; t >= 3; t /= 3) ++k;
    EXPECT_EQ(b.period(), oracle::ipow(3, 2 + k));
  }
  Limits tiny;
  tiny.max_length = 100;
  EXPECT_THROW((void)bin_seq(kZ4, 64, tiny), ResourceError);
}

TEST(Operators, DoubleExample) {
  const auto d = double_seq(kH, 2, 2);
  EXPECT_EQ(d, seq(11, {1, 2, 3, 4, 1, 2, 3, 4, 5, 6, 7, 8, 5, 6, 7, 8}));
  EXPECT_EQ(d.nth(8 + 4 + 3), 8u);
  EXPECT_EQ(kH.nth(4 + 3), 8u);
  EXPECT_EQ(double_seq(seq(11, {5}), 2, 3), seq(11, {5}));
}

TEST(Operators, AltExample) {
  const auto a = alt_seq(kH, 2, 2);
  EXPECT_EQ(a, seq(11, {0, 0, 0, 0, 1, 2, 3, 4, 0, 0, 0, 0, 5, 6, 7, 8}));
  EXPECT_EQ(a.nth(8 + 2), 0u);
}

TEST(Operators, PositionalLaw) {
  // Inserting a base-q digit at position t: Double reads f at n with that
  // digit removed; Alt does the same only when the digit is q - 1.
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t q = trial % 2 ? 2 : 3;
    const unsigned t = static_cast<unsigned>(rng() % 3);
    std::vector<std::int64_t> v(oracle::ipow(q, static_cast<unsigned>(1 + rng() % 3)));
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % 7);
    const auto f = seq(7, v);
    const auto d = double_seq(f, q, t);
    const auto a = alt_seq(f, q, t);
    const std::uint64_t qt = oracle::ipow(q, t);
    for (std::uint64_t n = 0; n < 4 * d.period(); ++n) {
      const std::uint64_t digit = (n / qt) % q;
      const std::uint64_t reduced = (n / (qt * q)) * qt + n % qt;
      ASSERT_EQ(d.nth(n), f.nth(reduced));
      ASSERT_EQ(a.nth(n), digit == q - 1 ? f.nth(reduced) : 0u);
    }
  }
}

TEST(NuEquiv, Basics) {
  EXPECT_TRUE(nu_equiv(seq(4, {1, 2}), seq(4, {3, 2})));
  EXPECT_FALSE(nu_equiv(seq(4, {2}), seq(4, {1})));
  EXPECT_TRUE(nu_equiv(kH, kH));
  EXPECT_THROW((void)nu_equiv(seq(4, {1}), seq(9, {1})), UsageError);
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> a(1 + rng() % 4), b(1 + rng() % 4);
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % 8);
    for (auto& x : b) x = static_cast<std::int64_t>(rng() % 8);
    const auto f = seq(8, a), g = seq(8, b);
    EXPECT_EQ(nu_equiv(f, g), oracle_nu_equiv(f, g, PrimePower{2, 3}));
    EXPECT_EQ(nu_equiv(f, g), nu_equiv(g, f));
  }
}

TEST(Stats, Counts) {
  const auto a = stats(seq(4, {0, 1, 2, 3}), kZ4);
  EXPECT_EQ(a.zeros, 1u);
  EXPECT_EQ(a.pi, (std::vector<std::uint64_t>{2, 1}));
  const auto b = stats(seq(4, {0}), kZ4);
  EXPECT_EQ(b.zeros, 1u);
  EXPECT_EQ(b.pi, (std::vector<std::uint64_t>{0, 0}));
  const auto c = binomial_stats(kZ4, 5);
  EXPECT_EQ(c.zeros + c.pi[0] + c.pi[1], 16u);
  EXPECT_EQ(c.period, 16u);
}

TEST(Stats, MatchOracleCounts) {
  for (const PrimePower r : {PrimePower{2, 2}, PrimePower{2, 3}, PrimePower{3, 2}}) {
    for (std::uint64_t s = 0; s < 120; ++s) {
      ASSERT_EQ(as_oracle(binomial_stats(r, s)), oracle::binomial_stats(r.p, r.ell, s))
          << r.p << "^" << r.ell << " s=" << s;
    }
  }
}

const ReductionStep* find(const std::vector<ReductionStep>& steps, ReductionLemma lemma, int m) {
  for (const auto& st : steps) {
    if (st.lemma == lemma && st.m == m) return &st;
  }
  return nullptr;
}

TEST(Reductions, AllTopExample) {
  const auto steps = find_reductions(kZ4, 22);
  const auto* st = find(steps, ReductionLemma::AllTop, 1);
  ASSERT_NE(st, nullptr);
  EXPECT_EQ(st->s_prime, 10u);
  EXPECT_EQ(st->op, ReductionOperator::Alt);
  EXPECT_EQ(st->scale_exponent, 1u);
  EXPECT_TRUE(nu_equiv(bin_seq(kZ4, 22), alt_seq(bin_seq(kZ4, 10), 2, 1)));
  const auto o22 = oracle::binomial_stats(2, 2, 22), o10 = oracle::binomial_stats(2, 2, 10);
  EXPECT_EQ(o22.zeros, o10.zeros + 32);
  EXPECT_EQ(o22.pi, o10.pi);
  EXPECT_EQ(as_oracle(apply_reduction(*st, binomial_stats(kZ4, 10))), o22);
}

TEST(Reductions, AllZeroExample) {
  const auto steps = find_reductions(kZ4, 18);
  const auto* st = find(steps, ReductionLemma::AllZero, 0);
  ASSERT_NE(st, nullptr);
  EXPECT_EQ(st->s_prime, 10u);
  EXPECT_EQ(st->op, ReductionOperator::Double);
  EXPECT_EQ(st->scale_exponent, 3u);
  EXPECT_TRUE(nu_equiv(bin_seq(kZ4, 18), double_seq(bin_seq(kZ4, 10), 2, 3)));
  const auto o18 = oracle::binomial_stats(2, 2, 18), o10 = oracle::binomial_stats(2, 2, 10);
  EXPECT_EQ(o18.zeros, 2 * o10.zeros);
  EXPECT_EQ(o18.pi[0], 2 * o10.pi[0]);
  EXPECT_EQ(o18.pi[1], 2 * o10.pi[1]);
  EXPECT_EQ(as_oracle(apply_reduction(*st, binomial_stats(kZ4, 10))), o18);
}

TEST(Reductions, TopZerosExample) {
  // 27 = [11011]_2: the (p-1)0 window sits on digits 3,2, which is m = 0.
  const auto steps = find_reductions(kZ4, 27);
  const auto* st = find(steps, ReductionLemma::TopZeros, 0);
  ASSERT_NE(st, nullptr);
  EXPECT_EQ(find(steps, ReductionLemma::TopZeros, 1), nullptr);
  EXPECT_EQ(st->s_prime, 15u);
  EXPECT_EQ(st->deleted_digit, 2u);
  EXPECT_EQ(st->op, ReductionOperator::Double);
  EXPECT_EQ(st->scale_exponent, 2u);
  ASSERT_TRUE(st->e_size.has_value());
  EXPECT_EQ(*st->e_size, 2u);
  EXPECT_TRUE(nu_equiv(bin_seq(kZ4, 27), reduction_rhs(*st)));
  const auto o27 = oracle::binomial_stats(2, 2, 27), o15 = oracle::binomial_stats(2, 2, 15);
  EXPECT_EQ(o27.pi[1], 2 * o15.pi[1] + 2);
  EXPECT_EQ(o27.zeros, 2 * o15.zeros - 2);
  EXPECT_EQ(as_oracle(apply_reduction(*st, binomial_stats(kZ4, 15))), o27);
}

TEST(Reductions, StructuralInvariants) {
  for (const PrimePower r : {PrimePower{2, 2}, PrimePower{2, 3}, PrimePower{3, 2}, PrimePower{3, 1}}) {
    const std::uint64_t top = oracle::ipow(r.p, r.ell + 4);
    for (std::uint64_t s = 1; s < top; ++s) {
      const auto ds = oracle::base_digits(s, r.p);
      for (const auto& st : find_reductions(r, s)) {
        EXPECT_LT(st.s_prime, s);
        auto expect = ds;
        expect.erase(expect.begin() + st.deleted_digit);
        while (!expect.empty() && expect.back() == 0) expect.pop_back();
        EXPECT_EQ(oracle::base_digits(st.s_prime, r.p), expect) << s;
        EXPECT_EQ(st.k + 1, ds.size());
      }
    }
  }
}

TEST(Reductions, IdentityAndBookkeepingExhaustive) {
  for (const PrimePower r : {PrimePower{2, 2}, PrimePower{2, 3}, PrimePower{3, 2}}) {
    const std::uint64_t top = oracle::ipow(r.p, r.ell + 4);
    for (std::uint64_t s = 1; s < top; ++s) {
      const auto direct = oracle::binomial_stats(r.p, r.ell, s);
      const auto b = bin_seq(r, s);
      for (const auto& st : find_reductions(r, s)) {
        ASSERT_TRUE(oracle_nu_equiv(b, reduction_rhs(st), r))
            << r.p << "^" << r.ell << " s=" << s << " " << to_string(st.lemma) << " m=" << st.m;
        ASSERT_EQ(as_oracle(apply_reduction(st, binomial_stats(r, st.s_prime))), direct)
            << r.p << "^" << r.ell << " s=" << s << " " << to_string(st.lemma) << " m=" << st.m;
      }
    }
  }
}

TEST(Reductions, PrimeFieldIsLucas) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const PrimePower r{p, 1};
    for (std::uint64_t s = 1; s < 400; ++s) {
      for (const auto& st : find_reductions(r, s)) {
        const unsigned digit = oracle::base_digits(s, p)[st.deleted_digit];
        EXPECT_TRUE(digit == 0 || digit == p - 1);
        EXPECT_EQ(as_oracle(apply_reduction(st, binomial_stats(r, st.s_prime))),
                  oracle::binomial_stats(p, 1, s));
      }
    }
  }
}

TEST(Chain, MatchesDirectCounting) {
  for (std::uint64_t s = 0; s < 512; ++s) {
    const auto c = reduce_chain(kZ4, s);
    ASSERT_EQ(as_oracle(c.result), oracle::binomial_stats(2, 2, s)) << s;
    ASSERT_EQ(c.base, binomial_stats(kZ4, c.s_star));
    if (!c.steps.empty()) {
      EXPECT_EQ(c.steps.front().s, s);
      EXPECT_EQ(c.steps.back().s_prime, c.s_star);
    }
  }
  for (const PrimePower r : {PrimePower{2, 3}, PrimePower{3, 2}}) {
    for (std::uint64_t s = 0; s < 400; ++s) {
      ASSERT_EQ(as_oracle(reduce_chain(r, s).result), oracle::binomial_stats(r.p, r.ell, s));
    }
  }
}

TEST(Chain, EmptyWhenIrreducible) {
  // k <= ell: nothing to delete.
  EXPECT_TRUE(reduce_chain(kZ4, 5).steps.empty());
  EXPECT_EQ(reduce_chain(kZ4, 5).s_star, 5u);
}

TEST(Chain, CompleteForTwoSquared) {
  // Over Z_4 every s reduces to at most three binary digits.
  for (std::uint64_t s = 1; s < 4096; ++s) EXPECT_LT(reduce_chain(kZ4, s).s_star, 8u) << s;
}

TEST(ESet, EnumerationAgreesWithFormula) {
  const auto e = e_set(kZ4, 27, 0);
  EXPECT_EQ(e.size(), 2u);
  EXPECT_EQ(e_size(kZ4, 27, 0), 2u);
  // Stored minimal; two ones over the nominal 2^{2+4} window.
  const auto chi = chi_e(kZ4, 27, 0);
  EXPECT_EQ(64u % chi.period(), 0u);
  const auto ones = chi.expand(64);
  EXPECT_EQ(std::count(ones.begin(), ones.end(), 1u), 2);
  for (const auto n : e.indices) EXPECT_EQ(chi.nth(n), 1u);

  for (const PrimePower r : {PrimePower{2, 2}, PrimePower{2, 3}, PrimePower{3, 2}}) {
    for (std::uint64_t s = 1; s < oracle::ipow(r.p, r.ell + 4); ++s) {
      const auto ds = oracle::base_digits(s, r.p);
      const int k = static_cast<int>(ds.size()) - 1;
      for (int m = -1; m <= k - static_cast<int>(r.ell) - 1; ++m) {
        if (!has_top_zeros_window(r, s, m)) continue;
        ASSERT_EQ(e_set(r, s, m).size(), e_size(r, s, m)) << s << " m=" << m;
        const int below = k - m - static_cast<int>(r.ell) - 1;
        if (below >= 0 && ds[below] == 0) {
          EXPECT_EQ(e_size(r, s, m), 0u);
        }
      }
    }
  }
}

TEST(ESet, TwoSquaredSpecialisation) {
  // |E_s| = b_{k-2} 2^{z(s)} at m = -1.
  for (std::uint64_t s = 8; s < 2048; ++s) {
    if (!has_top_zeros_window(kZ4, s, -1)) continue;
    const auto ds = oracle::base_digits(s, 2);
    const std::size_t k = ds.size() - 1;
    unsigned zeros = 0;
    for (unsigned d : ds) zeros += d == 0;
    EXPECT_EQ(e_size(kZ4, s, -1), ds[k - 2] * (1ull << zeros)) << s;
  }
  EXPECT_TRUE(chi_e(kZ4, 0b1000, -1).is_zero());
}

TEST(DeleteDigit, Basics) {
  EXPECT_EQ(delete_digit(0b11011, 2, 2), 0b1111u);
  EXPECT_EQ(delete_digit(0b10110, 2, 1), 0b1010u);
  EXPECT_EQ(delete_digit(100, 10, 0), 10u);
}

}  // namespace
}  // namespace modseq
