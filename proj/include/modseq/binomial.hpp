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

// Binomial sequences n -> C(n, s) mod p^ell, valuation statistics and the
// digit-pattern reductions linking bin_s to a shorter bin_s'.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modseq/sequence.hpp"

namespace modseq {

// One full period of n -> C(n, s) mod p^ell.
PeriodicSequence bin_seq(const PrimePower& ring, std::uint64_t s, const Limits& limits = {});

// Repeats each q^t-block of f q times.
PeriodicSequence double_seq(const PeriodicSequence& f, std::uint64_t q, unsigned t,
                            const Limits& limits = {});
// Emits (q - 1) q^t zeros before each q^t-block of f.
PeriodicSequence alt_seq(const PeriodicSequence& f, std::uint64_t q, unsigned t,
                         const Limits& limits = {});

// Same zeros and same valuations pointwise; moduli must agree.
bool nu_equiv(const PeriodicSequence& f, const PeriodicSequence& g);

struct BinomialStats {
  std::uint64_t s = 0;
  std::uint64_t p = 0;
  unsigned ell = 0;
  std::uint64_t period = 0;
  std::vector<std::uint64_t> pi;  // pi[i]: entries of valuation i, i < ell
  std::uint64_t zeros = 0;

  bool operator==(const BinomialStats&) const = default;
};

// Counts over one minimal period of f; s is left at 0.
BinomialStats stats(const PeriodicSequence& f, const PrimePower& ring);
// stats(bin_seq(ring, s)) with s filled in.
BinomialStats binomial_stats(const PrimePower& ring, std::uint64_t s, const Limits& limits = {});

enum class ReductionLemma { AllTop, AllZero, TopZeros };
enum class ReductionOperator { Alt, Double };

// "AllP-1", "AllZero", "P-1Zeros".
const char* to_string(ReductionLemma lemma);
const char* to_string(ReductionOperator op);

struct ReductionStep {
  PrimePower ring;
  ReductionLemma lemma = ReductionLemma::AllTop;
  int m = 0;               // the window covers digits k-m-1 down to k-m-ell
  unsigned k = 0;          // leading digit index of s
  std::uint64_t s = 0;
  std::uint64_t s_prime = 0;
  unsigned deleted_digit = 0;
  ReductionOperator op = ReductionOperator::Alt;
  unsigned scale_exponent = 0;  // the operator acts on p^scale_exponent blocks
  std::optional<std::uint64_t> e_size;  // TopZeros only
};

// Every admissible application of the three reductions to s, ordered by
// the scanning policy: highest window first and, within a window,
// AllTop before TopZeros before AllZero.
std::vector<ReductionStep> find_reductions(const PrimePower& ring, std::uint64_t s);

// stats(bin_s) from stats(bin_s') by the lemma's bookkeeping.
BinomialStats apply_reduction(const ReductionStep& step, const BinomialStats& reduced);

// The sequence the lemma declares nu-equivalent to bin_s.
PeriodicSequence reduction_rhs(const ReductionStep& step, const Limits& limits = {});

struct ReductionChain {
  std::vector<ReductionStep> steps;  // steps[0] acts on s
  std::uint64_t s_star = 0;
  BinomialStats base;    // materialized stats of bin_{s_star}
  BinomialStats result;  // stats of bin_s carried back through the chain
};

ReductionChain reduce_chain(const PrimePower& ring, std::uint64_t s, const Limits& limits = {});

struct ESet {
  std::uint64_t s = 0;
  int m = 0;
  std::vector<std::uint64_t> indices;  // ascending, inside [0, p^{k+ell})
  std::uint64_t size() const { return indices.size(); }
};

// True when s shows (p-1) 0^{ell-1} at window m with k > ell.
bool has_top_zeros_window(const PrimePower& ring, std::uint64_t s, int m);
// Enumerated from the digit conditions.
ESet e_set(const PrimePower& ring, std::uint64_t s, int m);
// Closed product formula.
std::uint64_t e_size(const PrimePower& ring, std::uint64_t s, int m);
// 0/1 indicator of E_s, period p^{k+ell}.
PeriodicSequence chi_e(const PrimePower& ring, std::uint64_t s, int m);

// n with its base-p digit j removed.
std::uint64_t delete_digit(std::uint64_t n, std::uint64_t p, unsigned j);

}  // namespace modseq
