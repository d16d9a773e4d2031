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

#include "modseq/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "modseq/binomial.hpp"
#include "modseq/sequence.hpp"
#include "modseq/structure.hpp"
#include "modseq/vieru.hpp"

namespace modseq {

using nlohmann::json;

namespace {

constexpr Claim kClaims[] = {
    {"reduction.nu_equiv", "bin_s is nu-equivalent to the lemma's Alt/Double right-hand side"},
    {"reduction.stats", "Pi_i and Z of bin_s follow from those of bin_s' by the lemma"},
    {"reduction.digits", "s' < s and s' has exactly one base-p digit fewer than s"},
    {"reduction.tail_shift", "(s+i)' = s' + i when s and s+i differ only below the window"},
    {"reduction.overlap", "overlapping windows of one pattern give identical statistics"},
    {"reduction.subsumption", "for p = 2 every all-zero reduction is a (p-1)0..0 reduction with empty E_s"},
    {"nu_equiv.equivalence", "nu-equivalence is reflexive, symmetric and transitive"},
    {"eset.size", "the enumerated E_s has the size given by the product formula"},
    {"chain.stats", "statistics carried through reduce_chain equal direct counting"},
    {"lucas.product", "over Z_p, C(n, s) is the product of the digitwise binomials"},
    {"lucas.digit_deletion", "over Z_p the reductions delete a digit equal to 0 or p-1"},
    {"period.constant", "tau(Sigma^s [c]) = p^{ell - nu(c) + k_s}"},
    {"period.trace_order", "tau(Sigma f) = additive order of tr f times tau(f)"},
    {"period.nilpotent", "tau(Sigma^s f) = tau(Sigma^{s+gamma} [e_gamma]) past the threshold"},
    {"period.cumulative", "tau(sum_{i<=t} Sigma^i f) = tau(Sigma^{t+gamma} [e_gamma]) past the threshold"},
    {"period.idempotent", "tau(Sigma^s f) = lcm(tau(f), tau(Sigma^{s-eta+gamma} [e_gamma])) past the threshold"},
    {"period.idempotent_example", "tau(Sigma^8 [1,3,0] mod 4) = 48"},
    {"period.vieru", "tau(Sigma^s v) = 2^{2+k} where s + 3 has leading bit k"},
    {"idempotent.formula", "Sigma^s f = Delta^{ov(-s)} f - sum_j Sigma^j [e_{ov(j-s)}] for idempotent f"},
    {"split.sum", "f = f_I + f_N"},
    {"split.idempotent", "Delta^t f_I = f_I"},
    {"split.nilpotent", "Delta^eta f_N = 0"},
    {"split.unique", "splitting f_I or f_N returns it unchanged"},
    {"split.period_lcm", "tau(f) = lcm(tau(f_I), tau(f_N))"},
    {"split.local", "the split commutes with taking p-parts"},
    {"crt.roundtrip", "recombining the p-parts returns f"},
    {"nilpotent.period", "over Z_{p^ell}, f is nilpotent iff tau(f) is a power of p"},
    {"periodised.nilpotent", "the periodised sequence times q^{-1} is the nilpotent part"},
    {"nilpotent.roundtrip", "a nilpotent f equals sum_i Sigma^i [e_i]"},
    {"genvec.injective", "distinct sequences of one kind have distinct generating vectors"},
    {"trace.idempotent", "idempotent sequences have zero trace"},
    {"trace.criterion", "zero trace and p not dividing tau(f) imply idempotent"},
    {"idempotent.exotic", "the two mod-3 idempotents have the stated index and period"},
    {"vieru.identity", "v^s equals the binomial combination 2,3,2,3,2"},
    {"vieru.z5_printed", "the printed initial block equals the zero counts for 32 <= s < 64"},
    {"vieru.recursion", "the six-case recursion reproduces the zero counts"},
    {"vieru.case_c", "2 Z(s - 2^{k-1}) - d_k(s) equals Z(s) on the C-range"},
    {"vieru.case_coverage", "each recursion case is exercised at least four times"},
    {"vieru.f_intermediate", "Z(2 bin_{s'+4} + 3 bin_{s'+3}) = 2^{k-5} 32 in case F with low bits 01"},
    {"vieru.f_period", "in case F with low bits 00, tau(v^s) = 2^{k+2} while tau(bin_{s+4}) = 2^{k+3}"},
    {"d.base", "d_5 = (4,8,4,4)"},
    {"d.forms", "closed, recursive, Hamming and a(n) forms of d_k agree"},
    {"d.esets", "d_k(s) = |E_{s+1} symmetric difference E_{s+3}|"},
    {"w.hamming", "the w_h recurrence lists the Hamming weights of 1 .. 2^{h+1} - 4"},
    {"a.relation", "d_k(2^k + 2^{k-2} + 2^{t_1} + ... + 2^{t_h} - 4) = 2^{k-h-t_h}"},
};

class Recorder {
 public:
  explicit Recorder(std::string suite) : start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
  }

  void check(bool ok, std::string_view claim, const json& inputs, const json& expected,
             const json& actual) {
    ++report_.instance_count;
    if (!ok) {
      report_.failures.push_back(
          {std::string(claim), inputs.dump(), expected.dump(), actual.dump()});
    }
  }

  ConformanceReport finish() {
    report_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  ConformanceReport report_;
  std::chrono::steady_clock::time_point start_;
};

json values_json(const PeriodicSequence& f) {
  return json{{"modulus", f.modulus()},
              {"period", std::vector<Residue>(f.values().begin(), f.values().end())}};
}

json stats_json(const BinomialStats& st) {
  return json{{"period", st.period}, {"pi", st.pi}, {"zeros", st.zeros}};
}

json step_json(const ReductionStep& st) {
  return json{{"p", st.ring.p}, {"ell", st.ring.ell}, {"s", st.s},
              {"lemma", to_string(st.lemma)}, {"m", st.m}, {"s_prime", st.s_prime}};
}

unsigned lead(std::uint64_t s, std::uint64_t p) {
  return static_cast<unsigned>(digits(s, p).leading_index());
}

Residue lucas(std::uint64_t n, std::uint64_t s, std::uint64_t p) {
  Residue out = 1;
  while (n || s) {
    const std::uint64_t a = n % p;
    const std::uint64_t b = s % p;
    if (b > a) return 0;
    // C(a, b) for a < p fits easily.
    std::uint64_t c = 1;
    for (std::uint64_t i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
    out = out * (c % p) % p;
    n /= p;
    s /= p;
  }
  return out;
}

PeriodicSequence random_sequence(std::mt19937_64& rng, std::uint64_t m, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::int64_t> val(0, static_cast<std::int64_t>(m) - 1);
  std::vector<std::int64_t> raw(len(rng));
  for (auto& x : raw) x = val(rng);
  return PeriodicSequence::from_values(m, raw);
}

}  // namespace

std::span<const Claim> claim_registry() { return kClaims; }

const Claim* find_claim(std::string_view id) {
  for (const Claim& c : kClaims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::string ConformanceReport::to_records() const {
  std::string out;
  for (const Failure& f : failures) {
    const Claim* claim = find_claim(f.claim_id);
    json rec{{"suite", suite},
             {"claim", f.claim_id},
             {"statement", claim ? std::string(claim->statement) : std::string()},
             {"inputs", json::parse(f.inputs)},
             {"expected", json::parse(f.expected)},
             {"actual", json::parse(f.actual)}};
    out += rec.dump() + "\n";
  }
  json summary{{"suite", suite},
               {"instances", instance_count},
               {"failures", failures.size()},
               {"wall_time_s", wall_seconds}};
  return out + summary.dump() + "\n";
}

std::string ConformanceReport::summary() const {
  std::ostringstream os;
  os << suite << ": " << instance_count << " instances, " << failures.size() << " failures";
  std::map<std::string, std::size_t> by_claim;
  for (const Failure& f : failures) ++by_claim[f.claim_id];
  for (const auto& [id, n] : by_claim) os << "\n  " << id << ": " << n << " failing";
  return os.str();
}

ConformanceReport verify_lemmas(const PrimePower& ring, std::uint64_t s_max) {
  Recorder rec("lemmas p=" + std::to_string(ring.p) + " ell=" + std::to_string(ring.ell));
  const std::uint64_t p = ring.p;
  for (std::uint64_t s = 1; s <= s_max; ++s) {
    const std::vector<ReductionStep> steps = find_reductions(ring, s);
    if (steps.empty() && ring.ell != 1) continue;
    const PeriodicSequence bin = bin_seq(ring, s);
    const BinomialStats direct = binomial_stats(ring, s);
    const json in{{"p", p}, {"ell", ring.ell}, {"s", s}};

    if (ring.ell == 1) {
      bool ok = true;
      for (std::uint64_t n = 0; n < bin.period() && ok; ++n) ok = bin.nth(n) == lucas(n, s, p);
      rec.check(ok, "lucas.product", in, true, ok);
    }

    std::vector<PeriodicSequence> rhs;
    for (const ReductionStep& step : steps) {
      const json sj = step_json(step);
      const PeriodicSequence r = reduction_rhs(step);
      rec.check(nu_equiv(bin, r), "reduction.nu_equiv", sj, true, false);
      const BinomialStats carried = apply_reduction(step, binomial_stats(ring, step.s_prime));
      rec.check(carried == direct, "reduction.stats", sj, stats_json(direct), stats_json(carried));
      const bool shorter = step.s_prime < s && lead(step.s_prime, p) + 1 == step.k;
      rec.check(shorter, "reduction.digits", sj, true, shorter);
      rec.check(nu_equiv(r, bin) && nu_equiv(r, r), "nu_equiv.equivalence", sj, true, false);

      if (step.lemma == ReductionLemma::TopZeros) {
        const std::uint64_t enumerated = e_set(ring, s, step.m).size();
        rec.check(enumerated == step.e_size.value_or(0), "eset.size", sj, enumerated,
                  step.e_size.value_or(0));
      }
      if (ring.ell == 1) {
        const unsigned d = digits(s, p)[step.deleted_digit];
        const bool ok = d == 0 || d == p - 1;
        rec.check(ok, "lucas.digit_deletion", sj, "0 or p-1", d);
      }
      if (p == 2 && ring.ell >= 2 && step.lemma == ReductionLemma::AllZero) {
        bool found = false;
        for (const ReductionStep& other : steps) {
          if (other.lemma == ReductionLemma::TopZeros && other.s_prime == step.s_prime &&
              other.e_size.value_or(1) == 0) {
            found = apply_reduction(other, binomial_stats(ring, other.s_prime)) == carried;
          }
        }
        rec.check(found, "reduction.subsumption", sj, true, found);
      }

      // Every s agreeing with s above the window reduces the same way.
      const std::uint64_t tail =
          checked_pow(p, static_cast<unsigned>(static_cast<int>(step.k) - step.m) - ring.ell);
      const std::uint64_t s0 = s - s % tail;
      const std::uint64_t s0_prime = delete_digit(s0, p, step.deleted_digit);
      bool shift_ok = true;
      for (std::uint64_t i = 0; i < tail && shift_ok; ++i) {
        const std::vector<ReductionStep> moved = find_reductions(ring, s0 + i);
        const std::uint64_t expected = s0_prime + i;
        shift_ok = delete_digit(s0 + i, p, step.deleted_digit) == expected;
        // A leading-digit deletion is only admitted while s' keeps k digits.
        if (shift_ok && expected > 0 && lead(expected, p) + 1 == step.k) {
          shift_ok = std::any_of(moved.begin(), moved.end(), [&](const ReductionStep& o) {
            return o.lemma == step.lemma && o.m == step.m && o.s_prime == expected;
          });
        }
      }
      rec.check(shift_ok, "reduction.tail_shift", sj, true, shift_ok);
      rhs.push_back(r);
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
      for (std::size_t j = i + 1; j < steps.size(); ++j) {
        const json pair{step_json(steps[i]), step_json(steps[j])};
        rec.check(nu_equiv(rhs[i], rhs[j]), "nu_equiv.equivalence", pair, true, false);
        if (steps[i].lemma == steps[j].lemma) {
          const BinomialStats a = apply_reduction(steps[i], binomial_stats(ring, steps[i].s_prime));
          const BinomialStats b = apply_reduction(steps[j], binomial_stats(ring, steps[j].s_prime));
          rec.check(a == b, "reduction.overlap", pair, stats_json(a), stats_json(b));
        }
      }
    }
    const ReductionChain chain = reduce_chain(ring, s);
    rec.check(chain.result == direct, "chain.stats", in, stats_json(direct),
              stats_json(chain.result));
  }
  return rec.finish();
}

ConformanceReport verify_periods(const PrimePower& ring, std::uint64_t s_max,
                                 std::span<const Residue> c_set, std::uint64_t seed) {
  Recorder rec("periods mod " + std::to_string(ring.modulus()));
  const std::uint64_t q = ring.modulus();
  std::vector<Residue> constants(c_set.begin(), c_set.end());
  if (constants.empty()) {
    for (Residue c = 1; c < q; ++c) constants.push_back(c);
  }
  for (Residue c : constants) {
    PeriodicSequence g = PeriodicSequence::constant(q, c);
    for (std::uint64_t s = 0; s <= s_max; ++s) {
      const std::uint64_t predicted = predict_period_constant(c, s, ring);
      rec.check(g.period() == predicted, "period.constant", json{{"q", q}, {"c", c}, {"s", s}},
                predicted, g.period());
      const PeriodicSequence next = sigma(g);
      const std::uint64_t expected = additive_order(trace(g), q) * g.period();
      rec.check(next.period() == expected, "period.trace_order", json{{"q", q}, {"c", c}, {"s", s}},
                expected, next.period());
      g = next;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Residue> val(0, q - 1);
  std::uniform_int_distribution<std::size_t> idx(1, 5);
  const std::uint64_t span_s = std::min<std::uint64_t>(s_max, 24);
  for (int sample = 0; sample < 20; ++sample) {
    std::vector<Residue> e(idx(rng));
    for (auto& x : e) x = val(rng);
    if (e.back() == 0) e.back() = 1;
    const PeriodicSequence f = reconstruct_from_constants(q, e);
    const PeriodPrediction base = predict_period_nilpotent(f, 0);
    PeriodicSequence g = primitive(f, base.valid_from);
    for (std::uint64_t s = base.valid_from; s <= base.valid_from + span_s; ++s) {
      const PeriodPrediction pr = predict_period_nilpotent(f, s);
      rec.check(g.period() == pr.predicted_period, "period.nilpotent",
                json{{"f", values_json(f)}, {"s", s}}, pr.predicted_period, g.period());
      g = sigma(g);
    }
    for (std::uint64_t t = base.valid_from; t <= base.valid_from + 8; ++t) {
      const PeriodPrediction pr = predict_cumulative_period(f, t);
      const std::uint64_t measured = cumulative_primitive(f, t).period();
      rec.check(measured == pr.predicted_period, "period.cumulative",
                json{{"f", values_json(f)}, {"t", t}}, pr.predicted_period, measured);
    }
  }

  for (int sample = 0; sample < 20; ++sample) {
    const PeriodicSequence f = split(random_sequence(rng, q, 9)).idempotent_part;
    if (f.is_zero()) continue;
    const PeriodPrediction base = predict_period_idempotent(f, 1);
    const std::uint64_t from = std::max<std::uint64_t>(1, base.valid_from);
    PeriodicSequence g = primitive(f, from);
    for (std::uint64_t s = from; s <= from + span_s; ++s) {
      const PeriodPrediction pr = predict_period_idempotent(f, s);
      rec.check(g.period() == pr.predicted_period, "period.idempotent",
                json{{"f", values_json(f)}, {"s", s}}, pr.predicted_period, g.period());
      g = sigma(g);
    }
    PeriodicSequence h = f;
    for (std::uint64_t s = 1; s <= 6; ++s) {
      h = sigma(h);
      const PeriodicSequence formula = idem_primitive(f, s);
      rec.check(formula == h, "idempotent.formula", json{{"f", values_json(f)}, {"s", s}},
                values_json(h), values_json(formula));
    }
  }

  if (ring == PrimePower{2, 2}) {
    const std::vector<std::int64_t> raw = {1, 3, 0};
    const PeriodicSequence f = PeriodicSequence::from_values(4, raw);
    const std::uint64_t measured = primitive(f, 8).period();
    rec.check(measured == 48, "period.idempotent_example", json{{"f", values_json(f)}, {"s", 8}},
              48, measured);
    const PeriodicSequence v = vieru_seed();
    PeriodicSequence g = v;
    for (std::uint64_t s = 0; s <= std::min<std::uint64_t>(s_max, 128); ++s) {
      const std::uint64_t expected = std::uint64_t{1} << (2 + lead(s + 3, 2));
      rec.check(g.period() == expected, "period.vieru", json{{"s", s}}, expected, g.period());
      g = sigma(g);
    }
  }
  return rec.finish();
}

ConformanceReport verify_structure(std::span<const std::uint64_t> moduli, std::uint64_t samples,
                                   std::uint64_t seed) {
  Recorder rec("structure");
  std::mt19937_64 rng(seed);
  for (std::uint64_t m : moduli) {
    std::map<std::tuple<std::uint64_t, int, std::vector<Residue>>, PeriodicSequence> seen;
    for (std::uint64_t sample = 0; sample < samples; ++sample) {
      const PeriodicSequence f = random_sequence(rng, m, 12);
      const json in = values_json(f);
      const SplitResult r = split(f);
      const PeriodicSequence& fi = r.idempotent_part;
      const PeriodicSequence& fn = r.nilpotent_part;
      rec.check(fi + fn == f, "split.sum", in, values_json(f), values_json(fi + fn));
      rec.check(delta_pow(fi, r.idempotency_index) == fi, "split.idempotent", in, true, false);
      rec.check(delta_pow(fn, r.nilpotency_index).is_zero(), "split.nilpotent", in, true, false);
      const bool unique = split(fi).nilpotent_part.is_zero() && split(fn).idempotent_part.is_zero() &&
                          split(fi).idempotent_part == fi && split(fn).nilpotent_part == fn;
      rec.check(unique, "split.unique", in, true, unique);
      const std::size_t l = std::lcm(fi.period(), fn.period());
      rec.check(f.period() == l, "split.period_lcm", in, f.period(), l);
      const std::vector<PeriodicSequence> parts = p_parts(f);
      const PeriodicSequence back = crt_combine(parts);
      rec.check(back == f, "crt.roundtrip", in, values_json(f), values_json(back));

      for (const PeriodicSequence& g : parts) {
        const PrimePower ring = ModulusContext::make(g.modulus()).require_prime_power();
        const json gin = values_json(g);
        const SplitResult gr = split(g);
        const PeriodicSequence gi_expected = p_part(fi, ring.p, ring.ell);
        rec.check(gr.idempotent_part == gi_expected, "split.local", in,
                  values_json(gi_expected), values_json(gr.idempotent_part));
        for (const PeriodicSequence* x : {&g, &gr.idempotent_part, &gr.nilpotent_part}) {
          const bool by_period = is_nilpotent_by_period(*x);
          const bool by_orbit = classify(*x) == SequenceKind::Nilpotent;
          rec.check(by_period == by_orbit, "nilpotent.period", values_json(*x), by_orbit,
                    by_period);
        }
        const PeriodicSequence np = nilpotent_part_by_periodising(g);
        rec.check(np == gr.nilpotent_part, "periodised.nilpotent", gin,
                  values_json(gr.nilpotent_part), values_json(np));
        const std::vector<Residue> e = nilpotent_to_constants(gr.nilpotent_part);
        const PeriodicSequence rebuilt = reconstruct_from_constants(g.modulus(), e);
        rec.check(rebuilt == gr.nilpotent_part, "nilpotent.roundtrip", gin,
                  values_json(gr.nilpotent_part), values_json(rebuilt));
        rec.check(trace(gr.idempotent_part) == 0, "trace.idempotent",
                  values_json(gr.idempotent_part), 0, trace(gr.idempotent_part));
        if (trace(g) == 0 && g.period() % ring.p != 0) {
          const bool idem = classify(g) != SequenceKind::Mixed && gr.nilpotent_part.is_zero();
          rec.check(idem, "trace.criterion", gin, true, idem);
        }
        for (const PeriodicSequence* x : {&gr.idempotent_part, &gr.nilpotent_part}) {
          if (x->is_zero()) continue;
          const GeneratingVector gv = generating_vector(*x);
          auto key = std::make_tuple(x->modulus(), static_cast<int>(gv.kind), gv.entries);
          auto [it, inserted] = seen.emplace(key, *x);
          rec.check(inserted || it->second == *x, "genvec.injective", values_json(*x),
                    values_json(it->second), values_json(*x));
        }
        if (!gr.idempotent_part.is_zero()) {
          PeriodicSequence h = gr.idempotent_part;
          for (std::uint64_t s = 1; s <= 4; ++s) {
            h = sigma(h);
            const PeriodicSequence formula = idem_primitive(gr.idempotent_part, s);
            rec.check(formula == h, "idempotent.formula",
                      json{{"f", values_json(gr.idempotent_part)}, {"s", s}}, values_json(h),
                      values_json(formula));
          }
        }
      }
    }
  }
  if (std::find(moduli.begin(), moduli.end(), 3) != moduli.end()) {
    const std::vector<std::int64_t> a = {1, 1, 1, 0, 0, 2, 0, 0, 0, 2, 2, 2, 0, 0, 1, 0, 0, 0};
    const std::vector<std::int64_t> b = {0, 2, 0, 0, 1};
    for (const auto& [raw, index, period] :
         {std::tuple{a, 9u, 18u}, std::tuple{b, 80u, 5u}}) {
      const PeriodicSequence f = PeriodicSequence::from_values(3, raw);
      const SplitResult r = split(f);
      const bool ok = r.nilpotent_part.is_zero() && r.idempotency_index == index &&
                      f.period() == period;
      rec.check(ok, "idempotent.exotic", values_json(f),
                json{{"index", index}, {"period", period}},
                json{{"index", r.idempotency_index}, {"period", f.period()},
                     {"nilpotent_part_zero", r.nilpotent_part.is_zero()}});
    }
  }
  return rec.finish();
}

ConformanceReport verify_vieru(unsigned k_max) {
  Recorder rec("vieru");
  if (k_max < 5) throw UsageError("verify_vieru needs k_max >= 5");
  const PeriodicSequence v = vieru_seed();
  PeriodicSequence g = v;
  for (std::uint64_t s = 0; s <= 64; ++s) {
    const PeriodicSequence direct = vieru_primitive(s);
    rec.check(direct == g, "vieru.identity", json{{"s", s}}, values_json(g), values_json(direct));
    g = sigma(g);
  }

  const std::array<std::uint64_t, 32> regenerated = regenerate_z5();
  for (std::size_t i = 0; i < regenerated.size(); ++i) {
    rec.check(regenerated[i] == kPrintedZ5[i], "vieru.z5_printed", json{{"s", 32 + i}},
              kPrintedZ5[i], regenerated[i]);
  }

  VieruRecursion recursion(VieruRecursion::Base::Oracle);
  std::map<VieruCase, std::uint64_t> hits;
  const std::uint64_t end = std::uint64_t{1} << (k_max + 1);
  std::vector<std::uint64_t> oracle(end + 1, 0);
  for (std::uint64_t s = 32; s < end; ++s) oracle[s] = z_oracle(s);
  for (std::uint64_t s = 64; s < end; ++s) {
    const CaseInfo c = classify_vieru_case(s);
    ++hits[c.kind];
    const std::uint64_t z = recursion.z(s);
    rec.check(z == oracle[s], "vieru.recursion", json{{"s", s}, {"case", to_string(c.kind)}},
              oracle[s], z);
    if (c.kind == VieruCase::C) {
      const std::uint64_t half = std::uint64_t{1} << (c.k - 1);
      const std::uint64_t z_c = 2 * oracle[s - half] - d_closed(c.k, s);
      rec.check(z_c == oracle[s], "vieru.case_c", json{{"s", s}}, oracle[s], z_c);
    }
  }
  for (VieruCase c : {VieruCase::A, VieruCase::B, VieruCase::C, VieruCase::D, VieruCase::E,
                      VieruCase::F}) {
    rec.check(hits[c] >= 4, "vieru.case_coverage", json{{"case", to_string(c)}}, ">= 4", hits[c]);
  }

  const PrimePower z4{2, 2};
  for (unsigned k = 6; k <= std::min(k_max, 7u); ++k) {
    const std::uint64_t K = std::uint64_t{1} << k;
    const std::uint64_t s_prime = (2 * K - 3) - K;
    const PeriodicSequence mix = scalar_mul(2, bin_seq(z4, s_prime + 4)) +
                                 scalar_mul(3, bin_seq(z4, s_prime + 3));
    const auto zeros =
        static_cast<std::uint64_t>(std::count(mix.values().begin(), mix.values().end(), 0));
    rec.check(zeros == (std::uint64_t{32} << (k - 5)), "vieru.f_intermediate", json{{"k", k}},
              std::uint64_t{32} << (k - 5), zeros);
    const std::uint64_t s = 2 * K - 4;
    const std::uint64_t pv = vieru_primitive(s).period();
    const std::uint64_t pb = bin_seq(z4, s + 4).period();
    rec.check(pv == 4 * K && pb == 8 * K, "vieru.f_period", json{{"k", k}, {"s", s}},
              json{{"v", 4 * K}, {"bin", 8 * K}}, json{{"v", pv}, {"bin", pb}});
  }

  const std::vector<std::uint64_t> d5 = d_recursive(5);
  rec.check(d5 == std::vector<std::uint64_t>{4, 8, 4, 4}, "d.base", json{{"k", 5}},
            std::vector<std::uint64_t>{4, 8, 4, 4}, d5);
  for (unsigned k = 5; k <= std::max(12u, k_max); ++k) {
    const std::vector<std::uint64_t> rec_form = d_recursive(k);
    for (std::uint64_t s = d_range_begin(k); s < d_range_end(k); ++s) {
      const std::uint64_t a = d_closed(k, s);
      const std::uint64_t b = rec_form[s - d_range_begin(k)];
      const std::uint64_t c = d_hamming(k, s);
      const std::uint64_t d = d_a063787(k, s);
      rec.check(a == b && a == c && a == d, "d.forms", json{{"k", k}, {"s", s}}, a,
                json{{"recursive", b}, {"hamming", c}, {"a063787", d}});
      if (k <= std::min(k_max, 9u)) {
        const std::uint64_t e = d_from_esets(k, s);
        rec.check(e == a, "d.esets", json{{"k", k}, {"s", s}}, a, e);
      }
    }
  }
  for (unsigned h = 2; h <= 12; ++h) {
    const std::vector<unsigned> w = w_sequence(h);
    bool ok = w.size() == (std::size_t{1} << (h + 1)) - 4;
    for (std::size_t i = 0; ok && i < w.size(); ++i) ok = w[i] == hamming_weight(i + 1);
    rec.check(ok, "w.hamming", json{{"h", h}}, true, ok);
  }
  for (unsigned k = 5; k <= 10; ++k) {
    for (std::uint64_t sum = 4; sum < (std::uint64_t{1} << (k - 2)); ++sum) {
      if (d_range_begin(k) + sum - 4 >= d_range_end(k)) break;
      std::vector<unsigned> ex;
      for (int t = 62; t >= 0; --t) {
        if ((sum >> t) & 1) ex.push_back(static_cast<unsigned>(t));
      }
      const bool ok = a_relation_check(k, ex);
      rec.check(ok, "a.relation", json{{"k", k}, {"exponents", ex}}, true, ok);
    }
  }
  return rec.finish();
}

}  // namespace modseq
