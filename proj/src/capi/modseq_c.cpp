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

#include "modseq/modseq.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "modseq/binomial.hpp"
#include "modseq/record.hpp"
#include "modseq/sequence.hpp"
#include "modseq/structure.hpp"
#include "modseq/verify.hpp"
#include "modseq/vieru.hpp"

struct modseq_seq {
  modseq::PeriodicSequence value;
};

struct modseq_seq_list {
  std::vector<modseq_seq> items;
};

struct modseq_chain {
  modseq::ReductionChain value;
};

struct modseq_vieru {
  modseq::VieruRecursion value;
};

struct modseq_report {
  modseq::ConformanceReport value;
};

namespace {

thread_local std::string g_last_error;

struct BufferTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
modseq_status guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return MODSEQ_OK;
  } catch (const BufferTooSmall& e) {
    g_last_error = e.what();
    return MODSEQ_ERR_BUFFER;
  } catch (const modseq::UsageError& e) {
    g_last_error = e.what();
    return MODSEQ_ERR_USAGE;
  } catch (const modseq::ResourceError& e) {
    g_last_error = e.what();
    return MODSEQ_ERR_RESOURCE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MODSEQ_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MODSEQ_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw modseq::UsageError(std::string(name) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

modseq::Limits to_limits(const modseq_limits* l) {
  modseq::Limits out;
  if (l != nullptr) {
    out.max_order = l->max_order;
    out.max_length = static_cast<std::size_t>(l->max_length);
  }
  return out;
}

modseq_seq* wrap(modseq::PeriodicSequence f) { return new modseq_seq{std::move(f)}; }

// Copies into a caller buffer, reporting the needed size first.
template <typename T, typename Range>
void copy_out(const Range& src, T* buf, std::size_t cap, std::size_t* count) {
  require(count, "count");
  *count = std::size(src);
  if (std::size(src) > cap) {
    throw BufferTooSmall("buffer holds " + std::to_string(cap) + " entries, " +
                            std::to_string(std::size(src)) + " needed");
  }
  if (std::size(src) > 0) require(buf, "buf");
  std::size_t i = 0;
  for (const auto& x : src) buf[i++] = static_cast<T>(x);
}

modseq::PrimePower ring_of(std::uint64_t p, unsigned ell) {
  return modseq::ModulusContext::prime_power(p, ell).require_prime_power();
}

void fill_stats(const modseq::BinomialStats& in, modseq_stats* out) {
  std::memset(out, 0, sizeof(*out));
  out->s = in.s;
  out->p = in.p;
  out->ell = in.ell;
  out->period = in.period;
  out->zeros = in.zeros;
  for (std::size_t i = 0; i < in.pi.size() && i < MODSEQ_MAX_ELL; ++i) out->pi[i] = in.pi[i];
}

modseq::BinomialStats read_stats(const modseq_stats* in) {
  modseq::BinomialStats out;
  out.s = in->s;
  out.p = in->p;
  out.ell = in->ell;
  out.period = in->period;
  out.zeros = in->zeros;
  if (in->ell > MODSEQ_MAX_ELL) throw modseq::UsageError("ell exceeds MODSEQ_MAX_ELL");
  out.pi.assign(in->pi, in->pi + in->ell);
  return out;
}

void fill_step(const modseq::ReductionStep& st, modseq_step* out) {
  out->lemma = static_cast<int>(st.lemma);
  out->m = st.m;
  out->k = st.k;
  out->s = st.s;
  out->s_prime = st.s_prime;
  out->deleted_digit = st.deleted_digit;
  out->op = static_cast<int>(st.op);
  out->scale_exponent = st.scale_exponent;
  out->has_e_size = st.e_size.has_value();
  out->e_size = st.e_size.value_or(0);
}

modseq::ReductionStep read_step(const modseq::PrimePower& ring, const modseq_step* in) {
  if (in->lemma < 0 || in->lemma > 2) throw modseq::UsageError("unknown lemma");
  modseq::ReductionStep st;
  st.ring = ring;
  st.lemma = static_cast<modseq::ReductionLemma>(in->lemma);
  st.m = in->m;
  st.k = in->k;
  st.s = in->s;
  st.s_prime = in->s_prime;
  st.deleted_digit = in->deleted_digit;
  st.op = in->op == MODSEQ_OP_ALT ? modseq::ReductionOperator::Alt
                                  : modseq::ReductionOperator::Double;
  st.scale_exponent = in->scale_exponent;
  if (in->has_e_size) st.e_size = in->e_size;
  return st;
}

void fill_prediction(const modseq::PeriodPrediction& in, modseq_prediction* out) {
  out->predicted_period = in.predicted_period;
  out->valid_from = in.valid_from;
  out->leading_index = in.leading_index;
  out->leading_value = in.leading_value;
  out->kind = static_cast<int>(in.kind);
  out->advisory = in.advisory ? 1 : 0;
}

}  // namespace

extern "C" {

const char* modseq_version(void) { return "0.1.0"; }

const char* modseq_last_error(void) { return g_last_error.c_str(); }

const char* modseq_status_name(modseq_status status) {
  switch (status) {
    case MODSEQ_OK: return "ok";
    case MODSEQ_ERR_USAGE: return "usage error";
    case MODSEQ_ERR_RESOURCE: return "resource limit";
    case MODSEQ_ERR_BUFFER: return "buffer too small";
    case MODSEQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void modseq_string_free(char* s) { std::free(s); }

modseq_limits modseq_default_limits(void) {
  const modseq::Limits l;
  return modseq_limits{l.max_order, l.max_length};
}

modseq_status modseq_valuation(int64_t x, uint64_t p, int* infinite, unsigned* v) {
  return guard([&] {
    require(infinite, "infinite");
    require(v, "v");
    if (!modseq::is_prime(p)) throw modseq::UsageError("p must be prime");
    const modseq::Valuation val = modseq::valuation(x, p);
    *infinite = val.is_infinite();
    *v = val.is_finite() ? val.value() : 0;
  });
}

modseq_status modseq_kummer_valuation(uint64_t n, uint64_t s, uint64_t p, unsigned* borrows) {
  return guard([&] {
    require(borrows, "borrows");
    *borrows = modseq::kummer_valuation(n, s, p).value();
  });
}

modseq_status modseq_binom_mod(uint64_t n, uint64_t s, uint64_t m, int exact, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    const modseq::ModulusContext ctx = modseq::ModulusContext::make(m);
    *out = exact ? modseq::binom_mod_exact(n, s, ctx) : modseq::binom_mod(n, s, ctx);
  });
}

modseq_status modseq_digits(uint64_t n, uint64_t p, unsigned* buf, size_t cap, size_t* count) {
  return guard([&] {
    const modseq::DigitVector d = modseq::digits(n, p);
    copy_out(d.digits(), buf, cap, count);
  });
}

modseq_status modseq_digits_string(uint64_t n, uint64_t p, char** out) {
  return guard([&] {
    require(out, "out");
    *out = dup_string(modseq::digits(n, p).to_string());
  });
}

modseq_status modseq_prime_power(uint64_t m, uint64_t* p, unsigned* ell) {
  return guard([&] {
    require(p, "p");
    require(ell, "ell");
    const modseq::PrimePower pp = modseq::ModulusContext::make(m).require_prime_power();
    *p = pp.p;
    *ell = pp.ell;
  });
}

modseq_status modseq_seq_from_values(uint64_t modulus, const int64_t* values, size_t count,
                                     modseq_seq** out) {
  return guard([&] {
    require(out, "out");
    if (count > 0) require(values, "values");
    *out = wrap(modseq::PeriodicSequence::from_values(
        modulus, std::span<const std::int64_t>(values, count)));
  });
}

modseq_status modseq_seq_from_record(const char* record, modseq_seq** out) {
  return guard([&] {
    require(record, "record");
    require(out, "out");
    *out = wrap(modseq::parse_sequence_record(record));
  });
}

modseq_seq* modseq_seq_clone(const modseq_seq* f) { return f ? new modseq_seq(*f) : nullptr; }

void modseq_seq_free(modseq_seq* f) { delete f; }

uint64_t modseq_seq_modulus(const modseq_seq* f) { return f ? f->value.modulus() : 0; }

size_t modseq_seq_period(const modseq_seq* f) { return f ? f->value.period() : 0; }

int modseq_seq_equal(const modseq_seq* f, const modseq_seq* g) {
  return f && g && f->value == g->value;
}

int modseq_seq_is_zero(const modseq_seq* f) { return f && f->value.is_zero(); }

modseq_status modseq_seq_values(const modseq_seq* f, uint64_t* buf, size_t cap, size_t* count) {
  return guard([&] {
    require(f, "f");
    copy_out(f->value.values(), buf, cap, count);
  });
}

modseq_status modseq_seq_to_record(const modseq_seq* f, char** out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    *out = dup_string(modseq::to_record(f->value));
  });
}

modseq_status modseq_seq_to_string(const modseq_seq* f, char** out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    *out = dup_string(f->value.to_string());
  });
}

modseq_status modseq_seq_shift(const modseq_seq* f, uint64_t j, modseq_seq** out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    *out = wrap(modseq::shift(f->value, j));
  });
}

modseq_status modseq_seq_delta(const modseq_seq* f, modseq_seq** out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    *out = wrap(modseq::delta(f->value));
  });
}

modseq_status modseq_seq_sigma(const modseq_seq* f, uint64_t c, modseq_seq** out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    *out = wrap(modseq::sigma(f->value, c));
  });
}

modseq_status modseq_seq_primitive(const modseq_seq* f, uint64_t s, const modseq_limits* limits,
                                   modseq_seq** out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    *out = wrap(modseq::primitive(f->value, s, to_limits(limits)));
  });
}

modseq_status modseq_seq_add(const modseq_seq* f, const modseq_seq* g, modseq_seq** out) {
  return guard([&] {
    require(f, "f");
    require(g, "g");
    require(out, "out");
    *out = wrap(f->value + g->value);
  });
}

modseq_status modseq_seq_scalar_mul(uint64_t c, const modseq_seq* f, modseq_seq** out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    *out = wrap(modseq::scalar_mul(c, f->value));
  });
}

uint64_t modseq_seq_trace(const modseq_seq* f) { return f ? modseq::trace(f->value) : 0; }

modseq_status modseq_records_parse(const char* text, modseq_seq_list** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    std::istringstream in(text);
    auto list = std::make_unique<modseq_seq_list>();
    for (auto& f : modseq::parse_sequence_records(in)) list->items.push_back({std::move(f)});
    *out = list.release();
  });
}

modseq_status modseq_seq_p_parts(const modseq_seq* f, modseq_seq_list** out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    auto list = std::make_unique<modseq_seq_list>();
    for (auto& g : modseq::p_parts(f->value)) list->items.push_back({std::move(g)});
    *out = list.release();
  });
}

modseq_seq_list* modseq_seq_list_new(void) { return new modseq_seq_list(); }

modseq_status modseq_seq_list_push(modseq_seq_list* list, const modseq_seq* f) {
  return guard([&] {
    require(list, "list");
    require(f, "f");
    list->items.push_back(*f);
  });
}

size_t modseq_seq_list_size(const modseq_seq_list* list) { return list ? list->items.size() : 0; }

const modseq_seq* modseq_seq_list_at(const modseq_seq_list* list, size_t i) {
  return list && i < list->items.size() ? &list->items[i] : nullptr;
}

void modseq_seq_list_free(modseq_seq_list* list) { delete list; }

modseq_status modseq_seq_crt(const modseq_seq_list* parts, modseq_seq** out) {
  return guard([&] {
    require(parts, "parts");
    require(out, "out");
    std::vector<modseq::PeriodicSequence> v;
    for (const auto& item : parts->items) v.push_back(item.value);
    *out = wrap(modseq::crt_combine(v));
  });
}

const char* modseq_kind_name(int kind) {
  if (kind < 0 || kind > 2) return "unknown";
  return modseq::to_string(static_cast<modseq::SequenceKind>(kind));
}

modseq_status modseq_split(const modseq_seq* f, modseq_split_info* info, modseq_seq** idempotent,
                           modseq_seq** nilpotent) {
  return guard([&] {
    require(f, "f");
    const modseq::SplitResult r = modseq::split(f->value);
    if (info != nullptr) {
      *info = modseq_split_info{r.orbit.u, r.orbit.m, r.orbit.t, r.orbit.kbar,
                                r.idempotency_index, r.nilpotency_index};
    }
    if (idempotent != nullptr) *idempotent = wrap(r.idempotent_part);
    if (nilpotent != nullptr) *nilpotent = wrap(r.nilpotent_part);
  });
}

modseq_status modseq_classify(const modseq_seq* f, int* kind) {
  return guard([&] {
    require(f, "f");
    require(kind, "kind");
    *kind = static_cast<int>(modseq::classify(f->value));
  });
}

modseq_status modseq_generating_vector(const modseq_seq* f, int* kind, uint64_t* buf, size_t cap,
                                       size_t* count, int64_t* leading) {
  return guard([&] {
    require(f, "f");
    require(kind, "kind");
    require(leading, "leading");
    const modseq::GeneratingVector gv = modseq::generating_vector(f->value);
    *kind = static_cast<int>(gv.kind);
    *leading = gv.leading_index ? static_cast<int64_t>(*gv.leading_index) : -1;
    copy_out(gv.entries, buf, cap, count);
  });
}

modseq_status modseq_predict_period(const modseq_seq* f, uint64_t s, modseq_prediction* out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    fill_prediction(modseq::predict_period(f->value, s), out);
  });
}

modseq_status modseq_predict_period_constant(uint64_t p, unsigned ell, uint64_t c, uint64_t s,
                                             uint64_t* period) {
  return guard([&] {
    require(period, "period");
    const modseq::PrimePower ring = ring_of(p, ell);
    *period = modseq::predict_period_constant(c % ring.modulus(), s, ring);
  });
}

modseq_status modseq_predict_period_composite(const modseq_seq* f, uint64_t s,
                                              modseq_part_prediction* parts, size_t cap,
                                              size_t* count, uint64_t* period, int* advisory) {
  return guard([&] {
    require(f, "f");
    require(period, "period");
    require(advisory, "advisory");
    const modseq::CompositePrediction cp = modseq::predict_period_composite(f->value, s);
    std::vector<modseq_part_prediction> out;
    for (const auto& part : cp.parts) {
      modseq_part_prediction pp{};
      pp.p = part.ring.p;
      pp.ell = part.ring.ell;
      pp.kind = static_cast<int>(part.kind);
      pp.has_prediction = part.prediction.has_value();
      if (part.prediction) fill_prediction(*part.prediction, &pp.prediction);
      out.push_back(pp);
    }
    *period = cp.period.value_or(0);
    *advisory = cp.advisory;
    copy_out(out, parts, cap, count);
  });
}

const char* modseq_lemma_name(int lemma) {
  if (lemma < 0 || lemma > 2) return "unknown";
  return modseq::to_string(static_cast<modseq::ReductionLemma>(lemma));
}

const char* modseq_operator_name(int op) {
  return op == MODSEQ_OP_ALT ? "Alt" : op == MODSEQ_OP_DOUBLE ? "Double" : "unknown";
}

modseq_status modseq_bin_seq(uint64_t p, unsigned ell, uint64_t s, const modseq_limits* limits,
                             modseq_seq** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(modseq::bin_seq(ring_of(p, ell), s, to_limits(limits)));
  });
}

modseq_status modseq_double_seq(const modseq_seq* f, uint64_t q, unsigned t, modseq_seq** out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    *out = wrap(modseq::double_seq(f->value, q, t));
  });
}

modseq_status modseq_alt_seq(const modseq_seq* f, uint64_t q, unsigned t, modseq_seq** out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    *out = wrap(modseq::alt_seq(f->value, q, t));
  });
}

modseq_status modseq_nu_equiv(const modseq_seq* f, const modseq_seq* g, int* equivalent) {
  return guard([&] {
    require(f, "f");
    require(g, "g");
    require(equivalent, "equivalent");
    *equivalent = modseq::nu_equiv(f->value, g->value);
  });
}

modseq_status modseq_seq_stats(const modseq_seq* f, modseq_stats* out) {
  return guard([&] {
    require(f, "f");
    require(out, "out");
    const modseq::PrimePower ring =
        modseq::ModulusContext::make(f->value.modulus()).require_prime_power();
    fill_stats(modseq::stats(f->value, ring), out);
  });
}

modseq_status modseq_binom_stats(uint64_t p, unsigned ell, uint64_t s, const modseq_limits* limits,
                                 modseq_stats* out) {
  return guard([&] {
    require(out, "out");
    fill_stats(modseq::binomial_stats(ring_of(p, ell), s, to_limits(limits)), out);
  });
}

modseq_status modseq_find_reductions(uint64_t p, unsigned ell, uint64_t s, modseq_step* buf,
                                     size_t cap, size_t* count) {
  return guard([&] {
    std::vector<modseq_step> out;
    for (const auto& st : modseq::find_reductions(ring_of(p, ell), s)) {
      modseq_step c{};
      fill_step(st, &c);
      out.push_back(c);
    }
    copy_out(out, buf, cap, count);
  });
}

modseq_status modseq_apply_reduction(uint64_t p, unsigned ell, const modseq_step* step,
                                     const modseq_stats* reduced, modseq_stats* out) {
  return guard([&] {
    require(step, "step");
    require(reduced, "reduced");
    require(out, "out");
    const modseq::PrimePower ring = ring_of(p, ell);
    fill_stats(modseq::apply_reduction(read_step(ring, step), read_stats(reduced)), out);
  });
}

modseq_status modseq_reduce_chain(uint64_t p, unsigned ell, uint64_t s,
                                  const modseq_limits* limits, modseq_chain** out) {
  return guard([&] {
    require(out, "out");
    *out = new modseq_chain{modseq::reduce_chain(ring_of(p, ell), s, to_limits(limits))};
  });
}

size_t modseq_chain_length(const modseq_chain* chain) {
  return chain ? chain->value.steps.size() : 0;
}

modseq_status modseq_chain_step(const modseq_chain* chain, size_t i, modseq_step* out) {
  return guard([&] {
    require(chain, "chain");
    require(out, "out");
    if (i >= chain->value.steps.size()) throw modseq::UsageError("step index out of range");
    fill_step(chain->value.steps[i], out);
  });
}

uint64_t modseq_chain_s_star(const modseq_chain* chain) { return chain ? chain->value.s_star : 0; }

void modseq_chain_base(const modseq_chain* chain, modseq_stats* out) {
  if (chain && out) fill_stats(chain->value.base, out);
}

void modseq_chain_result(const modseq_chain* chain, modseq_stats* out) {
  if (chain && out) fill_stats(chain->value.result, out);
}

void modseq_chain_free(modseq_chain* chain) { delete chain; }

modseq_status modseq_e_size(uint64_t p, unsigned ell, uint64_t s, int m, uint64_t* size) {
  return guard([&] {
    require(size, "size");
    *size = modseq::e_size(ring_of(p, ell), s, m);
  });
}

modseq_status modseq_e_set_count(uint64_t p, unsigned ell, uint64_t s, int m, uint64_t* size) {
  return guard([&] {
    require(size, "size");
    *size = modseq::e_set(ring_of(p, ell), s, m).size();
  });
}

modseq_status modseq_chi_e(uint64_t p, unsigned ell, uint64_t s, int m, modseq_seq** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(modseq::chi_e(ring_of(p, ell), s, m));
  });
}

modseq_status modseq_vieru_new(int base, modseq_vieru** out) {
  return guard([&] {
    require(out, "out");
    if (base != MODSEQ_BASE_ORACLE && base != MODSEQ_BASE_PRINTED) {
      throw modseq::UsageError("unknown base block selector");
    }
    *out = new modseq_vieru{modseq::VieruRecursion(base == MODSEQ_BASE_PRINTED
                                                       ? modseq::VieruRecursion::Base::Printed
                                                       : modseq::VieruRecursion::Base::Oracle)};
  });
}

modseq_status modseq_vieru_z(modseq_vieru* ctx, uint64_t s, uint64_t* z) {
  return guard([&] {
    require(ctx, "ctx");
    require(z, "z");
    *z = ctx->value.z(s);
  });
}

void modseq_vieru_free(modseq_vieru* ctx) { delete ctx; }

modseq_status modseq_vieru_primitive(uint64_t s, modseq_seq** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(modseq::vieru_primitive(s));
  });
}

modseq_status modseq_vieru_z_oracle(uint64_t s, uint64_t* z) {
  return guard([&] {
    require(z, "z");
    *z = modseq::z_oracle(s);
  });
}

void modseq_vieru_printed_z5(uint64_t out[32]) {
  if (out) std::copy(modseq::kPrintedZ5.begin(), modseq::kPrintedZ5.end(), out);
}

modseq_status modseq_vieru_case(uint64_t s, int* kind, unsigned* k, unsigned* i) {
  return guard([&] {
    require(kind, "kind");
    require(k, "k");
    require(i, "i");
    const modseq::CaseInfo c = modseq::classify_vieru_case(s);
    *kind = static_cast<int>(c.kind);
    *k = c.k;
    *i = c.i;
  });
}

const char* modseq_vieru_case_name(int kind) {
  if (kind < 0 || kind > 5) return "?";
  return modseq::to_string(static_cast<modseq::VieruCase>(kind));
}

uint64_t modseq_d_range_begin(unsigned k) { return k >= 5 && k <= 60 ? modseq::d_range_begin(k) : 0; }

uint64_t modseq_d_range_end(unsigned k) { return k >= 5 && k <= 60 ? modseq::d_range_end(k) : 0; }

modseq_status modseq_d_closed(unsigned k, uint64_t s, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = modseq::d_closed(k, s);
  });
}

modseq_status modseq_d_hamming(unsigned k, uint64_t s, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = modseq::d_hamming(k, s);
  });
}

modseq_status modseq_d_a_form(unsigned k, uint64_t s, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = modseq::d_a063787(k, s);
  });
}

modseq_status modseq_d_from_esets(unsigned k, uint64_t s, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = modseq::d_from_esets(k, s);
  });
}

modseq_status modseq_d_recursive(unsigned k, uint64_t* buf, size_t cap, size_t* count) {
  return guard([&] {
    if (k > 40) throw modseq::ResourceError("d_k length too large");
    copy_out(modseq::d_recursive(k), buf, cap, count);
  });
}

modseq_status modseq_w_sequence(unsigned h, unsigned* buf, size_t cap, size_t* count) {
  return guard([&] {
    if (h > 40) throw modseq::ResourceError("w_h length too large");
    copy_out(modseq::w_sequence(h), buf, cap, count);
  });
}

modseq_status modseq_a_relation_check(unsigned k, const unsigned* exponents, size_t count,
                                      int* holds) {
  return guard([&] {
    require(holds, "holds");
    if (count > 0) require(exponents, "exponents");
    *holds = modseq::a_relation_check(k, std::span<const unsigned>(exponents, count));
  });
}

uint64_t modseq_default_seed(void) { return modseq::kDefaultSeed; }

modseq_status modseq_verify_lemmas(uint64_t p, unsigned ell, uint64_t s_max, modseq_report** out) {
  return guard([&] {
    require(out, "out");
    *out = new modseq_report{modseq::verify_lemmas(ring_of(p, ell), s_max)};
  });
}

modseq_status modseq_verify_periods(uint64_t p, unsigned ell, uint64_t s_max,
                                    const uint64_t* c_set, size_t c_count, uint64_t seed,
                                    modseq_report** out) {
  return guard([&] {
    require(out, "out");
    if (c_count > 0) require(c_set, "c_set");
    *out = new modseq_report{modseq::verify_periods(
        ring_of(p, ell), s_max, std::span<const modseq::Residue>(c_set, c_count), seed)};
  });
}

modseq_status modseq_verify_structure(const uint64_t* moduli, size_t count, uint64_t samples,
                                      uint64_t seed, modseq_report** out) {
  return guard([&] {
    require(out, "out");
    if (count > 0) require(moduli, "moduli");
    *out = new modseq_report{
        modseq::verify_structure(std::span<const std::uint64_t>(moduli, count), samples, seed)};
  });
}

modseq_status modseq_verify_vieru(unsigned k_max, modseq_report** out) {
  return guard([&] {
    require(out, "out");
    if (k_max > 14) throw modseq::ResourceError("k_max above 14 is out of desk scale");
    *out = new modseq_report{modseq::verify_vieru(k_max)};
  });
}

int modseq_report_ok(const modseq_report* r) { return r && r->value.ok(); }

uint64_t modseq_report_instances(const modseq_report* r) {
  return r ? r->value.instance_count : 0;
}

uint64_t modseq_report_failure_count(const modseq_report* r) {
  return r ? r->value.failures.size() : 0;
}

double modseq_report_wall_seconds(const modseq_report* r) { return r ? r->value.wall_seconds : 0; }

modseq_status modseq_report_suite(const modseq_report* r, char** out) {
  return guard([&] {
    require(r, "r");
    require(out, "out");
    *out = dup_string(r->value.suite);
  });
}

modseq_status modseq_report_records(const modseq_report* r, char** out) {
  return guard([&] {
    require(r, "r");
    require(out, "out");
    *out = dup_string(r->value.to_records());
  });
}

modseq_status modseq_report_summary(const modseq_report* r, char** out) {
  return guard([&] {
    require(r, "r");
    require(out, "out");
    *out = dup_string(r->value.summary());
  });
}

void modseq_report_free(modseq_report* r) { delete r; }

}  // extern "C"
