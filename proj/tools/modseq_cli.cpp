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

// Command-line front end. Talks to libmodseq through its C interface only.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "modseq/modseq.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CliError : std::runtime_error {
  CliError(modseq_status st, const std::string& what) : std::runtime_error(what), status(st) {}
  modseq_status status;
};

void check(modseq_status st) {
  if (st != MODSEQ_OK) throw CliError(st, modseq_last_error());
}

[[noreturn]] void usage(const std::string& msg) { throw CliError(MODSEQ_ERR_USAGE, msg); }

struct SeqDeleter {
  void operator()(modseq_seq* f) const { modseq_seq_free(f); }
};
struct ListDeleter {
  void operator()(modseq_seq_list* l) const { modseq_seq_list_free(l); }
};
struct ChainDeleter {
  void operator()(modseq_chain* c) const { modseq_chain_free(c); }
};
struct VieruDeleter {
  void operator()(modseq_vieru* v) const { modseq_vieru_free(v); }
};
struct ReportDeleter {
  void operator()(modseq_report* r) const { modseq_report_free(r); }
};
using Seq = std::unique_ptr<modseq_seq, SeqDeleter>;
using SeqList = std::unique_ptr<modseq_seq_list, ListDeleter>;
using Chain = std::unique_ptr<modseq_chain, ChainDeleter>;
using Vieru = std::unique_ptr<modseq_vieru, VieruDeleter>;
using Report = std::unique_ptr<modseq_report, ReportDeleter>;

std::string take_string(char* s) {
  std::string out(s ? s : "");
  modseq_string_free(s);
  return out;
}

// ---- option state shared by the subcommands ----

enum class Format { Human, Csv, Records };

struct Options {
  std::string format = "human";
  std::vector<std::uint64_t> mods;
  std::vector<std::string> values;
  std::string file;
  std::uint64_t p = 2;
  unsigned ell = 2;
  std::string s_spec;
  unsigned k = 6;
  std::uint64_t seed = modseq_default_seed();
  bool verify = false;
  std::optional<std::uint64_t> cap;
  std::string base = "oracle";
  std::string via = "direct";
  std::string suite = "all";

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "records") return Format::Records;
    return Format::Human;
  }
  modseq_limits limits() const {
    modseq_limits l = modseq_default_limits();
    if (cap) l.max_length = *cap;
    return l;
  }
};

// ---- input parsing ----

std::vector<std::int64_t> parse_values(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '[' || c == ']' || c == ',' || c == ';') ? ' ' : c;
  std::istringstream in(cleaned);
  std::vector<std::int64_t> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      usage("--values: entry " + std::to_string(out.size() + 1) + " ('" + tok +
            "') is not an integer");
    }
    out.push_back(v);
  }
  if (out.empty()) usage("--values: empty list");
  return out;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) usage("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// All sequences named on the command line, in order.
std::vector<Seq> input_sequences(const Options& o) {
  std::vector<Seq> out;
  if (!o.values.empty() || !o.mods.empty()) {
    if (o.values.size() != o.mods.size()) {
      usage("each --values needs a matching --mod (" + std::to_string(o.mods.size()) +
            " given for " + std::to_string(o.values.size()) + " lists)");
    }
    for (std::size_t i = 0; i < o.values.size(); ++i) {
      const auto v = parse_values(o.values[i]);
      modseq_seq* f = nullptr;
      check(modseq_seq_from_values(o.mods[i], v.data(), v.size(), &f));
      out.emplace_back(f);
    }
  }
  if (!o.file.empty() || out.empty()) {
    const std::string text = slurp(o.file.empty() ? "-" : o.file);
    modseq_seq_list* list = nullptr;
    check(modseq_records_parse(text.c_str(), &list));
    SeqList owned(list);
    for (std::size_t i = 0; i < modseq_seq_list_size(list); ++i) {
      out.emplace_back(modseq_seq_clone(modseq_seq_list_at(list, i)));
    }
  }
  if (out.empty()) usage("no sequence given (use --mod/--values, --file or standard input)");
  return out;
}

Seq single_sequence(const Options& o) {
  auto all = input_sequences(o);
  if (all.size() != 1) usage("expected one sequence, got " + std::to_string(all.size()));
  return std::move(all.front());
}

// "27", "27,31", "1024:2048" (half-open) or any comma list of these.
std::vector<std::uint64_t> parse_s_list(const std::string& spec) {
  if (spec.empty()) usage("--s is required");
  std::vector<std::uint64_t> out;
  std::stringstream ss(spec);
  std::string item;
  auto num = [&](const std::string& t) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      if (!t.empty() && t[0] == '-') throw std::invalid_argument("negative");
      v = std::stoull(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) usage("--s: '" + t + "' is not a natural number");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(num(item));
      continue;
    }
    const std::uint64_t a = num(item.substr(0, colon));
    const std::uint64_t b = num(item.substr(colon + 1));
    if (b <= a) usage("--s: empty range '" + item + "'");
    if (b - a > (1u << 20)) usage("--s: range '" + item + "' is too long");
    for (std::uint64_t s = a; s < b; ++s) out.push_back(s);
  }
  return out;
}

std::uint64_t parse_single_s(const std::string& spec) {
  const auto v = parse_s_list(spec);
  if (v.size() != 1) usage("--s takes a single value here");
  return v.front();
}

// ---- sequence helpers ----

std::vector<std::uint64_t> values_of(const modseq_seq* f) {
  std::vector<std::uint64_t> out(modseq_seq_period(f));
  std::size_t n = 0;
  check(modseq_seq_values(f, out.data(), out.size(), &n));
  return out;
}

std::string bracket(const std::vector<std::uint64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

std::string spaced(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string seq_string(const modseq_seq* f) {
  char* s = nullptr;
  check(modseq_seq_to_string(f, &s));
  return take_string(s);
}

json seq_record(const modseq_seq* f) {
  return json{{"modulus", modseq_seq_modulus(f)}, {"period", values_of(f)}};
}

void emit_record(const json& j) { std::cout << j.dump() << '\n'; }

std::string kind_name(int kind) { return modseq_kind_name(kind); }

// ---- seq period ----

int cmd_seq_period(const Options& o) {
  const auto seqs = input_sequences(o);
  if (o.fmt() == Format::Csv) std::cout << "modulus,period,values\n";
  for (const auto& f : seqs) {
    const auto v = values_of(f.get());
    switch (o.fmt()) {
      case Format::Human:
        std::cout << "period " << v.size() << ": " << seq_string(f.get()) << '\n';
        break;
      case Format::Csv:
        std::cout << modseq_seq_modulus(f.get()) << ',' << v.size() << ',' << spaced(v) << '\n';
        break;
      case Format::Records: {
        json j = seq_record(f.get());
        j["tau"] = v.size();
        emit_record(j);
        break;
      }
    }
  }
  return kExitOk;
}

// ---- seq decompose ----

struct PartReport {
  std::uint64_t p = 0;
  unsigned ell = 0;
  Seq part;
  int kind = 0;
  modseq_split_info info{};
  Seq idem;
  Seq nil;
};

struct GenVec {
  std::vector<std::uint64_t> entries;
  std::int64_t leading = -1;
};

GenVec genvec(const modseq_seq* f) {
  GenVec g;
  int kind = 0;
  std::size_t n = 0;
  std::int64_t lead = -1;
  modseq_status st = modseq_generating_vector(f, &kind, nullptr, 0, &n, &lead);
  if (st != MODSEQ_OK && st != MODSEQ_ERR_BUFFER) check(st);
  g.entries.resize(n);
  check(modseq_generating_vector(f, &kind, g.entries.data(), n, &n, &lead));
  g.leading = lead;
  return g;
}

std::string vec_tuple(const std::vector<std::uint64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

int cmd_seq_decompose(const Options& o) {
  const Seq f = single_sequence(o);
  modseq_seq_list* raw = nullptr;
  check(modseq_seq_p_parts(f.get(), &raw));
  SeqList parts(raw);

  std::vector<PartReport> reports;
  for (std::size_t i = 0; i < modseq_seq_list_size(raw); ++i) {
    PartReport r;
    r.part.reset(modseq_seq_clone(modseq_seq_list_at(raw, i)));
    check(modseq_prime_power(modseq_seq_modulus(r.part.get()), &r.p, &r.ell));
    check(modseq_classify(r.part.get(), &r.kind));
    modseq_seq* a = nullptr;
    modseq_seq* b = nullptr;
    check(modseq_split(r.part.get(), &r.info, &a, &b));
    r.idem.reset(a);
    r.nil.reset(b);
    reports.push_back(std::move(r));
  }

  // The pure component carried by each part (both for mixed parts).
  auto components = [](const PartReport& r) {
    std::vector<std::pair<std::string, const modseq_seq*>> out;
    if (r.kind != MODSEQ_KIND_NILPOTENT) out.emplace_back("idempotent", r.idem.get());
    if (r.kind != MODSEQ_KIND_IDEMPOTENT) out.emplace_back("nilpotent", r.nil.get());
    return out;
  };

  switch (o.fmt()) {
    case Format::Human: {
      std::cout << "sequence " << seq_string(f.get()) << ", period " << modseq_seq_period(f.get())
                << '\n';
      for (const auto& r : reports) {
        std::cout << "part mod " << modseq_seq_modulus(r.part.get()) << " (p=" << r.p
                  << ", ell=" << r.ell << "): " << bracket(values_of(r.part.get())) << ", period "
                  << modseq_seq_period(r.part.get()) << ", " << kind_name(r.kind) << '\n';
        std::cout << "  idempotency index " << r.info.idempotency_index << ", nilpotency index "
                  << r.info.nilpotency_index << '\n';
        for (const auto& [label, g] : components(r)) {
          const GenVec gv = genvec(g);
          std::cout << "  " << label << " part " << bracket(values_of(g)) << ": generating vector "
                    << vec_tuple(gv.entries);
          if (gv.leading >= 0) {
            std::cout << ", leading e_" << gv.leading << " = " << gv.entries[gv.leading];
          }
          std::cout << '\n';
        }
      }
      break;
    }
    case Format::Csv:
      std::cout << "p,ell,modulus,values,period,kind,idempotency_index,nilpotency_index,"
                   "component,component_values,generating_vector,leading_index\n";
      for (const auto& r : reports) {
        for (const auto& [label, g] : components(r)) {
          const GenVec gv = genvec(g);
          std::cout << r.p << ',' << r.ell << ',' << modseq_seq_modulus(r.part.get()) << ','
                    << spaced(values_of(r.part.get())) << ',' << modseq_seq_period(r.part.get())
                    << ',' << kind_name(r.kind) << ',' << r.info.idempotency_index << ','
                    << r.info.nilpotency_index << ',' << label << ',' << spaced(values_of(g))
                    << ',' << spaced(gv.entries) << ',';
          if (gv.leading >= 0) std::cout << gv.leading;
          std::cout << '\n';
        }
      }
      break;
    case Format::Records:
      for (const auto& r : reports) {
        json j = seq_record(r.part.get());
        j["p"] = r.p;
        j["ell"] = r.ell;
        j["kind"] = kind_name(r.kind);
        j["idempotency_index"] = r.info.idempotency_index;
        j["nilpotency_index"] = r.info.nilpotency_index;
        for (const auto& [label, g] : components(r)) {
          const GenVec gv = genvec(g);
          json c = seq_record(g);
          c["generating_vector"] = gv.entries;
          c["leading_index"] = gv.leading >= 0 ? json(gv.leading) : json(nullptr);
          j[label] = c;
        }
        emit_record(j);
      }
      break;
  }
  return kExitOk;
}

// ---- predictions ----

struct Composite {
  std::vector<modseq_part_prediction> parts;
  std::uint64_t period = 0;
  int advisory = 0;
};

Composite predict(const modseq_seq* f, std::uint64_t s) {
  Composite c;
  std::size_t n = 0;
  modseq_status st = modseq_predict_period_composite(f, s, nullptr, 0, &n, &c.period, &c.advisory);
  if (st != MODSEQ_OK && st != MODSEQ_ERR_BUFFER) check(st);
  c.parts.resize(n);
  check(modseq_predict_period_composite(f, s, c.parts.data(), n, &n, &c.period, &c.advisory));
  return c;
}

// Upper bound for mixed parts: the split is linear, so the period of the
// primitive divides the lcm over the pure components.
std::uint64_t mixed_bound(const modseq_seq* f, std::uint64_t s) {
  modseq_seq* a = nullptr;
  modseq_seq* b = nullptr;
  check(modseq_split(f, nullptr, &a, &b));
  Seq idem(a), nil(b);
  std::uint64_t bound = 1;
  for (const modseq_seq* g : {idem.get(), nil.get()}) {
    modseq_prediction pr{};
    check(modseq_predict_period(g, s, &pr));
    bound = std::lcm(bound, pr.predicted_period);
  }
  return bound;
}

void print_prediction_human(const modseq_seq* f, std::uint64_t s, const Composite& c) {
  modseq_seq_list* raw = nullptr;
  check(modseq_seq_p_parts(f, &raw));
  SeqList parts(raw);
  std::uint64_t bound = 1;
  bool exact = true;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    const auto& pp = c.parts[i];
    std::cout << "  part p=" << pp.p << " ell=" << pp.ell << ": " << kind_name(pp.kind);
    if (pp.has_prediction) {
      const auto& pr = pp.prediction;
      std::cout << ", leading e_" << pr.leading_index << " = " << pr.leading_value
                << ", predicted period " << pr.predicted_period << " (proven for s >= "
                << pr.valid_from << (pr.advisory ? "; advisory here" : "") << ")\n";
      bound = std::lcm(bound, pr.predicted_period);
    } else {
      const std::uint64_t b = mixed_bound(modseq_seq_list_at(raw, i), s);
      std::cout << ", period divides " << b << " (lcm over the split components)\n";
      bound = std::lcm(bound, b);
      exact = false;
    }
  }
  if (exact) {
    std::cout << "  predicted period " << c.period << (c.advisory ? " (advisory)" : "") << '\n';
  } else {
    std::cout << "  period divides " << bound << '\n';
  }
}

int cmd_predict_period(const Options& o) {
  const Seq f = single_sequence(o);
  const auto s_list = parse_s_list(o.s_spec);
  const modseq_limits lim = o.limits();
  int exit_code = kExitOk;
  if (o.fmt() == Format::Csv) {
    std::cout << "s,p,ell,kind,leading_index,leading_value,valid_from,predicted_period,advisory";
    if (o.verify) std::cout << ",measured_period,match";
    std::cout << '\n';
  }
  for (std::uint64_t s : s_list) {
    const Composite c = predict(f.get(), s);
    std::optional<std::uint64_t> measured;
    std::string measure_note;
    if (o.verify) {
      modseq_seq* g = nullptr;
      const modseq_status st = modseq_seq_primitive(f.get(), s, &lim, &g);
      if (st == MODSEQ_OK) {
        measured = modseq_seq_period(g);
        modseq_seq_free(g);
      } else if (st == MODSEQ_ERR_RESOURCE) {
        measure_note = modseq_last_error();
      } else {
        check(st);
      }
    }
    // A mismatch only counts where the prediction is proven.
    const bool checkable = measured && c.period != 0 && !c.advisory;
    const bool match = !checkable || *measured == c.period;
    if (!match) exit_code = kExitMismatch;

    switch (o.fmt()) {
      case Format::Human:
        std::cout << "s = " << s << '\n';
        print_prediction_human(f.get(), s, c);
        if (o.verify) {
          if (measured) {
            std::cout << "  measured period " << *measured
                      << (checkable ? (match ? " (match)" : " (MISMATCH)") : " (not compared)")
                      << '\n';
          } else {
            std::cout << "  not measured: " << measure_note << '\n';
          }
        }
        break;
      case Format::Csv:
        for (const auto& pp : c.parts) {
          const auto& pr = pp.prediction;
          std::cout << s << ',' << pp.p << ',' << pp.ell << ',' << kind_name(pp.kind) << ',';
          if (pp.has_prediction) {
            std::cout << pr.leading_index << ',' << pr.leading_value << ',' << pr.valid_from << ','
                      << pr.predicted_period << ',' << pr.advisory;
          } else {
            std::cout << ",,,,";
          }
          if (o.verify) {
            std::cout << ',' << (measured ? std::to_string(*measured) : "") << ','
                      << (checkable ? (match ? "yes" : "no") : "");
          }
          std::cout << '\n';
        }
        break;
      case Format::Records: {
        json j{{"s", s}, {"modulus", modseq_seq_modulus(f.get())}};
        json parts = json::array();
        for (const auto& pp : c.parts) {
          json q{{"p", pp.p}, {"ell", pp.ell}, {"kind", kind_name(pp.kind)}};
          if (pp.has_prediction) {
            q["leading_index"] = pp.prediction.leading_index;
            q["leading_value"] = pp.prediction.leading_value;
            q["valid_from"] = pp.prediction.valid_from;
            q["predicted_period"] = pp.prediction.predicted_period;
            q["advisory"] = static_cast<bool>(pp.prediction.advisory);
          }
          parts.push_back(q);
        }
        j["parts"] = parts;
        j["predicted_period"] = c.period ? json(c.period) : json(nullptr);
        if (measured) j["measured_period"] = *measured;
        if (checkable) j["match"] = match;
        emit_record(j);
        break;
      }
    }
  }
  return exit_code;
}

// ---- seq primitive ----

int cmd_seq_primitive(const Options& o) {
  const Seq f = single_sequence(o);
  const std::uint64_t s = parse_single_s(o.s_spec);
  const modseq_limits lim = o.limits();
  modseq_seq* g = nullptr;
  const modseq_status st = modseq_seq_primitive(f.get(), s, &lim, &g);
  if (st == MODSEQ_ERR_RESOURCE) {
    const std::string why = modseq_last_error();
    const Composite c = predict(f.get(), s);
    std::cerr << "note: Sigma^" << s << " f not materialized (" << why
              << "); the period below is the analytic prediction\n";
    switch (o.fmt()) {
      case Format::Human:
        std::cout << "Sigma^" << s << " of " << seq_string(f.get()) << '\n';
        print_prediction_human(f.get(), s, c);
        break;
      case Format::Csv:
        std::cout << "s,modulus,period,values,source\n"
                  << s << ',' << modseq_seq_modulus(f.get()) << ','
                  << (c.period ? std::to_string(c.period) : "") << ",,prediction\n";
        break;
      case Format::Records:
        emit_record(json{{"s", s},
                         {"modulus", modseq_seq_modulus(f.get())},
                         {"predicted_period", c.period ? json(c.period) : json(nullptr)},
                         {"advisory", static_cast<bool>(c.advisory)},
                         {"source", "prediction"}});
        break;
    }
    return kExitOk;
  }
  check(st);
  const Seq out(g);
  const auto v = values_of(out.get());
  switch (o.fmt()) {
    case Format::Human:
      std::cout << "Sigma^" << s << " f = " << seq_string(out.get()) << ", period " << v.size()
                << '\n';
      break;
    case Format::Csv:
      std::cout << "s,modulus,period,values,source\n"
                << s << ',' << modseq_seq_modulus(out.get()) << ',' << v.size() << ','
                << spaced(v) << ",materialized\n";
      break;
    case Format::Records: {
      json j = seq_record(out.get());
      j["s"] = s;
      emit_record(j);
      break;
    }
  }
  return kExitOk;
}

// ---- seq crt ----

int cmd_seq_crt(const Options& o) {
  const auto seqs = input_sequences(o);
  SeqList list(modseq_seq_list_new());
  for (const auto& f : seqs) check(modseq_seq_list_push(list.get(), f.get()));
  modseq_seq* g = nullptr;
  check(modseq_seq_crt(list.get(), &g));
  const Seq out(g);
  const auto v = values_of(out.get());
  switch (o.fmt()) {
    case Format::Human:
      std::cout << seq_string(out.get()) << ", period " << v.size() << '\n';
      break;
    case Format::Csv:
      std::cout << "modulus,period,values\n"
                << modseq_seq_modulus(out.get()) << ',' << v.size() << ',' << spaced(v) << '\n';
      break;
    case Format::Records:
      emit_record(seq_record(out.get()));
      break;
  }
  return kExitOk;
}

// ---- binomial statistics ----

std::string stats_pi(const modseq_stats& st) {
  std::string out;
  for (unsigned i = 0; i < st.ell; ++i) out += (i ? " " : "") + std::to_string(st.pi[i]);
  return out;
}

bool same_stats(const modseq_stats& a, const modseq_stats& b) {
  if (a.period != b.period || a.zeros != b.zeros || a.ell != b.ell) return false;
  return std::equal(a.pi, a.pi + a.ell, b.pi);
}

json stats_json(const modseq_stats& st) {
  return json{{"period", st.period},
              {"pi", std::vector<std::uint64_t>(st.pi, st.pi + st.ell)},
              {"zeros", st.zeros}};
}

// bin_s is materialized only while p^{ell + k_s} fits under the cap.
bool fits_cap(std::uint64_t p, unsigned ell, std::uint64_t s, const modseq_limits& lim) {
  if (s == 0) return true;
  unsigned k = 0;
  for (std::uint64_t t = s; t >= p; t /= p) ++k;
  long double len = 1;
  for (unsigned i = 0; i < ell + k; ++i) len *= static_cast<long double>(p);
  return len <= static_cast<long double>(lim.max_length);
}

Chain make_chain(std::uint64_t p, unsigned ell, std::uint64_t s, const modseq_limits& lim) {
  modseq_chain* c = nullptr;
  check(modseq_reduce_chain(p, ell, s, &lim, &c));
  return Chain(c);
}

int cmd_binom_stats(const Options& o) {
  const auto s_list = parse_s_list(o.s_spec);
  const modseq_limits lim = o.limits();
  if (o.via != "direct" && o.via != "chain") usage("--via must be direct or chain");
  int exit_code = kExitOk;

  if (o.fmt() == Format::Csv) {
    std::cout << "s,period,zeros,pi,method";
    if (o.verify) std::cout << ",match";
    std::cout << '\n';
  }
  bool noted = false;
  for (std::uint64_t s : s_list) {
    modseq_stats st{};
    std::string method = o.via;
    if (method == "direct" && !fits_cap(o.p, o.ell, s, lim)) {
      if (!noted) {
        std::cerr << "note: bin_s exceeds the materialization cap; using the digit reduction "
                     "chain for those s\n";
        noted = true;
      }
      method = "chain";
    }
    if (method == "direct") {
      check(modseq_binom_stats(o.p, o.ell, s, &lim, &st));
    } else {
      const Chain c = make_chain(o.p, o.ell, s, lim);
      modseq_chain_result(c.get(), &st);
    }
    std::optional<bool> match;
    if (o.verify) {
      modseq_stats other{};
      if (method == "direct") {
        const Chain c = make_chain(o.p, o.ell, s, lim);
        modseq_chain_result(c.get(), &other);
        match = same_stats(st, other);
      } else if (fits_cap(o.p, o.ell, s, lim)) {
        check(modseq_binom_stats(o.p, o.ell, s, &lim, &other));
        match = same_stats(st, other);
      }
      if (match && !*match) exit_code = kExitMismatch;
    }
    switch (o.fmt()) {
      case Format::Human:
        std::cout << "bin_" << s << " mod " << o.p << "^" << o.ell << ": period " << st.period
                  << ", zeros " << st.zeros << ", Pi = (" << stats_pi(st) << ") [" << method
                  << "]";
        if (match) std::cout << (*match ? " verified" : " MISMATCH");
        std::cout << '\n';
        break;
      case Format::Csv:
        std::cout << s << ',' << st.period << ',' << st.zeros << ',' << stats_pi(st) << ','
                  << method;
        if (o.verify) std::cout << ',' << (match ? (*match ? "yes" : "no") : "");
        std::cout << '\n';
        break;
      case Format::Records: {
        json j{{"p", o.p}, {"ell", o.ell}, {"s", s}};
        j.update(stats_json(st));
        j["method"] = method;
        if (match) j["match"] = *match;
        emit_record(j);
        break;
      }
    }
  }
  return exit_code;
}

int cmd_binom_reduce(const Options& o) {
  const auto s_list = parse_s_list(o.s_spec);
  const modseq_limits lim = o.limits();
  int exit_code = kExitOk;
  if (o.fmt() == Format::Csv) {
    std::cout << "s,step,lemma,m,k,from,to,deleted_digit,operator,scale_exponent,e_size\n";
  }
  for (std::uint64_t s : s_list) {
    const Chain c = make_chain(o.p, o.ell, s, lim);
    std::vector<modseq_step> steps(modseq_chain_length(c.get()));
    for (std::size_t i = 0; i < steps.size(); ++i) check(modseq_chain_step(c.get(), i, &steps[i]));
    std::size_t n_app = 0;
    modseq_status fst = modseq_find_reductions(o.p, o.ell, s, nullptr, 0, &n_app);
    if (fst != MODSEQ_OK && fst != MODSEQ_ERR_BUFFER) check(fst);
    std::vector<modseq_step> applicable(n_app);
    check(modseq_find_reductions(o.p, o.ell, s, applicable.data(), n_app, &n_app));
    modseq_stats base{}, result{};
    modseq_chain_base(c.get(), &base);
    modseq_chain_result(c.get(), &result);

    std::optional<bool> match;
    if (o.verify && fits_cap(o.p, o.ell, s, lim)) {
      modseq_stats direct{};
      check(modseq_binom_stats(o.p, o.ell, s, &lim, &direct));
      match = same_stats(direct, result);
      if (!*match) exit_code = kExitMismatch;
    }

    switch (o.fmt()) {
      case Format::Human: {
        char* dig = nullptr;
        check(modseq_digits_string(s, o.p, &dig));
        std::cout << "s = " << s << " = " << take_string(dig) << " over Z_" << o.p << "^" << o.ell
                  << '\n';
        std::cout << "  applicable:";
        for (const auto& st : applicable) {
          std::cout << ' ' << modseq_lemma_name(st.lemma) << "(m=" << st.m << ")->" << st.s_prime;
        }
        std::cout << (applicable.empty() ? " none\n" : "\n") << "  chain:\n";
        for (std::size_t i = 0; i < steps.size(); ++i) {
          const auto& st = steps[i];
          std::cout << "    " << i + 1 << ". " << modseq_lemma_name(st.lemma) << " m=" << st.m
                    << ": " << st.s << " -> " << st.s_prime << " (digit " << st.deleted_digit
                    << " deleted), bin_" << st.s << " ~nu " << modseq_operator_name(st.op)
                    << "_{" << o.p << "^" << st.scale_exponent << "} bin_" << st.s_prime;
          if (st.has_e_size) {
            std::cout << " + " << o.p << "^" << (o.ell - 1) << " chi_E, |E| = " << st.e_size;
          }
          std::cout << '\n';
        }
        std::cout << "  base bin_" << modseq_chain_s_star(c.get()) << ": period " << base.period
                  << ", zeros " << base.zeros << ", Pi = (" << stats_pi(base) << ")\n";
        std::cout << "  bin_" << s << ": period " << result.period << ", zeros " << result.zeros
                  << ", Pi = (" << stats_pi(result) << ")";
        if (match) std::cout << (*match ? " verified" : " MISMATCH against direct counting");
        std::cout << '\n';
        break;
      }
      case Format::Csv:
        for (std::size_t i = 0; i < steps.size(); ++i) {
          const auto& st = steps[i];
          std::cout << s << ',' << i + 1 << ',' << modseq_lemma_name(st.lemma) << ',' << st.m
                    << ',' << st.k << ',' << st.s << ',' << st.s_prime << ',' << st.deleted_digit
                    << ',' << modseq_operator_name(st.op) << ',' << st.scale_exponent << ',';
          if (st.has_e_size) std::cout << st.e_size;
          std::cout << '\n';
        }
        break;
      case Format::Records: {
        auto step_json = [](const modseq_step& st) {
          json j{{"lemma", modseq_lemma_name(st.lemma)},
                 {"m", st.m},
                 {"k", st.k},
                 {"s", st.s},
                 {"s_prime", st.s_prime},
                 {"deleted_digit", st.deleted_digit},
                 {"operator", modseq_operator_name(st.op)},
                 {"scale_exponent", st.scale_exponent}};
          if (st.has_e_size) j["e_size"] = st.e_size;
          return j;
        };
        json chain = json::array();
        json app = json::array();
        for (const auto& st : steps) chain.push_back(step_json(st));
        for (const auto& st : applicable) app.push_back(step_json(st));
        json j{{"p", o.p}, {"ell", o.ell}, {"s", s}, {"applicable", app}, {"chain", chain},
               {"s_star", modseq_chain_s_star(c.get())}, {"base", stats_json(base)},
               {"result", stats_json(result)}};
        if (match) j["match"] = *match;
        emit_record(j);
        break;
      }
    }
  }
  return exit_code;
}

// ---- vieru ----

int cmd_vieru_z(const Options& o) {
  if (o.k > 20) usage("--k above 20 is out of desk scale");
  if (o.base != "oracle" && o.base != "printed") usage("--base must be oracle or printed");
  modseq_vieru* raw = nullptr;
  check(modseq_vieru_new(o.base == "printed" ? MODSEQ_BASE_PRINTED : MODSEQ_BASE_ORACLE, &raw));
  const Vieru ctx(raw);
  const std::uint64_t lo = std::uint64_t{1} << o.k;
  const std::uint64_t hi = lo << 1;
  int exit_code = kExitOk;
  std::uint64_t mismatches = 0;

  if (o.fmt() == Format::Csv) {
    std::cout << "s,case,z_recursive" << (o.verify ? ",z_oracle,match" : "") << '\n';
  }
  for (std::uint64_t s = lo; s < hi; ++s) {
    std::uint64_t z = 0;
    check(modseq_vieru_z(ctx.get(), s, &z));
    std::string label = s < 32 ? "oracle" : s < 64 ? "base" : "";
    if (s >= 64) {
      int kind = 0;
      unsigned k = 0, i = 0;
      check(modseq_vieru_case(s, &kind, &k, &i));
      label = modseq_vieru_case_name(kind);
      if (i) label += std::to_string(i);
    }
    std::optional<std::uint64_t> oracle;
    if (o.verify) {
      std::uint64_t zo = 0;
      check(modseq_vieru_z_oracle(s, &zo));
      oracle = zo;
      if (zo != z) {
        ++mismatches;
        exit_code = kExitMismatch;
      }
    }
    switch (o.fmt()) {
      case Format::Human:
        std::cout << "Z(" << s << ") = " << z << "  [" << label << "]";
        if (oracle) std::cout << (*oracle == z ? "  = oracle" : "  oracle " + std::to_string(*oracle));
        std::cout << '\n';
        break;
      case Format::Csv:
        std::cout << s << ',' << label << ',' << z;
        if (oracle) std::cout << ',' << *oracle << ',' << (*oracle == z ? "yes" : "no");
        std::cout << '\n';
        break;
      case Format::Records: {
        json j{{"s", s}, {"case", label}, {"z_recursive", z}};
        if (oracle) {
          j["z_oracle"] = *oracle;
          j["match"] = *oracle == z;
        }
        emit_record(j);
        break;
      }
    }
  }
  if (o.verify && o.fmt() == Format::Human) {
    std::cout << (hi - lo) << " rows, " << mismatches << " mismatches\n";
  }
  return exit_code;
}

int cmd_vieru_d(const Options& o) {
  if (o.k < 5 || o.k > 16) usage("--k must lie in 5..16");
  const std::uint64_t begin = modseq_d_range_begin(o.k);
  const std::uint64_t end = modseq_d_range_end(o.k);
  std::vector<std::uint64_t> rec(end - begin);
  std::size_t n = 0;
  check(modseq_d_recursive(o.k, rec.data(), rec.size(), &n));
  int exit_code = kExitOk;
  std::uint64_t mismatches = 0;

  if (o.fmt() == Format::Csv) {
    std::cout << "s,closed,recursive,hamming,a_form" << (o.verify ? ",esets,match" : "") << '\n';
  }
  for (std::uint64_t s = begin; s < end; ++s) {
    std::uint64_t closed = 0, ham = 0, aform = 0, es = 0;
    check(modseq_d_closed(o.k, s, &closed));
    check(modseq_d_hamming(o.k, s, &ham));
    check(modseq_d_a_form(o.k, s, &aform));
    const std::uint64_t r = rec[s - begin];
    bool match = closed == r && closed == ham && closed == aform;
    if (o.verify) {
      check(modseq_d_from_esets(o.k, s, &es));
      match = match && es == closed;
    }
    if (!match) {
      ++mismatches;
      exit_code = kExitMismatch;
    }
    switch (o.fmt()) {
      case Format::Human:
        std::cout << "d_" << o.k << "(" << s << ") = " << closed;
        if (!match) {
          std::cout << "  MISMATCH recursive " << r << " hamming " << ham << " a-form " << aform;
          if (o.verify) std::cout << " esets " << es;
        }
        std::cout << '\n';
        break;
      case Format::Csv:
        std::cout << s << ',' << closed << ',' << r << ',' << ham << ',' << aform;
        if (o.verify) std::cout << ',' << es << ',' << (match ? "yes" : "no");
        std::cout << '\n';
        break;
      case Format::Records: {
        json j{{"k", o.k}, {"s", s}, {"closed", closed}, {"recursive", r}, {"hamming", ham},
               {"a_form", aform}};
        if (o.verify) j["esets"] = es;
        j["match"] = match;
        emit_record(j);
        break;
      }
    }
  }
  if (o.fmt() == Format::Human) {
    std::cout << (end - begin) << " entries, " << mismatches << " disagreements\n";
  }
  return exit_code;
}

// ---- verify ----

int cmd_verify(const Options& o) {
  static const std::vector<std::string> kSuites = {"lemmas", "periods", "structure", "vieru"};
  std::vector<std::string> selected;
  if (o.suite == "all") {
    selected = kSuites;
  } else if (std::find(kSuites.begin(), kSuites.end(), o.suite) != kSuites.end()) {
    selected = {o.suite};
  } else {
    usage("unknown suite '" + o.suite + "' (lemmas, periods, structure, vieru, all)");
  }

  std::vector<Report> reports;
  // The suite call must finish before its handle is read.
  auto keep = [&](auto&& run) {
    modseq_report* r = nullptr;
    check(run(&r));
    reports.emplace_back(r);
  };
  for (const auto& name : selected) {
    if (name == "lemmas") {
      keep([](modseq_report** r) { return modseq_verify_lemmas(2, 2, 512, r); });
      keep([](modseq_report** r) { return modseq_verify_lemmas(2, 3, 512, r); });
      keep([](modseq_report** r) { return modseq_verify_lemmas(3, 2, 243, r); });
      keep([](modseq_report** r) { return modseq_verify_lemmas(2, 1, 128, r); });
    } else if (name == "periods") {
      keep([&](modseq_report** r) { return modseq_verify_periods(2, 2, 64, nullptr, 0, o.seed, r); });
      keep([&](modseq_report** r) { return modseq_verify_periods(3, 2, 64, nullptr, 0, o.seed, r); });
    } else if (name == "structure") {
      static const std::uint64_t kModuli[] = {3, 4, 8, 9, 12};
      keep([&](modseq_report** r) {
        return modseq_verify_structure(kModuli, std::size(kModuli), 500, o.seed, r);
      });
    } else {
      keep([](modseq_report** r) { return modseq_verify_vieru(9, r); });
    }
  }

  bool all_ok = true;
  if (o.fmt() == Format::Csv) std::cout << "suite,instances,failures\n";
  for (const auto& r : reports) {
    all_ok = all_ok && modseq_report_ok(r.get());
    char* buf = nullptr;
    switch (o.fmt()) {
      case Format::Human:
        check(modseq_report_summary(r.get(), &buf));
        std::cout << take_string(buf) << '\n';
        break;
      case Format::Csv:
        check(modseq_report_suite(r.get(), &buf));
        std::cout << take_string(buf) << ',' << modseq_report_instances(r.get()) << ','
                  << modseq_report_failure_count(r.get()) << '\n';
        break;
      case Format::Records:
        check(modseq_report_records(r.get(), &buf));
        std::cout << take_string(buf);
        break;
    }
  }
  if (o.fmt() == Format::Human && !all_ok) {
    std::cout << "failures present; rerun with --format records for the failing instances\n";
  }
  return all_ok ? kExitOk : kExitMismatch;
}

// ---- wiring ----

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"human", "csv", "records"}))
      ->capture_default_str();
}

void add_sequence_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--mod", o.mods, "Modulus m of Z_m (repeat alongside --values)");
  cmd->add_option("--values", o.values, "One period as a comma list, e.g. 2,1,2,4");
  cmd->add_option("--file", o.file,
                  "Line-delimited records {\"modulus\":m,\"period\":[...]}; '-' for stdin");
}

void add_cap(CLI::App* cmd, Options& o) {
  cmd->add_option("--cap", o.cap, "Largest number of residues one materialized period may hold");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Periodic sequences over Z_m: finite differences, iterated primitives, "
               "binomial coefficients modulo prime powers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(modseq_version()));

  auto* seq = app.add_subcommand("seq", "Operations on one periodic sequence");
  seq->require_subcommand(1);

  auto* period = seq->add_subcommand(
      "period", "Minimal period tau(f) of each input sequence, stored as one canonical period");
  add_sequence_input(period, o);
  add_format(period, o);

  auto* decompose = seq->add_subcommand(
      "decompose",
      "Prime-power parts of f with the idempotent/nilpotent split f = f_I + f_N, the "
      "idempotency and nilpotency indices and the generating vectors (Delta^i f(0))");
  add_sequence_input(decompose, o);
  add_format(decompose, o);

  auto* primitive = seq->add_subcommand(
      "primitive",
      "Iterated primitive Sigma^s f (right inverse of the difference operator, seed 0); "
      "falls back to the analytic period prediction past the cap");
  add_sequence_input(primitive, o);
  primitive->add_option("--s", o.s_spec, "Order s of the primitive")->required();
  add_cap(primitive, o);
  add_format(primitive, o);

  auto* crt = seq->add_subcommand(
      "crt", "Chinese-remainder recombination of sequences over pairwise coprime moduli");
  add_sequence_input(crt, o);
  add_format(crt, o);

  auto* bstats = app.add_subcommand(
      "binom-stats",
      "Period, zero count Z and valuation counts Pi_i of bin_s: n -> C(n, s) mod p^ell");
  bstats->add_option("--p", o.p, "Prime p")->capture_default_str();
  bstats->add_option("--ell", o.ell, "Exponent ell")->capture_default_str();
  bstats->add_option("--s", o.s_spec, "s, a comma list, or a half-open range a:b")->required();
  bstats->add_option("--via", o.via, "direct (materialize) or chain (digit reductions)")
      ->capture_default_str();
  bstats->add_flag("--verify", o.verify, "Cross-check direct counting against the chain");
  add_cap(bstats, o);
  add_format(bstats, o);

  auto* breduce = app.add_subcommand(
      "binom-reduce",
      "Digit-deletion reduction chain for bin_s mod p^ell: windows (p-1)^ell, 0^ell and "
      "(p-1)0^{ell-1} with the Alt/Double operators and the E_s correction");
  breduce->add_option("--p", o.p, "Prime p")->capture_default_str();
  breduce->add_option("--ell", o.ell, "Exponent ell")->capture_default_str();
  breduce->add_option("--s", o.s_spec, "s, a comma list, or a half-open range a:b")->required();
  breduce->add_flag("--verify", o.verify, "Compare carried statistics with direct counting");
  add_cap(breduce, o);
  add_format(breduce, o);

  auto* pred = app.add_subcommand(
      "predict-period",
      "Leading-term prediction of tau(Sigma^s f) for nilpotent and idempotent parts, with the "
      "threshold from which it is proven");
  add_sequence_input(pred, o);
  pred->add_option("--s", o.s_spec, "s, a comma list, or a half-open range a:b")->required();
  pred->add_flag("--verify", o.verify, "Measure the period by materializing Sigma^s f");
  add_cap(pred, o);
  add_format(pred, o);

  auto* vz = app.add_subcommand(
      "vieru-z",
      "Zero counts Z(s) of the primitives of v = [2,1,2,0,0,1,0,0] mod 4 by the six-case "
      "recursion, for 2^k <= s < 2^{k+1}");
  vz->add_option("--k", o.k, "Block index k")->capture_default_str();
  vz->add_flag("--verify", o.verify, "Compare each row with the materialized zero count");
  vz->add_option("--base", o.base, "Initial block for 32 <= s < 64: oracle or printed")
      ->capture_default_str();
  add_format(vz, o);

  auto* vd = app.add_subcommand(
      "vieru-d",
      "Correction sequence d_k of the recursion's C case in closed, recursive, Hamming-weight "
      "and a(n) forms");
  vd->add_option("--k", o.k, "Index k >= 5")->capture_default_str();
  vd->add_flag("--verify", o.verify, "Also compare with |E_{s+1} symmetric-difference E_{s+3}|");
  add_format(vd, o);

  auto* ver = app.add_subcommand(
      "verify",
      "Conformance suites re-checking the reduction lemmas, period formulas, structure "
      "theory and the recursion against materialized sequences");
  ver->add_option("suite", o.suite, "lemmas, periods, structure, vieru or all")
      ->capture_default_str();
  ver->add_option("--seed", o.seed, "Seed for random sampling")->capture_default_str();
  add_format(ver, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*period) return cmd_seq_period(o);
    if (*decompose) return cmd_seq_decompose(o);
    if (*primitive) return cmd_seq_primitive(o);
    if (*crt) return cmd_seq_crt(o);
    if (*bstats) return cmd_binom_stats(o);
    if (*breduce) return cmd_binom_reduce(o);
    if (*pred) return cmd_predict_period(o);
    if (*vz) return cmd_vieru_z(o);
    if (*vd) return cmd_vieru_d(o);
    if (*ver) return cmd_verify(o);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
