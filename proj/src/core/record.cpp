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

#include "modseq/record.hpp"

#include <json.hpp>

#include <algorithm>

namespace modseq {

using nlohmann::json;

PeriodicSequence parse_sequence_record(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed record: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("record must be an object");
  if (!doc.contains("modulus")) throw UsageError("field 'modulus': missing");
  if (!doc.contains("period")) throw UsageError("field 'period': missing");
  const json& mod = doc["modulus"];
  if (!mod.is_number_integer() || mod.get<std::int64_t>() < 2) {
    throw UsageError("field 'modulus': expected an integer >= 2");
  }
  const json& period = doc["period"];
  if (!period.is_array() || period.empty()) {
    throw UsageError("field 'period': expected a nonempty array of integers");
  }
  std::vector<std::int64_t> raw;
  raw.reserve(period.size());
  for (std::size_t i = 0; i < period.size(); ++i) {
    if (!period[i].is_number_integer()) {
      throw UsageError("field 'period'[" + std::to_string(i) + "]: expected an integer");
    }
    raw.push_back(period[i].get<std::int64_t>());
  }
  return PeriodicSequence::from_values(mod.get<std::uint64_t>(), raw);
}

std::vector<PeriodicSequence> parse_sequence_records(std::istream& in) {
  std::vector<PeriodicSequence> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    try {
      out.push_back(parse_sequence_record(line));
    } catch (const UsageError& e) {
      throw UsageError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::string to_record(const PeriodicSequence& f) {
  json doc;
  doc["modulus"] = f.modulus();
  doc["period"] = std::vector<Residue>(f.values().begin(), f.values().end());
  return doc.dump();
}

}  // namespace modseq
