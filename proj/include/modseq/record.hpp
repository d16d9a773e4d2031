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

// Sequence exchange format: {"modulus":12,"period":[2,1,2,4,8,1,8,4]}.

#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "modseq/sequence.hpp"

namespace modseq {

// Parses one record; throws UsageError naming the offending field.
PeriodicSequence parse_sequence_record(std::string_view text);

// One record per non-blank line. Errors are prefixed with "line N: ".
std::vector<PeriodicSequence> parse_sequence_records(std::istream& in);

// Canonical single-line record.
std::string to_record(const PeriodicSequence& f);

}  // namespace modseq
