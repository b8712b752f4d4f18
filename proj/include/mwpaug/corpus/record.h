//
// Copyright 2026 The mwpaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef MWPAUG_CORPUS_RECORD_H_
#define MWPAUG_CORPUS_RECORD_H_

#include <optional>
#include <string>
#include <string_view>

#include "absl/status/status.h"

namespace mwpaug::corpus {

enum class Provenance {
  kOriginal,
  kSynonym,
  kQuestionRepl,
  kReverse,
  kIcl,
  kIclRound2,
};

// Wire names: original, synonym, question_repl, reverse, icl, icl_round2.
std::string_view ProvenanceName(Provenance provenance);
std::optional<Provenance> ParseProvenance(std::string_view name);

// One math word problem: text ending in a question, a single-unknown
// equation string and the numeric answer that equation solves to.
struct MwpRecord {
  std::string id;
  std::string text;
  std::string equation;
  double answer = 0.0;
  Provenance provenance = Provenance::kOriginal;
  // Original record an augmented record derives from.
  std::optional<std::string> parent_id;

  bool operator==(const MwpRecord&) const = default;
};

// The original record id this record descends from (itself for originals).
const std::string& RootId(const MwpRecord& record);

// Trims and collapses every whitespace run to a single space.
std::string NormalizeWhitespace(std::string_view text);

// Checks the record invariants: non-empty text, parseable equation with
// exactly one X, and solve(equation) == answer within 1e-6. On failure the
// status message starts with a stable reason tag ("empty-text",
// "parse-error", "unknown-count", "unsolvable", "answer-mismatch",
// "unsupported-number-format").
absl::Status ValidateRecord(const MwpRecord& record);

}  // namespace mwpaug::corpus

#endif  // MWPAUG_CORPUS_RECORD_H_
