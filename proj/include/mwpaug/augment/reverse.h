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

#ifndef MWPAUG_AUGMENT_REVERSE_H_
#define MWPAUG_AUGMENT_REVERSE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "mwpaug/augment/verbs.h"
#include "mwpaug/corpus/numbers.h"
#include "mwpaug/corpus/record.h"
#include "mwpaug/random.h"

namespace mwpaug::augment {

struct Statement {
  std::string text;
  // Indices into ExtractNumbers() of the whitespace-normalized record text.
  std::vector<int> number_indices;
  size_t start = 0;  // byte offset in the normalized text
};

// A problem text cut into its statements and the final question. Joining
// statements and question with single spaces gives the normalized text.
struct SentenceSplit {
  std::vector<Statement> statements;
  std::string question;
};

// Splits on '.', '!' and '?' (a '.' between digits is a decimal point; runs
// of terminators and closing quotes stay with their sentence). Fails with
// "no-question" unless the text has exactly one '?' and ends with it.
absl::StatusOr<SentenceSplit> SplitSentences(std::string_view text);

// "How many NP does|did|do S V rest?" -> "S V-s|V-past|V answer NP rest."
// "How many NP were|are|was|is rest?" -> "answer NP were|... rest."
// "How much" behaves the same with NP allowed to be empty. A leading clause
// ending in ',' is kept in front. Absent when nothing matches.
std::optional<std::string> QuestionToStatement(
    std::string_view question, double answer,
    const VerbTable& verbs = VerbTable::Default());

// "S V N NP rest." -> "How many NP rest did|does|do S V-base?" where N is the
// target number; "There are N NP." -> "How many NP are there?". Absent when
// the statement has other numbers, a '$' before the target, a comma, or no
// known verb right before the target.
std::optional<std::string> StatementToQuestion(
    std::string_view statement, const corpus::NumberToken& target,
    const VerbTable& verbs = VerbTable::Default());

// Where the statement built from the old question goes.
enum class SupportPosition { kPrepend, kAppend };

struct ReverseOptions {
  bool emit_all = false;
  SupportPosition support_position = SupportPosition::kPrepend;
};

struct ReverseOutcome {
  std::vector<corpus::MwpRecord> records;
  // Why nothing was emitted: "no-question", "template-form",
  // "no-question-pattern", "no-convertible-statement".
  std::string skip_reason;
};

// Swaps the question with one number-bearing statement: the old answer
// becomes a given and the displaced number the new unknown. One candidate is
// chosen by `rng` unless options.emit_all.
absl::StatusOr<ReverseOutcome> ReverseQuestion(
    const corpus::MwpRecord& record, RandomSource& rng,
    const ReverseOptions& options = {},
    const VerbTable& verbs = VerbTable::Default());

}  // namespace mwpaug::augment

#endif  // MWPAUG_AUGMENT_REVERSE_H_
