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

#ifndef MWPAUG_AUGMENT_QUESTION_REPLACE_H_
#define MWPAUG_AUGMENT_QUESTION_REPLACE_H_

#include <optional>
#include <string_view>

#include "absl/status/statusor.h"
#include "mwpaug/augment/text_fixer.h"
#include "mwpaug/corpus/record.h"
#include "mwpaug/random.h"

namespace mwpaug::augment {

// Fraction applied to the answer; both parts in [1, 10] and x != y.
struct FractionParams {
  int x = 1;
  int y = 2;
};

// Draws x, then y, redrawing the pair while x == y.
FractionParams DrawFraction(RandomSource& rng);

// Byte offset of the last case-insensitive "how many " / "how much ".
std::optional<size_t> FindQuestionCue(std::string_view text);

// Rewrites the last "How many/How much" cue to "What is x/y of the " and
// scales the answer: X = f(...) becomes X = (f(...))*(x/y). Absent when the
// text has no cue. Errors: "template-form" when the equation is not
// X = f(...); fixer transport errors.
absl::StatusOr<std::optional<corpus::MwpRecord>> QuestionReplace(
    const corpus::MwpRecord& record, RandomSource& rng, TextFixer& fixer);

}  // namespace mwpaug::augment

#endif  // MWPAUG_AUGMENT_QUESTION_REPLACE_H_
