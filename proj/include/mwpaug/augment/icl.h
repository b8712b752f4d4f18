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

#ifndef MWPAUG_AUGMENT_ICL_H_
#define MWPAUG_AUGMENT_ICL_H_

#include <optional>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "mwpaug/corpus/record.h"
#include "mwpaug/llm/client.h"
#include "mwpaug/llm/prompt.h"
#include "mwpaug/mathexpr/expr.h"
#include "mwpaug/random.h"

namespace mwpaug::augment {

// Ranges for fresh numbers. Integer tokens draw from [int_low, int_high],
// decimal tokens from [float_low, float_high] rounded to float_decimals.
struct NumericModPolicy {
  int int_low = 2;
  int int_high = 100;
  double float_low = 1.0;
  double float_high = 100.0;
  int float_decimals = 1;
  int max_retries = 20;
};

absl::Status ValidatePolicy(const NumericModPolicy& policy);

struct ModifiedProblem {
  std::string text;
  mathexpr::Equation equation;
  double answer = 0.0;
  // False when every draw was rejected and the input came back unchanged.
  bool modified = false;
};

// Gives every number in `text` a fresh value, distinct within the draw, and
// carries the new values into the aligned equation literals. The answer is
// re-solved; a draw is rejected when solving fails, the answer is not finite,
// or it turns negative while the old one was not. After 1 + max_retries
// rejected draws the input is returned with modified == false.
ModifiedProblem ModifyNumbers(std::string_view text,
                              const mathexpr::Equation& equation, double answer,
                              RandomSource& rng, const NumericModPolicy& policy);

struct IclOutcome {
  std::optional<corpus::MwpRecord> record;
  // Set when record is absent: "empty", "no-question-mark", "identical",
  // "alignment-failure".
  std::string skip_reason;
  // Set when the record was emitted with its numbers unmodified.
  std::string note;
};

// Rephrases the record through the completion client, filters the result,
// then redraws its numbers. `round` 1 gives provenance icl, 2 icl_round2.
// Transport errors from the client are returned as errors.
absl::StatusOr<IclOutcome> IclRephrase(const corpus::MwpRecord& record,
                                       const llm::PromptTemplate& prompt,
                                       llm::CompletionClient& client,
                                       RandomSource& rng,
                                       const NumericModPolicy& policy,
                                       int round = 1);

}  // namespace mwpaug::augment

#endif  // MWPAUG_AUGMENT_ICL_H_
