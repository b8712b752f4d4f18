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

#ifndef MWPAUG_PIPELINE_PIPELINE_H_
#define MWPAUG_PIPELINE_PIPELINE_H_

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "absl/status/statusor.h"
#include "mwpaug/augment/synonym.h"
#include "mwpaug/augment/text_fixer.h"
#include "mwpaug/corpus/record.h"
#include "mwpaug/llm/client.h"
#include "mwpaug/llm/prompt.h"
#include "mwpaug/pipeline/config.h"
#include "mwpaug/pipeline/stats.h"

namespace mwpaug::pipeline {

// Loaded collaborators a method may need. Pointers are borrowed.
struct MethodContext {
  const AugmentConfig* config = nullptr;
  const augment::SynonymLexicon* lexicon = nullptr;
  llm::CompletionClient* client = nullptr;
  const llm::PromptTemplate* prompt = nullptr;
  augment::TextFixer* fixer = nullptr;
};

struct MethodRun {
  // The input records followed by the method's emissions.
  std::vector<corpus::MwpRecord> records;
  std::vector<corpus::MwpRecord> emissions;
  MethodStats stats;
  std::vector<SkipEntry> skips;
};

// Runs one method over every record on config.workers threads. Output order
// follows input order. `round` only matters for icl. Errors: "config" when a
// needed collaborator is missing; llm transport errors.
absl::StatusOr<MethodRun> RunMethod(Method method,
                                    const std::vector<corpus::MwpRecord>& corpus,
                                    const MethodContext& context,
                                    int round = 1);

// (normalized lowercase text, canonical equation).
using DedupKey = std::tuple<std::string, std::string>;
DedupKey MakeDedupKey(const corpus::MwpRecord& record);

// Records of `base` followed by those of `additions` whose key is new; the
// first occurrence wins. `base` itself is copied as is.
std::vector<corpus::MwpRecord> Extend(
    const std::vector<corpus::MwpRecord>& base,
    const std::vector<corpus::MwpRecord>& additions);

// Method outputs the combined sets draw from; missing runs stay empty.
struct CombinedInputs {
  const std::vector<corpus::MwpRecord>* originals = nullptr;
  const MethodRun* question_repl = nullptr;
  const MethodRun* reverse = nullptr;
  const MethodRun* icl_round1 = nullptr;
  const MethodRun* icl_round2 = nullptr;
  // Synonym variants of every v1 record; required for v2.
  const MethodRun* synonym_of_v1 = nullptr;
};

// Builds one variant. v1 needs the QR and reverse runs, v2 additionally the
// synonym run over v1, v3/v4 the icl rounds. Error tag "missing-input-set".
absl::StatusOr<std::vector<corpus::MwpRecord>> BuildCombined(
    Variant variant, const CombinedInputs& inputs, V1Mode v1_mode);

}  // namespace mwpaug::pipeline

#endif  // MWPAUG_PIPELINE_PIPELINE_H_
