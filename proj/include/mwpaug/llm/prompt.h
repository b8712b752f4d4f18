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

#ifndef MWPAUG_LLM_PROMPT_H_
#define MWPAUG_LLM_PROMPT_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace mwpaug::llm {

inline constexpr size_t kExemplarCount = 15;

struct Exemplar {
  std::string text;
  std::string rephrased;
};

// Few-shot rephrasing prompt: an instruction, exactly 15 worked exemplars
// and the marker at which a completion is cut.
struct PromptTemplate {
  std::string instruction;
  std::vector<Exemplar> exemplars;
  std::string stop_marker = "\nText:";
};

absl::Status ValidateTemplate(const PromptTemplate& prompt_template);

// JSON object {"instruction", "stop_marker", "exemplars": [{"text",
// "rephrased"}, ...]}. The result is validated.
absl::StatusOr<PromptTemplate> ParsePromptTemplate(std::string_view json);
absl::StatusOr<PromptTemplate> LoadPromptTemplate(
    const std::filesystem::path& path);

// Templates compiled into the binary: "mawps" or "svamp".
absl::StatusOr<PromptTemplate> BundledTemplate(std::string_view dataset);

// instruction, a blank line, "Text: t\nRephrased: r\n" per exemplar, then
// "Text: target\nRephrased:".
std::string RenderPrompt(const PromptTemplate& prompt_template,
                         std::string_view target_text);

// The text of the last "Text: " line of a rendered prompt; empty when there
// is none.
std::string_view PromptTarget(std::string_view prompt);

}  // namespace mwpaug::llm

#endif  // MWPAUG_LLM_PROMPT_H_
