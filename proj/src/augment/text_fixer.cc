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

#include "mwpaug/augment/text_fixer.h"

namespace mwpaug::augment {

std::string LlmTextFixer::RenderPrompt(std::string_view sentence) {
  std::string prompt =
      "Correct the grammar of the text. Keep every number unchanged and keep "
      "it a question.\n\nText: ";
  prompt += sentence;
  prompt += "\nFixed:";
  return prompt;
}

absl::StatusOr<std::string> LlmTextFixer::Fix(std::string_view sentence) {
  auto fixed = client_.Complete(RenderPrompt(sentence), "\n");
  if (!fixed.ok()) return fixed.status();
  // An empty completion means the endpoint had nothing to offer.
  if (fixed->empty()) return std::string(sentence);
  return fixed;
}

}  // namespace mwpaug::augment
