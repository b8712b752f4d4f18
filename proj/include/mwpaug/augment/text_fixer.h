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

#ifndef MWPAUG_AUGMENT_TEXT_FIXER_H_
#define MWPAUG_AUGMENT_TEXT_FIXER_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "mwpaug/llm/client.h"

namespace mwpaug::augment {

// Grammar repair for a spliced sentence. Callers check that the result keeps
// every number and the final '?', and fall back to the input if not.
class TextFixer {
 public:
  virtual ~TextFixer() = default;
  virtual absl::StatusOr<std::string> Fix(std::string_view sentence) = 0;
};

class IdentityFixer : public TextFixer {
 public:
  absl::StatusOr<std::string> Fix(std::string_view sentence) override {
    return std::string(sentence);
  }
};

// Asks a completion endpoint to correct the sentence. The prompt ends with
// "Text: <sentence>\nFixed:" so the offline mock can key it by target.
class LlmTextFixer : public TextFixer {
 public:
  explicit LlmTextFixer(llm::CompletionClient& client) : client_(client) {}
  absl::StatusOr<std::string> Fix(std::string_view sentence) override;

  static std::string RenderPrompt(std::string_view sentence);

 private:
  llm::CompletionClient& client_;
};

}  // namespace mwpaug::augment

#endif  // MWPAUG_AUGMENT_TEXT_FIXER_H_
