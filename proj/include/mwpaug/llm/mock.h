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

#ifndef MWPAUG_LLM_MOCK_H_
#define MWPAUG_LLM_MOCK_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "mwpaug/llm/client.h"

namespace mwpaug::llm {

// Scripted offline stand-in for an endpoint. Entries are keyed by the full
// prompt or by the prompt's target text; a full-prompt entry wins. Unknown
// prompts complete to the empty string.
class MockLlm : public CompletionClient {
 public:
  MockLlm() = default;

  // JSONL, one {"prompt"|"target": ..., "completion": ...} object per line.
  static absl::StatusOr<MockLlm> Load(const std::filesystem::path& path);
  static absl::StatusOr<MockLlm> Parse(std::string_view content);

  void AddPrompt(std::string prompt, std::string completion);
  void AddTarget(std::string target, std::string completion);

  absl::StatusOr<std::string> Complete(std::string_view prompt,
                                       std::string_view stop_marker) override;

 private:
  std::map<std::string, std::string, std::less<>> by_prompt_;
  std::map<std::string, std::string, std::less<>> by_target_;
};

}  // namespace mwpaug::llm

#endif  // MWPAUG_LLM_MOCK_H_
