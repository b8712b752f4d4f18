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

#include "mwpaug/llm/mock.h"

#include <utility>

#include "json.hpp"
#include "mwpaug/corpus/corpus_io.h"
#include "mwpaug/llm/prompt.h"

namespace mwpaug::llm {

absl::StatusOr<MockLlm> MockLlm::Load(const std::filesystem::path& path) {
  auto content = corpus::ReadFile(path);
  if (!content.ok()) return content.status();
  return Parse(*content);
}

absl::StatusOr<MockLlm> MockLlm::Parse(std::string_view content) {
  MockLlm mock;
  int line_no = 0;
  while (!content.empty()) {
    const size_t nl = content.find('\n');
    const std::string_view line = content.substr(0, nl);
    content.remove_prefix(nl == std::string_view::npos ? content.size()
                                                        : nl + 1);
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      const auto doc = nlohmann::json::parse(line);
      std::string completion = doc.at("completion").get<std::string>();
      if (doc.contains("prompt")) {
        mock.AddPrompt(doc.at("prompt").get<std::string>(),
                       std::move(completion));
      } else {
        mock.AddTarget(doc.at("target").get<std::string>(),
                       std::move(completion));
      }
    } catch (const nlohmann::json::exception& e) {
      return absl::InvalidArgumentError("mock: line " +
                                        std::to_string(line_no) + ": " +
                                        e.what());
    }
  }
  return mock;
}

void MockLlm::AddPrompt(std::string prompt, std::string completion) {
  by_prompt_.insert_or_assign(std::move(prompt), std::move(completion));
}

void MockLlm::AddTarget(std::string target, std::string completion) {
  by_target_.insert_or_assign(std::move(target), std::move(completion));
}

absl::StatusOr<std::string> MockLlm::Complete(std::string_view prompt,
                                              std::string_view stop_marker) {
  if (auto it = by_prompt_.find(prompt); it != by_prompt_.end()) {
    return TruncateCompletion(it->second, stop_marker);
  }
  if (auto it = by_target_.find(PromptTarget(prompt)); it != by_target_.end()) {
    return TruncateCompletion(it->second, stop_marker);
  }
  return std::string();
}

}  // namespace mwpaug::llm
