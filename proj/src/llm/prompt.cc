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

#include "mwpaug/llm/prompt.h"

#include <utility>

#include "embedded.h"
#include "json.hpp"
#include "mwpaug/corpus/corpus_io.h"

namespace mwpaug::llm {

absl::Status ValidateTemplate(const PromptTemplate& prompt_template) {
  if (prompt_template.exemplars.size() != kExemplarCount) {
    return absl::InvalidArgumentError(
        "template: expected " + std::to_string(kExemplarCount) +
        " exemplars, got " + std::to_string(prompt_template.exemplars.size()));
  }
  if (prompt_template.instruction.empty()) {
    return absl::InvalidArgumentError("template: empty instruction");
  }
  if (prompt_template.stop_marker.empty()) {
    return absl::InvalidArgumentError("template: empty stop marker");
  }
  return absl::OkStatus();
}

absl::StatusOr<PromptTemplate> ParsePromptTemplate(std::string_view json) {
  PromptTemplate out;
  try {
    const auto doc = nlohmann::json::parse(json);
    out.instruction = doc.at("instruction").get<std::string>();
    if (doc.contains("stop_marker")) {
      out.stop_marker = doc.at("stop_marker").get<std::string>();
    }
    for (const auto& e : doc.at("exemplars")) {
      out.exemplars.push_back({e.at("text").get<std::string>(),
                               e.at("rephrased").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(std::string("template: ") + e.what());
  }
  if (absl::Status s = ValidateTemplate(out); !s.ok()) return s;
  return out;
}

absl::StatusOr<PromptTemplate> LoadPromptTemplate(
    const std::filesystem::path& path) {
  auto content = corpus::ReadFile(path);
  if (!content.ok()) return content.status();
  return ParsePromptTemplate(*content);
}

absl::StatusOr<PromptTemplate> BundledTemplate(std::string_view dataset) {
  auto file =
      embedded::File("prompts/" + std::string(dataset) + "_template.json");
  if (!file) {
    return absl::NotFoundError("no bundled template for '" +
                               std::string(dataset) + "'");
  }
  return ParsePromptTemplate(*file);
}

std::string RenderPrompt(const PromptTemplate& prompt_template,
                         std::string_view target_text) {
  std::string out = prompt_template.instruction;
  out += "\n\n";
  for (const Exemplar& e : prompt_template.exemplars) {
    out += "Text: ";
    out += e.text;
    out += "\nRephrased: ";
    out += e.rephrased;
    out += '\n';
  }
  out += "Text: ";
  out += target_text;
  out += "\nRephrased:";
  return out;
}

std::string_view PromptTarget(std::string_view prompt) {
  constexpr std::string_view kMarker = "Text: ";
  size_t pos = prompt.rfind("\nText: ");
  if (pos != std::string_view::npos) {
    pos += 1;
  } else if (prompt.substr(0, kMarker.size()) == kMarker) {
    pos = 0;
  } else {
    return {};
  }
  std::string_view rest = prompt.substr(pos + kMarker.size());
  return rest.substr(0, rest.find('\n'));
}

}  // namespace mwpaug::llm
