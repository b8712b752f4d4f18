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

#ifndef MWPAUG_PIPELINE_CONFIG_H_
#define MWPAUG_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "mwpaug/augment/icl.h"
#include "mwpaug/augment/reverse.h"
#include "mwpaug/corpus/corpus_io.h"
#include "mwpaug/llm/client.h"

namespace mwpaug::pipeline {

enum class Method { kSynonym, kQuestionRepl, kReverse, kIcl };
// "synonym", "qr", "reverse", "icl".
std::string_view MethodName(Method method);
std::optional<Method> ParseMethod(std::string_view name);

enum class Variant { kV1, kV2, kV3, kV4 };
// "v1" .. "v4".
std::string_view VariantName(Variant variant);
std::optional<Variant> ParseVariant(std::string_view name);

// union: originals, QR and reverse outputs deduplicated together.
// concat: the QR set followed by the reverse set, each holding the originals.
enum class V1Mode { kUnion, kConcat };
enum class LexiconKind { kTsv, kWordnet };
enum class FixerKind { kIdentity, kLlm };

inline constexpr uint64_t kDefaultSeed = 20240101;

struct AugmentConfig {
  std::filesystem::path input;
  corpus::CorpusFormat format = corpus::CorpusFormat::kUnifiedJsonl;
  std::filesystem::path output_dir;
  std::vector<Method> methods;
  std::vector<Variant> combined;
  uint64_t seed = kDefaultSeed;

  std::optional<std::filesystem::path> lexicon;
  LexiconKind lexicon_kind = LexiconKind::kTsv;

  // Completion source for icl and the llm fixer: an endpoint or a mock file.
  std::optional<llm::LlmEndpointConfig> endpoint;
  std::optional<std::filesystem::path> mock_llm;
  // Bundled template name ("mawps", "svamp") or a template file.
  std::string prompt_template = "mawps";

  augment::NumericModPolicy policy;
  int max_replacements = 3;
  bool reverse_all = false;
  augment::SupportPosition reverse_support = augment::SupportPosition::kPrepend;
  V1Mode v1_mode = V1Mode::kUnion;
  FixerKind fixer = FixerKind::kIdentity;

  // Execution only; never affects output bytes.
  int workers = 1;
  bool timestamped = false;

  bool Has(Method method) const;
  bool Has(Variant variant) const;
};

// Cross-field rules: v1/v2 need qr and reverse, v2 a lexicon, v3/v4 icl;
// icl and the llm fixer need an endpoint or a mock. Reason tag "config".
absl::Status ValidateConfig(const AugmentConfig& config);

// The run.json echo: every field that can change the output. Workers are
// left out so runs at different parallelism compare byte-identical; the API
// key is never written.
std::string ConfigToJson(const AugmentConfig& config);

}  // namespace mwpaug::pipeline

#endif  // MWPAUG_PIPELINE_CONFIG_H_
