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

#include "mwpaug/pipeline/config.h"

#include <algorithm>
#include <array>

#include "json.hpp"

namespace mwpaug::pipeline {
namespace {

constexpr std::array<std::pair<Method, std::string_view>, 4> kMethodNames = {{
    {Method::kSynonym, "synonym"},
    {Method::kQuestionRepl, "qr"},
    {Method::kReverse, "reverse"},
    {Method::kIcl, "icl"},
}};

constexpr std::array<std::pair<Variant, std::string_view>, 4> kVariantNames = {{
    {Variant::kV1, "v1"},
    {Variant::kV2, "v2"},
    {Variant::kV3, "v3"},
    {Variant::kV4, "v4"},
}};

absl::Status ConfigError(const std::string& what) {
  return absl::InvalidArgumentError("config: " + what);
}

}  // namespace

std::string_view MethodName(Method method) {
  for (auto [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "?";
}

std::optional<Method> ParseMethod(std::string_view name) {
  for (auto [m, n] : kMethodNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

std::string_view VariantName(Variant variant) {
  for (auto [v, name] : kVariantNames) {
    if (v == variant) return name;
  }
  return "?";
}

std::optional<Variant> ParseVariant(std::string_view name) {
  for (auto [v, n] : kVariantNames) {
    if (n == name) return v;
  }
  return std::nullopt;
}

bool AugmentConfig::Has(Method method) const {
  return std::find(methods.begin(), methods.end(), method) != methods.end();
}

bool AugmentConfig::Has(Variant variant) const {
  return std::find(combined.begin(), combined.end(), variant) !=
         combined.end();
}

absl::Status ValidateConfig(const AugmentConfig& config) {
  if (config.input.empty()) return ConfigError("no input corpus");
  if (config.output_dir.empty()) return ConfigError("no output directory");
  if (config.methods.empty() && config.combined.empty()) {
    return ConfigError("nothing to do: no methods and no combined sets");
  }
  if (!config.combined.empty() &&
      (!config.Has(Method::kQuestionRepl) || !config.Has(Method::kReverse))) {
    return ConfigError("combined sets need methods qr and reverse");
  }
  if (config.Has(Variant::kV2) && !config.lexicon) {
    return ConfigError("v2 needs a lexicon");
  }
  if (config.Has(Method::kSynonym) && !config.lexicon) {
    return ConfigError("method synonym needs a lexicon");
  }
  if ((config.Has(Variant::kV3) || config.Has(Variant::kV4)) &&
      !config.Has(Method::kIcl)) {
    return ConfigError("v3 and v4 need method icl");
  }
  const bool needs_llm =
      config.Has(Method::kIcl) ||
      (config.fixer == FixerKind::kLlm && config.Has(Method::kQuestionRepl));
  if (needs_llm && !config.endpoint && !config.mock_llm) {
    return ConfigError("icl and the llm fixer need --llm-url or --mock-llm");
  }
  if (config.endpoint && config.mock_llm) {
    return ConfigError("--llm-url and --mock-llm are exclusive");
  }
  if (config.endpoint) {
    if (absl::Status s = llm::ValidateConfig(*config.endpoint); !s.ok()) {
      return ConfigError(std::string(s.message()));
    }
  }
  if (absl::Status s = augment::ValidatePolicy(config.policy); !s.ok()) {
    return ConfigError(std::string(s.message()));
  }
  if (config.max_replacements < 1) {
    return ConfigError("max replacements must be >= 1");
  }
  if (config.workers < 1) return ConfigError("workers must be >= 1");
  return absl::OkStatus();
}

std::string ConfigToJson(const AugmentConfig& config) {
  nlohmann::ordered_json j;
  j["input"] = config.input.string();
  j["format"] = std::string(corpus::CorpusFormatName(config.format));
  j["methods"] = nlohmann::json::array();
  for (Method m : config.methods) j["methods"].push_back(MethodName(m));
  j["combined"] = nlohmann::json::array();
  for (Variant v : config.combined) j["combined"].push_back(VariantName(v));
  j["seed"] = config.seed;
  if (config.lexicon) {
    j["lexicon"] = {{"path", config.lexicon->string()},
                    {"kind", config.lexicon_kind == LexiconKind::kTsv
                                 ? "tsv"
                                 : "wordnet"}};
  } else {
    j["lexicon"] = nullptr;
  }
  if (config.endpoint) {
    const auto& e = *config.endpoint;
    j["llm"] = {{"base_url", e.base_url},
                {"model", e.model_name},
                {"temperature", e.temperature},
                {"max_tokens", e.max_tokens},
                {"timeout_ms", e.timeout.count()},
                {"max_retries", e.max_retries},
                {"max_concurrent_requests", e.max_concurrent_requests}};
  } else {
    j["llm"] = nullptr;
  }
  j["mock_llm"] = config.mock_llm ? nlohmann::json(config.mock_llm->string())
                                  : nlohmann::json(nullptr);
  j["prompt_template"] = config.prompt_template;
  const auto& p = config.policy;
  j["numeric_policy"] = {{"int_range", {p.int_low, p.int_high}},
                         {"float_range", {p.float_low, p.float_high}},
                         {"float_decimals", p.float_decimals},
                         {"max_retries", p.max_retries}};
  j["max_replacements"] = config.max_replacements;
  j["reverse_all"] = config.reverse_all;
  j["reverse_support"] =
      config.reverse_support == augment::SupportPosition::kPrepend ? "prepend"
                                                                   : "append";
  j["v1_mode"] = config.v1_mode == V1Mode::kUnion ? "union" : "concat";
  j["fixer"] = config.fixer == FixerKind::kIdentity ? "identity" : "llm";
  return j.dump(2) + "\n";
}

}  // namespace mwpaug::pipeline
