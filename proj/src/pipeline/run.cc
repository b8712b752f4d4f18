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

#include "mwpaug/pipeline/run.h"

#include <chrono>
#include <ctime>
#include <memory>
#include <optional>

#include "json.hpp"
#include "mwpaug/augment/synonym.h"
#include "mwpaug/augment/text_fixer.h"
#include "mwpaug/corpus/corpus_io.h"
#include "mwpaug/llm/mock.h"
#include "mwpaug/llm/prompt.h"
#include "mwpaug/pipeline/pipeline.h"

namespace mwpaug::pipeline {
namespace {

using corpus::MwpRecord;

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

absl::Status AsConfigError(const absl::Status& status, const std::string& what) {
  return absl::InvalidArgumentError("config: " + what + ": " +
                                    std::string(status.message()));
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

std::string RejectLog(const std::vector<corpus::Reject>& rejects) {
  std::string out;
  for (const auto& r : rejects) {
    nlohmann::ordered_json j = {
        {"index", r.index}, {"id", r.id}, {"reason", r.reason}};
    out += j.dump() + "\n";
  }
  return out;
}

std::string_view MethodFile(Method method) {
  switch (method) {
    case Method::kSynonym:
      return "synonym";
    case Method::kQuestionRepl:
      return "question_repl";
    case Method::kReverse:
      return "reverse";
    case Method::kIcl:
      return "icl";
  }
  return "unknown";
}

}  // namespace

ErrorClass ClassifyError(const absl::Status& status) {
  const std::string message(status.message());
  if (StartsWith(message, "config")) return ErrorClass::kConfig;
  if (StartsWith(message, "transport-failure") ||
      StartsWith(message, "timeout") || StartsWith(message, "endpoint-error")) {
    return ErrorClass::kTransport;
  }
  return ErrorClass::kData;
}

std::string RunDirName(const AugmentConfig& config) {
  std::string name = "run-seed" + std::to_string(config.seed);
  if (config.timestamped) name += "-" + UtcTimestamp();
  return name;
}

absl::StatusOr<RunResult> RunAugment(const AugmentConfig& config,
                                     llm::CompletionClient* client) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;

  auto loaded = corpus::LoadCorpus(config.input, config.format);
  if (!loaded.ok()) {
    return absl::Status(loaded.status().code(),
                        "data: " + std::string(loaded.status().message()));
  }
  const std::vector<MwpRecord>& originals = loaded->records;

  std::optional<augment::SynonymLexicon> lexicon;
  if (config.lexicon) {
    auto lex = config.lexicon_kind == LexiconKind::kTsv
                   ? augment::LoadLexiconTsv(*config.lexicon)
                   : augment::LoadLexiconWordnet(*config.lexicon);
    if (!lex.ok()) return AsConfigError(lex.status(), "lexicon");
    lexicon = *std::move(lex);
  }

  std::unique_ptr<llm::CompletionClient> owned_client;
  const bool needs_llm =
      config.Has(Method::kIcl) ||
      (config.fixer == FixerKind::kLlm && config.Has(Method::kQuestionRepl));
  if (client == nullptr && needs_llm) {
    if (config.mock_llm) {
      auto mock = llm::MockLlm::Load(*config.mock_llm);
      if (!mock.ok()) return AsConfigError(mock.status(), "mock llm");
      owned_client = std::make_unique<llm::MockLlm>(*std::move(mock));
    } else if (config.endpoint) {
      auto endpoint =
          llm::EndpointClient::Create(llm::WithEnvironmentKey(*config.endpoint));
      if (!endpoint.ok()) return AsConfigError(endpoint.status(), "llm");
      owned_client = *std::move(endpoint);
    }
    client = owned_client.get();
  }

  std::optional<llm::PromptTemplate> prompt;
  if (config.Has(Method::kIcl)) {
    auto t = config.prompt_template == "mawps" ||
                     config.prompt_template == "svamp"
                 ? llm::BundledTemplate(config.prompt_template)
                 : llm::LoadPromptTemplate(config.prompt_template);
    if (!t.ok()) return AsConfigError(t.status(), "prompt template");
    prompt = *std::move(t);
  }

  augment::IdentityFixer identity_fixer;
  std::optional<augment::LlmTextFixer> llm_fixer;
  augment::TextFixer* fixer = &identity_fixer;
  if (config.fixer == FixerKind::kLlm && client != nullptr) {
    llm_fixer.emplace(*client);
    fixer = &*llm_fixer;
  }

  MethodContext context;
  context.config = &config;
  context.lexicon = lexicon ? &*lexicon : nullptr;
  context.client = client;
  context.prompt = prompt ? &*prompt : nullptr;
  context.fixer = fixer;

  RunStats stats;
  stats.dataset = config.input.stem().string();
  stats.seed = config.seed;
  stats.trainset = originals.size();

  // Fixed method order keeps the skip log and stats stable.
  std::map<Method, MethodRun> runs;
  for (Method m : {Method::kSynonym, Method::kQuestionRepl, Method::kReverse,
                   Method::kIcl}) {
    if (!config.Has(m)) continue;
    auto run = RunMethod(m, originals, context);
    if (!run.ok()) return run.status();
    runs.emplace(m, *std::move(run));
  }
  std::optional<MethodRun> icl_round2;
  if (config.Has(Variant::kV4)) {
    auto run = RunMethod(Method::kIcl, originals, context, 2);
    if (!run.ok()) return run.status();
    icl_round2 = *std::move(run);
  }

  std::map<Variant, std::vector<MwpRecord>> combined;
  std::optional<MethodRun> synonym_of_v1;
  if (!config.combined.empty()) {
    CombinedInputs inputs;
    inputs.originals = &originals;
    inputs.question_repl = &runs.at(Method::kQuestionRepl);
    inputs.reverse = &runs.at(Method::kReverse);
    if (auto it = runs.find(Method::kIcl); it != runs.end()) {
      inputs.icl_round1 = &it->second;
    }
    if (icl_round2) inputs.icl_round2 = &*icl_round2;
    if (config.Has(Variant::kV2)) {
      auto v1 = BuildCombined(Variant::kV1, inputs, config.v1_mode);
      if (!v1.ok()) return v1.status();
      auto run = RunMethod(Method::kSynonym, *v1, context);
      if (!run.ok()) return run.status();
      synonym_of_v1 = *std::move(run);
      inputs.synonym_of_v1 = &*synonym_of_v1;
    }
    for (Variant v : {Variant::kV1, Variant::kV2, Variant::kV3, Variant::kV4}) {
      if (!config.Has(v)) continue;
      auto set = BuildCombined(v, inputs, config.v1_mode);
      if (!set.ok()) return set.status();
      combined.emplace(v, *std::move(set));
    }
  }

  for (auto& [m, run] : runs) {
    const size_t size = run.records.size();
    switch (m) {
      case Method::kSynonym:
        stats.synonym_repl = size;
        break;
      case Method::kQuestionRepl:
        stats.question_repl = size;
        break;
      case Method::kReverse:
        stats.reversing_question = size;
        break;
      case Method::kIcl:
        stats.icl = size;
        break;
    }
  }
  auto add_run = [&stats](const MethodRun& run) {
    stats.methods.push_back(run.stats);
    stats.skips.insert(stats.skips.end(), run.skips.begin(), run.skips.end());
  };
  for (auto& [m, run] : runs) add_run(run);
  if (icl_round2) add_run(*icl_round2);
  if (synonym_of_v1) {
    MethodRun tagged = *synonym_of_v1;
    tagged.stats.method = "synonym_v2";
    for (auto& s : tagged.skips) s.method = "synonym_v2";
    add_run(tagged);
  }
  for (auto& [v, set] : combined) {
    stats.combined[std::string(VariantName(v))] = set.size();
  }
  if (absl::Status s = CheckAccounting(stats); !s.ok()) return s;

  // Serialize every set before touching the disk so a bad record writes
  // nothing.
  std::vector<std::pair<std::filesystem::path, std::string>> files;
  files.emplace_back("run.json", [&] {
    if (!config.timestamped) return ConfigToJson(config);
    auto j = nlohmann::ordered_json::parse(ConfigToJson(config));
    j["started_at"] = UtcTimestamp();
    return j.dump(2) + "\n";
  }());
  files.emplace_back("rejects.jsonl", RejectLog(loaded->rejects));
  for (auto& [m, run] : runs) {
    auto text = corpus::SerializeCorpus(run.records);
    if (!text.ok()) return text.status();
    files.emplace_back(std::filesystem::path("methods") /
                           (std::string(MethodFile(m)) + ".jsonl"),
                       *std::move(text));
  }
  if (icl_round2) {
    auto text = corpus::SerializeCorpus(icl_round2->records);
    if (!text.ok()) return text.status();
    files.emplace_back("methods/icl_round2.jsonl", *std::move(text));
  }
  for (auto& [v, set] : combined) {
    auto text = corpus::SerializeCorpus(set);
    if (!text.ok()) return text.status();
    files.emplace_back(std::filesystem::path("combined") /
                           (std::string(VariantName(v)) + ".jsonl"),
                       *std::move(text));
  }

  RunResult result;
  result.run_dir = config.output_dir / RunDirName(config);
  std::error_code ec;
  if (std::filesystem::exists(result.run_dir / "run.json")) {
    std::filesystem::remove_all(result.run_dir, ec);
    if (ec) {
      return absl::InternalError("io-failure: cannot replace " +
                                 result.run_dir.string() + ": " + ec.message());
    }
  }
  for (const auto& [rel, content] : files) {
    if (absl::Status s = corpus::WriteFile(result.run_dir / rel, content);
        !s.ok()) {
      return s;
    }
  }
  if (absl::Status s = EmitStats(stats, result.run_dir); !s.ok()) return s;
  result.stats = std::move(stats);
  return result;
}

}  // namespace mwpaug::pipeline
