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

#include "mwpaug/cli/cli.h"

#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mwpaug/corpus/corpus_io.h"
#include "mwpaug/pipeline/config.h"
#include "mwpaug/pipeline/run.h"
#include "mwpaug/pipeline/stats.h"

namespace mwpaug::cli {
namespace {

using pipeline::AugmentConfig;

// Raw flag values; turned into an AugmentConfig after parsing.
struct AugmentFlags {
  std::string input;
  std::string format = "unified_jsonl";
  std::string out = "runs";
  std::vector<std::string> methods;
  std::vector<std::string> combined;
  uint64_t seed = pipeline::kDefaultSeed;
  std::string lexicon;
  std::string lexicon_kind = "tsv";
  std::string llm_url;
  std::string llm_model;
  double llm_temperature = 0.7;
  int llm_max_tokens = 256;
  int llm_timeout_ms = 60000;
  int llm_retries = 3;
  int llm_concurrency = 4;
  std::string mock_llm;
  std::string prompt_template = "mawps";
  augment::NumericModPolicy policy;
  int max_replacements = 3;
  bool reverse_all = false;
  std::string reverse_support = "prepend";
  std::string v1_mode = "union";
  std::string fixer = "identity";
  int workers = 1;
  bool timestamped = false;
};

struct ValidateFlags {
  std::string input;
  std::string format = "unified_jsonl";
};

struct StatsFlags {
  std::string run_dir;
};

int ExitCodeFor(const absl::Status& status) {
  switch (pipeline::ClassifyError(status)) {
    case pipeline::ErrorClass::kConfig:
      return kExitConfig;
    case pipeline::ErrorClass::kTransport:
      return kExitTransport;
    case pipeline::ErrorClass::kData:
      return kExitData;
  }
  return kExitData;
}

absl::Status ConfigError(const std::string& what) {
  return absl::InvalidArgumentError("config: " + what);
}

absl::StatusOr<corpus::CorpusFormat> FormatFlag(const std::string& name) {
  auto format = corpus::ParseCorpusFormat(name);
  if (!format) return ConfigError("unknown --format " + name);
  return *format;
}

absl::StatusOr<AugmentConfig> BuildConfig(const AugmentFlags& f) {
  AugmentConfig c;
  c.input = f.input;
  auto format = FormatFlag(f.format);
  if (!format.ok()) return format.status();
  c.format = *format;
  c.output_dir = f.out;
  for (const std::string& name : f.methods) {
    auto m = pipeline::ParseMethod(name);
    if (!m) return ConfigError("unknown method " + name);
    if (!c.Has(*m)) c.methods.push_back(*m);
  }
  for (const std::string& name : f.combined) {
    auto v = pipeline::ParseVariant(name);
    if (!v) return ConfigError("unknown combined set " + name);
    if (!c.Has(*v)) c.combined.push_back(*v);
  }
  c.seed = f.seed;
  if (!f.lexicon.empty()) c.lexicon = f.lexicon;
  if (f.lexicon_kind == "tsv") {
    c.lexicon_kind = pipeline::LexiconKind::kTsv;
  } else if (f.lexicon_kind == "wordnet") {
    c.lexicon_kind = pipeline::LexiconKind::kWordnet;
  } else {
    return ConfigError("unknown --lexicon-kind " + f.lexicon_kind);
  }
  if (!f.llm_url.empty()) {
    llm::LlmEndpointConfig e;
    e.base_url = f.llm_url;
    e.model_name = f.llm_model;
    e.temperature = f.llm_temperature;
    e.max_tokens = f.llm_max_tokens;
    e.timeout = std::chrono::milliseconds(f.llm_timeout_ms);
    e.max_retries = f.llm_retries;
    e.max_concurrent_requests = f.llm_concurrency;
    c.endpoint = e;
  }
  if (!f.mock_llm.empty()) c.mock_llm = f.mock_llm;
  c.prompt_template = f.prompt_template;
  c.policy = f.policy;
  c.max_replacements = f.max_replacements;
  c.reverse_all = f.reverse_all;
  if (f.reverse_support == "prepend") {
    c.reverse_support = augment::SupportPosition::kPrepend;
  } else if (f.reverse_support == "append") {
    c.reverse_support = augment::SupportPosition::kAppend;
  } else {
    return ConfigError("unknown --reverse-support " + f.reverse_support);
  }
  if (f.v1_mode == "union") {
    c.v1_mode = pipeline::V1Mode::kUnion;
  } else if (f.v1_mode == "concat") {
    c.v1_mode = pipeline::V1Mode::kConcat;
  } else {
    return ConfigError("unknown --v1-mode " + f.v1_mode);
  }
  if (f.fixer == "identity") {
    c.fixer = pipeline::FixerKind::kIdentity;
  } else if (f.fixer == "llm") {
    c.fixer = pipeline::FixerKind::kLlm;
  } else {
    return ConfigError("unknown --fixer " + f.fixer);
  }
  c.workers = f.workers;
  c.timestamped = f.timestamped;
  return c;
}

int Augment(const AugmentFlags& flags, std::ostream& out, std::ostream& err) {
  auto config = BuildConfig(flags);
  if (!config.ok()) {
    err << "mwpaug: " << config.status().message() << "\n";
    return kExitConfig;
  }
  err << "seed: " << config->seed << "\n";
  auto result = pipeline::RunAugment(*config);
  if (!result.ok()) {
    err << "mwpaug: " << result.status().message() << "\n";
    return ExitCodeFor(result.status());
  }
  out << "run: " << result->run_dir.string() << "\n"
      << pipeline::FormatStatsTsv(result->stats);
  return kExitOk;
}

// Reason tag of a reject, e.g. "parse-error" from "parse-error: ...".
std::string Tag(const std::string& reason) {
  return reason.substr(0, reason.find(':'));
}

int Validate(const ValidateFlags& flags, std::ostream& out, std::ostream& err) {
  auto format = FormatFlag(flags.format);
  if (!format.ok()) {
    err << "mwpaug: " << format.status().message() << "\n";
    return kExitConfig;
  }
  auto loaded = corpus::LoadCorpus(flags.input, *format);
  if (!loaded.ok()) {
    err << "mwpaug: " << loaded.status().message() << "\n";
    return kExitData;
  }
  const size_t total = loaded->records.size() + loaded->rejects.size();
  size_t equation_failures = 0;
  size_t answer_failures = 0;
  std::map<std::string, size_t> tally;
  for (const auto& r : loaded->rejects) {
    const std::string tag = Tag(r.reason);
    ++tally[tag];
    if (tag == "parse-error" || tag == "unknown-count" ||
        tag == "multi-equation" || tag == "unsolvable") {
      ++equation_failures;
    } else if (tag == "answer-mismatch") {
      ++answer_failures;
    }
  }
  // Equation check: parses with exactly one unknown and solves. Answer check:
  // the solved value matches the stored answer.
  out << "records: " << total << "\n"
      << "equation-check: " << total - equation_failures << "/" << total
      << "\n"
      << "answer-check: " << total - equation_failures - answer_failures
      << "/" << total - equation_failures << "\n"
      << "consistent: " << loaded->records.size() << "/" << total << "\n";
  for (const auto& [tag, n] : tally) out << "reject " << tag << ": " << n << "\n";
  for (const auto& r : loaded->rejects) {
    err << "reject #" << r.index << " (" << r.id << "): " << r.reason << "\n";
  }
  return loaded->rejects.empty() ? kExitOk : kExitData;
}

int Stats(const StatsFlags& flags, std::ostream& out, std::ostream& err) {
  const std::filesystem::path dir = flags.run_dir;
  auto recount = pipeline::RecountStats(dir);
  if (!recount.ok()) {
    err << "mwpaug: " << recount.status().message() << "\n";
    return kExitData;
  }
  const std::string table = pipeline::FormatStatsTsv(*recount);
  out << table;
  if (std::filesystem::exists(dir / "stats.tsv")) {
    auto written = corpus::ReadFile(dir / "stats.tsv");
    if (!written.ok() || *written != table) {
      err << "mwpaug: stats.tsv disagrees with the recounted sets\n";
      return kExitData;
    }
  }
  return kExitOk;
}

void AddAugmentFlags(CLI::App& app, AugmentFlags& f) {
  app.add_option("--input", f.input, "Input corpus")->required();
  app.add_option("--format", f.format,
                 "svamp_json | mawps_json | unified_jsonl")
      ->capture_default_str();
  app.add_option("--out", f.out, "Output directory")->capture_default_str();
  app.add_option("--methods", f.methods, "synonym,qr,reverse,icl")
      ->delimiter(',');
  app.add_option("--combined", f.combined, "v1,v2,v3,v4")->delimiter(',');
  app.add_option("--seed", f.seed, "64-bit run seed")->capture_default_str();
  app.add_option("--lexicon", f.lexicon, "Synonym lexicon (file or dir)");
  app.add_option("--lexicon-kind", f.lexicon_kind, "tsv | wordnet")
      ->capture_default_str();
  app.add_option("--llm-url", f.llm_url, "Completions endpoint base URL");
  app.add_option("--llm-model", f.llm_model, "Model name");
  app.add_option("--llm-temperature", f.llm_temperature)->capture_default_str();
  app.add_option("--llm-max-tokens", f.llm_max_tokens)->capture_default_str();
  app.add_option("--llm-timeout-ms", f.llm_timeout_ms)->capture_default_str();
  app.add_option("--llm-retries", f.llm_retries)->capture_default_str();
  app.add_option("--llm-concurrency", f.llm_concurrency)->capture_default_str();
  app.add_option("--mock-llm", f.mock_llm, "Scripted completions (JSONL)");
  app.add_option("--template", f.prompt_template,
                 "mawps | svamp | template JSON file")
      ->capture_default_str();
  app.add_option("--int-low", f.policy.int_low)->capture_default_str();
  app.add_option("--int-high", f.policy.int_high)->capture_default_str();
  app.add_option("--float-low", f.policy.float_low)->capture_default_str();
  app.add_option("--float-high", f.policy.float_high)->capture_default_str();
  app.add_option("--float-decimals", f.policy.float_decimals)
      ->capture_default_str();
  app.add_option("--max-retries", f.policy.max_retries,
                 "Numeric redraws per icl record")
      ->capture_default_str();
  app.add_option("--max-replacements", f.max_replacements)
      ->capture_default_str();
  app.add_flag("--reverse-all", f.reverse_all,
               "Emit every reversible statement");
  app.add_option("--reverse-support", f.reverse_support, "prepend | append")
      ->capture_default_str();
  app.add_option("--v1-mode", f.v1_mode, "union | concat")
      ->capture_default_str();
  app.add_option("--fixer", f.fixer, "identity | llm")->capture_default_str();
  app.add_option("--workers", f.workers)->capture_default_str();
  app.add_flag("--timestamped", f.timestamped,
               "Append a UTC timestamp to the run directory");
}

}  // namespace

int RunMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Math word problem augmentation"};
  app.name("mwpaug");
  app.require_subcommand(1);

  AugmentFlags augment_flags;
  auto* augment = app.add_subcommand("augment", "Run methods and combined sets");
  AddAugmentFlags(*augment, augment_flags);

  ValidateFlags validate_flags;
  auto* validate = app.add_subcommand("validate", "Audit a corpus");
  validate->add_option("--input", validate_flags.input)->required();
  validate->add_option("--format", validate_flags.format)
      ->capture_default_str();

  StatsFlags stats_flags;
  auto* stats = app.add_subcommand("stats", "Recount a run directory");
  stats->add_option("--run", stats_flags.run_dir, "Run directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mwpaug: config: " << e.what() << "\n";
    return kExitConfig;
  }

  if (augment->parsed()) return Augment(augment_flags, out, err);
  if (validate->parsed()) return Validate(validate_flags, out, err);
  return Stats(stats_flags, out, err);
}

}  // namespace mwpaug::cli
