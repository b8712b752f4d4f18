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

#include "mwpaug/pipeline/stats.h"

#include <fstream>

#include "json.hpp"
#include "mwpaug/corpus/corpus_io.h"

namespace mwpaug::pipeline {
namespace {

std::string Cell(const std::optional<size_t>& value) {
  return value ? std::to_string(*value) : "-";
}

std::string Reasons(const std::map<std::string, size_t>& counts) {
  if (counts.empty()) return "-";
  std::string out;
  for (const auto& [reason, n] : counts) {
    if (!out.empty()) out += ';';
    out += reason + "=" + std::to_string(n);
  }
  return out;
}

}  // namespace

size_t MethodStats::TotalSkipped() const {
  size_t total = 0;
  for (const auto& [reason, n] : skipped) total += n;
  return total;
}

absl::Status CheckAccounting(const RunStats& stats) {
  for (const MethodStats& m : stats.methods) {
    if (m.emitted + m.TotalSkipped() != m.inputs) {
      return absl::FailedPreconditionError(
          "invariant-violation: " + m.method + " round " +
          std::to_string(m.round) + ": emitted " + std::to_string(m.emitted) +
          " + skipped " + std::to_string(m.TotalSkipped()) + " != inputs " +
          std::to_string(m.inputs));
    }
  }
  return absl::OkStatus();
}

std::string FormatStatsTsv(const RunStats& stats) {
  std::string out =
      "dataset\ttrainset\tquestion_repl\treversing_question\tsynonym_repl\t"
      "icl\tcombined_v1\tcombined_v2\tcombined_v3\tcombined_v4\n";
  if (stats.trainset == 0) return out;
  out += stats.dataset + "\t" + std::to_string(stats.trainset) + "\t" +
         Cell(stats.question_repl) + "\t" + Cell(stats.reversing_question) +
         "\t" + Cell(stats.synonym_repl) + "\t" + Cell(stats.icl);
  for (const char* v : {"v1", "v2", "v3", "v4"}) {
    auto it = stats.combined.find(v);
    out += "\t" + (it == stats.combined.end() ? std::string("-")
                                              : std::to_string(it->second));
  }
  return out + "\n";
}

std::string FormatMethodStatsTsv(const RunStats& stats) {
  std::string out =
      "method\tround\tinputs\temitted\trecords_emitted\tskipped\tskip_reasons\t"
      "notes\n";
  for (const MethodStats& m : stats.methods) {
    out += m.method + "\t" + std::to_string(m.round) + "\t" +
           std::to_string(m.inputs) + "\t" + std::to_string(m.emitted) + "\t" +
           std::to_string(m.records_emitted) + "\t" +
           std::to_string(m.TotalSkipped()) + "\t" + Reasons(m.skipped) +
           "\t" + Reasons(m.notes) + "\n";
  }
  return out;
}

std::string FormatSkipLog(const std::vector<SkipEntry>& skips) {
  std::string out;
  for (const SkipEntry& s : skips) {
    nlohmann::ordered_json j = {{"method", s.method},
                                {"round", s.round},
                                {"id", s.id},
                                {"reason", s.reason}};
    out += j.dump() + "\n";
  }
  return out;
}

absl::Status EmitStats(const RunStats& stats, const std::filesystem::path& dir) {
  if (absl::Status s = CheckAccounting(stats); !s.ok()) return s;
  for (const auto& [name, content] :
       {std::pair{"stats.tsv", FormatStatsTsv(stats)},
        std::pair{"method_stats.tsv", FormatMethodStatsTsv(stats)},
        std::pair{"skips.jsonl", FormatSkipLog(stats.skips)}}) {
    if (absl::Status s = corpus::WriteFile(dir / name, content); !s.ok()) {
      return s;
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<RunStats> RecountStats(const std::filesystem::path& run_dir) {
  RunStats stats;
  auto run_json = corpus::ReadFile(run_dir / "run.json");
  if (!run_json.ok()) return run_json.status();
  try {
    const auto config = nlohmann::json::parse(*run_json);
    stats.dataset =
        std::filesystem::path(config.at("input").get<std::string>()).stem();
    stats.seed = config.at("seed").get<uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    return absl::DataLossError(std::string("run.json: ") + e.what());
  }

  auto count = [&](const std::filesystem::path& file)
      -> absl::StatusOr<std::optional<size_t>> {
    if (!std::filesystem::exists(file)) return std::optional<size_t>();
    auto loaded = corpus::LoadCorpus(file, corpus::CorpusFormat::kUnifiedJsonl);
    if (!loaded.ok()) return loaded.status();
    if (!loaded->rejects.empty()) {
      return absl::DataLossError(file.string() + ": " +
                                 loaded->rejects.front().reason);
    }
    if (stats.trainset == 0) {
      for (const auto& r : loaded->records) {
        if (r.provenance == corpus::Provenance::kOriginal) ++stats.trainset;
      }
    }
    return std::optional<size_t>(loaded->records.size());
  };

  const auto methods = run_dir / "methods";
  struct Column {
    const char* file;
    std::optional<size_t>* target;
  };
  for (Column c : {Column{"question_repl.jsonl", &stats.question_repl},
                   Column{"reverse.jsonl", &stats.reversing_question},
                   Column{"synonym.jsonl", &stats.synonym_repl},
                   Column{"icl.jsonl", &stats.icl}}) {
    auto n = count(methods / c.file);
    if (!n.ok()) return n.status();
    *c.target = *n;
  }
  for (const char* v : {"v1", "v2", "v3", "v4"}) {
    auto n = count(run_dir / "combined" / (std::string(v) + ".jsonl"));
    if (!n.ok()) return n.status();
    if (*n) stats.combined[v] = **n;
  }
  return stats;
}

}  // namespace mwpaug::pipeline
