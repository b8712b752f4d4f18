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

#ifndef MWPAUG_PIPELINE_STATS_H_
#define MWPAUG_PIPELINE_STATS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace mwpaug::pipeline {

struct SkipEntry {
  std::string method;
  int round = 1;
  std::string id;
  std::string reason;
};

// Per-method accounting. `emitted` counts inputs that produced output, so
// emitted + skipped == inputs; `records_emitted` can exceed it under
// --reverse-all.
struct MethodStats {
  std::string method;
  int round = 1;
  size_t inputs = 0;
  size_t emitted = 0;
  size_t records_emitted = 0;
  std::map<std::string, size_t> skipped;
  // Emitted with a caveat, e.g. numbers left unmodified.
  std::map<std::string, size_t> notes;

  size_t TotalSkipped() const;
};

// Summary table columns. Method and variant sizes count records in the
// written sets (originals included); absent entries print as "-".
struct RunStats {
  std::string dataset;
  uint64_t seed = 0;
  size_t trainset = 0;
  std::optional<size_t> question_repl;
  std::optional<size_t> reversing_question;
  std::optional<size_t> synonym_repl;
  std::optional<size_t> icl;
  std::map<std::string, size_t> combined;  // "v1" .. "v4"
  std::vector<MethodStats> methods;
  std::vector<SkipEntry> skips;
};

absl::Status CheckAccounting(const RunStats& stats);

// "dataset trainset question_repl reversing_question synonym_repl icl
// combined_v1..combined_v4" then one row; a run over zero records writes the
// header only.
std::string FormatStatsTsv(const RunStats& stats);
// method round inputs emitted records_emitted skipped skip_reasons notes
std::string FormatMethodStatsTsv(const RunStats& stats);
// One {"method","round","id","reason"} object per line.
std::string FormatSkipLog(const std::vector<SkipEntry>& skips);

// Writes stats.tsv, method_stats.tsv and skips.jsonl into `dir`. Refuses,
// writing nothing, when any method's emitted + skipped != inputs.
absl::Status EmitStats(const RunStats& stats, const std::filesystem::path& dir);

// Recounts the summary row from an existing run directory.
absl::StatusOr<RunStats> RecountStats(const std::filesystem::path& run_dir);

}  // namespace mwpaug::pipeline

#endif  // MWPAUG_PIPELINE_STATS_H_
