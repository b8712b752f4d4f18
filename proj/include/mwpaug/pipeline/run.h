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

#ifndef MWPAUG_PIPELINE_RUN_H_
#define MWPAUG_PIPELINE_RUN_H_

#include <filesystem>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "mwpaug/llm/client.h"
#include "mwpaug/pipeline/config.h"
#include "mwpaug/pipeline/stats.h"

namespace mwpaug::pipeline {

enum class ErrorClass { kConfig, kData, kTransport };

// Config errors carry the "config" tag, transport errors the
// "transport-failure", "timeout" or "endpoint-error" tags; everything else
// is a data error.
ErrorClass ClassifyError(const absl::Status& status);

struct RunResult {
  std::filesystem::path run_dir;
  RunStats stats;
};

// "run-seed<seed>", with "-<UTC timestamp>" appended when timestamped.
std::string RunDirName(const AugmentConfig& config);

// Loads the corpus and collaborators, runs the configured methods and
// combined sets and writes:
//   run.json, rejects.jsonl, methods/<method>.jsonl, combined/<v>.jsonl,
//   stats.tsv, method_stats.tsv, skips.jsonl
// under output_dir/RunDirName(). An existing run directory (one holding a
// run.json) is replaced. `client` overrides the configured completion source.
absl::StatusOr<RunResult> RunAugment(const AugmentConfig& config,
                                     llm::CompletionClient* client = nullptr);

}  // namespace mwpaug::pipeline

#endif  // MWPAUG_PIPELINE_RUN_H_
