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

#ifndef MWPAUG_CORPUS_CORPUS_IO_H_
#define MWPAUG_CORPUS_CORPUS_IO_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "mwpaug/corpus/record.h"

namespace mwpaug::corpus {

enum class CorpusFormat { kSvampJson, kMawpsJson, kUnifiedJsonl };

// "svamp_json", "mawps_json", "unified_jsonl".
std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name);
std::string_view CorpusFormatName(CorpusFormat format);

// An input problem that did not become a record, with the reason.
struct Reject {
  size_t index = 0;  // position in the input container
  std::string id;
  std::string reason;
};

struct LoadedCorpus {
  std::vector<MwpRecord> records;
  std::vector<Reject> rejects;
};

// Input shapes:
//   svamp_json    JSON array; Body + " " + Question, Equation, Answer, ID
//   mawps_json    JSON array; sQuestion, lEquations[0], lSolutions[0], iIndex
//   unified_jsonl one object per line with the fields written by WriteCorpus
// Bad records land in `rejects`; only an unreadable file or a broken
// container fails the whole load.
absl::StatusOr<LoadedCorpus> LoadCorpus(const std::filesystem::path& path,
                                        CorpusFormat format);
absl::StatusOr<LoadedCorpus> ParseCorpus(std::string_view content,
                                         CorpusFormat format);

// Unified JSONL: one object per line, keys in the order
// id, text, equation, answer, provenance, parent_id; LF line endings.
// Refuses (and writes nothing) if any record fails ValidateRecord.
absl::StatusOr<std::string> SerializeCorpus(
    const std::vector<MwpRecord>& records);
absl::Status WriteCorpus(const std::vector<MwpRecord>& records,
                         const std::filesystem::path& path);

// Shared file helpers.
absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path);
absl::Status WriteFile(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace mwpaug::corpus

#endif  // MWPAUG_CORPUS_CORPUS_IO_H_
