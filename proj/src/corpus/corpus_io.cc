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

#include "mwpaug/corpus/corpus_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace mwpaug::corpus {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::optional<std::string> StringField(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

std::optional<double> NumberValue(const json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc() && ptr == s.data() + s.size()) return out;
  }
  return std::nullopt;
}

std::string IdValue(const json& obj, const char* key, const std::string& fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  return fallback;
}

// Dataset equations sometimes omit the "X=" head ("( 8.0 - 5.0 )").
std::string EquationWithUnknown(std::string equation) {
  if (equation.find('=') == std::string::npos) return "X=" + equation;
  return equation;
}

// Fills `record` from one container element, or returns a reject reason.
std::optional<std::string> FromSvamp(const json& obj, size_t index,
                                     MwpRecord* record) {
  record->id = IdValue(obj, "ID", "svamp-" + std::to_string(index));
  auto body = StringField(obj, "Body");
  auto question = StringField(obj, "Question");
  auto equation = StringField(obj, "Equation");
  if (!body || !question) return "missing-field: Body/Question";
  if (!equation) return "missing-field: Equation";
  auto answer = obj.contains("Answer") ? NumberValue(obj["Answer"])
                                       : std::nullopt;
  if (!answer) return "missing-field: Answer";
  record->text = body->empty() ? *question : *body + " " + *question;
  record->equation = EquationWithUnknown(*equation);
  record->answer = *answer;
  return std::nullopt;
}

std::optional<std::string> FromMawps(const json& obj, size_t index,
                                     MwpRecord* record) {
  record->id = IdValue(obj, "iIndex", "mawps-" + std::to_string(index));
  auto question = StringField(obj, "sQuestion");
  if (!question) return "missing-field: sQuestion";
  auto eqs = obj.find("lEquations");
  auto sols = obj.find("lSolutions");
  if (eqs == obj.end() || !eqs->is_array() || eqs->empty() ||
      !(*eqs)[0].is_string()) {
    return "missing-field: lEquations";
  }
  if (eqs->size() > 1) return "multi-equation";
  if (sols == obj.end() || !sols->is_array() || sols->empty()) {
    return "missing-field: lSolutions";
  }
  if (sols->size() > 1) return "multi-equation";
  auto answer = NumberValue((*sols)[0]);
  if (!answer) return "missing-field: lSolutions";
  record->text = *question;
  record->equation = EquationWithUnknown((*eqs)[0].get<std::string>());
  record->answer = *answer;
  return std::nullopt;
}

std::optional<std::string> FromUnified(const json& obj, size_t index,
                                       MwpRecord* record) {
  auto id = StringField(obj, "id");
  record->id = id.value_or("line-" + std::to_string(index));
  if (!id) return "missing-field: id";
  auto text = StringField(obj, "text");
  auto equation = StringField(obj, "equation");
  if (!text) return "missing-field: text";
  if (!equation) return "missing-field: equation";
  auto answer =
      obj.contains("answer") ? NumberValue(obj["answer"]) : std::nullopt;
  if (!answer) return "missing-field: answer";
  record->text = *text;
  record->equation = *equation;
  record->answer = *answer;
  if (auto prov = obj.find("provenance"); prov != obj.end() && !prov->is_null()) {
    auto parsed = prov->is_string()
                      ? ParseProvenance(prov->get<std::string>())
                      : std::nullopt;
    if (!parsed) return "bad-field: provenance";
    record->provenance = *parsed;
  }
  if (auto parent = obj.find("parent_id");
      parent != obj.end() && !parent->is_null()) {
    if (!parent->is_string()) return "bad-field: parent_id";
    record->parent_id = parent->get<std::string>();
  }
  return std::nullopt;
}

void Admit(MwpRecord record, size_t index, std::optional<std::string> reject,
           LoadedCorpus* out) {
  if (!reject) {
    if (absl::Status status = ValidateRecord(record); !status.ok()) {
      reject = std::string(status.message());
    }
  }
  if (reject) {
    out->rejects.push_back(Reject{index, record.id, *std::move(reject)});
    return;
  }
  out->records.push_back(std::move(record));
}

bool IsBlank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name) {
  if (name == "svamp_json") return CorpusFormat::kSvampJson;
  if (name == "mawps_json") return CorpusFormat::kMawpsJson;
  if (name == "unified_jsonl") return CorpusFormat::kUnifiedJsonl;
  return std::nullopt;
}

std::string_view CorpusFormatName(CorpusFormat format) {
  switch (format) {
    case CorpusFormat::kSvampJson:
      return "svamp_json";
    case CorpusFormat::kMawpsJson:
      return "mawps_json";
    case CorpusFormat::kUnifiedJsonl:
      return "unified_jsonl";
  }
  return "unified_jsonl";
}

absl::StatusOr<LoadedCorpus> ParseCorpus(std::string_view content,
                                         CorpusFormat format) {
  LoadedCorpus out;
  if (IsBlank(content)) return out;

  if (format == CorpusFormat::kUnifiedJsonl) {
    size_t index = 0;
    size_t pos = 0;
    while (pos <= content.size()) {
      size_t eol = content.find('\n', pos);
      if (eol == std::string_view::npos) eol = content.size();
      std::string_view line = content.substr(pos, eol - pos);
      pos = eol + 1;
      if (IsBlank(line)) continue;
      MwpRecord record;
      json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
      if (obj.is_discarded() || !obj.is_object()) {
        record.id = "line-" + std::to_string(index);
        Admit(std::move(record), index, "malformed-json", &out);
      } else {
        auto reject = FromUnified(obj, index, &record);
        Admit(std::move(record), index, std::move(reject), &out);
      }
      ++index;
    }
    return out;
  }

  json root = json::parse(content, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded()) {
    return absl::InvalidArgumentError("malformed-container: invalid JSON");
  }
  if (!root.is_array()) {
    return absl::InvalidArgumentError(
        "malformed-container: expected a JSON array of problems");
  }
  for (size_t i = 0; i < root.size(); ++i) {
    MwpRecord record;
    std::optional<std::string> reject;
    if (!root[i].is_object()) {
      record.id = "item-" + std::to_string(i);
      reject = "malformed-json";
    } else if (format == CorpusFormat::kSvampJson) {
      reject = FromSvamp(root[i], i, &record);
    } else {
      reject = FromMawps(root[i], i, &record);
    }
    Admit(std::move(record), i, std::move(reject), &out);
  }
  return out;
}

absl::StatusOr<LoadedCorpus> LoadCorpus(const std::filesystem::path& path,
                                        CorpusFormat format) {
  auto content = ReadFile(path);
  if (!content.ok()) return content.status();
  return ParseCorpus(*content, format);
}

absl::StatusOr<std::string> SerializeCorpus(
    const std::vector<MwpRecord>& records) {
  std::string out;
  for (const MwpRecord& record : records) {
    if (absl::Status status = ValidateRecord(record); !status.ok()) {
      return absl::FailedPreconditionError(
          "invariant-violation: record " + record.id + ": " +
          std::string(status.message()));
    }
    ordered_json obj;
    obj["id"] = record.id;
    obj["text"] = record.text;
    obj["equation"] = record.equation;
    obj["answer"] = record.answer;
    obj["provenance"] = std::string(ProvenanceName(record.provenance));
    if (record.parent_id.has_value()) {
      obj["parent_id"] = *record.parent_id;
    } else {
      obj["parent_id"] = nullptr;
    }
    out += obj.dump(-1, ' ', false, json::error_handler_t::replace);
    out.push_back('\n');
  }
  return out;
}

absl::Status WriteCorpus(const std::vector<MwpRecord>& records,
                         const std::filesystem::path& path) {
  auto content = SerializeCorpus(records);
  if (!content.ok()) return content.status();
  return WriteFile(path, *content);
}

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError("io-failure: cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    return absl::DataLossError("io-failure: cannot read " + path.string());
  }
  return buffer.str();
}

absl::Status WriteFile(const std::filesystem::path& path,
                       std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      return absl::PermissionDeniedError("io-failure: cannot write " +
                                         tmp.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      return absl::DataLossError("io-failure: short write to " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    return absl::PermissionDeniedError("io-failure: cannot rename to " +
                                       path.string());
  }
  return absl::OkStatus();
}

}  // namespace mwpaug::corpus
