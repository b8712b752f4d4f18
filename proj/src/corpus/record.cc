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

#include "mwpaug/corpus/record.h"

#include <cmath>
#include <string>

#include "mwpaug/corpus/numbers.h"
#include "mwpaug/mathexpr/expr.h"
#include "mwpaug/mathexpr/parser.h"
#include "mwpaug/mathexpr/render.h"
#include "mwpaug/mathexpr/solver.h"

namespace mwpaug::corpus {

std::string_view ProvenanceName(Provenance provenance) {
  switch (provenance) {
    case Provenance::kOriginal:
      return "original";
    case Provenance::kSynonym:
      return "synonym";
    case Provenance::kQuestionRepl:
      return "question_repl";
    case Provenance::kReverse:
      return "reverse";
    case Provenance::kIcl:
      return "icl";
    case Provenance::kIclRound2:
      return "icl_round2";
  }
  return "original";
}

std::optional<Provenance> ParseProvenance(std::string_view name) {
  for (Provenance p :
       {Provenance::kOriginal, Provenance::kSynonym, Provenance::kQuestionRepl,
        Provenance::kReverse, Provenance::kIcl, Provenance::kIclRound2}) {
    if (ProvenanceName(p) == name) return p;
  }
  return std::nullopt;
}

const std::string& RootId(const MwpRecord& record) {
  return record.parent_id.has_value() ? *record.parent_id : record.id;
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
        c == '\v') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

absl::Status ValidateRecord(const MwpRecord& record) {
  if (NormalizeWhitespace(record.text).empty()) {
    return absl::InvalidArgumentError("empty-text");
  }
  if (HasUnsupportedNumberFormat(record.text)) {
    return absl::InvalidArgumentError(
        "unsupported-number-format: thousands separator or exponent in text");
  }
  auto eq = mathexpr::ParseEquation(record.equation);
  if (!eq.ok()) {
    return absl::InvalidArgumentError("parse-error: " +
                                      std::string(eq.status().message()));
  }
  const int unknowns = mathexpr::CountUnknowns(*eq);
  if (unknowns != 1) {
    return absl::InvalidArgumentError("unknown-count: found " +
                                      std::to_string(unknowns));
  }
  auto solved = mathexpr::Solve(*eq);
  if (!solved.ok()) {
    return absl::InvalidArgumentError("unsolvable: " +
                                      std::string(solved.status().message()));
  }
  if (!std::isfinite(record.answer) ||
      std::fabs(*solved - record.answer) > mathexpr::kAnswerTolerance) {
    return absl::InvalidArgumentError(
        "answer-mismatch: equation gives " + mathexpr::FormatNumber(*solved) +
        ", stored answer " + mathexpr::FormatNumber(record.answer));
  }
  return absl::OkStatus();
}

}  // namespace mwpaug::corpus
