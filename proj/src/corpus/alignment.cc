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

#include "mwpaug/corpus/alignment.h"

#include "mwpaug/mathexpr/parser.h"

namespace mwpaug::corpus {

NumberAlignment AlignNumbers(std::span<const NumberToken> tokens,
                             std::span<const double> literals) {
  NumberAlignment alignment;
  std::vector<bool> used(literals.size(), false);
  for (size_t t = 0; t < tokens.size(); ++t) {
    bool paired = false;
    for (size_t l = 0; l < literals.size(); ++l) {
      if (!used[l] && SameNumber(tokens[t].value, literals[l])) {
        used[l] = true;
        alignment.pairs.emplace_back(static_cast<int>(t), static_cast<int>(l));
        paired = true;
        break;
      }
    }
    if (!paired) alignment.text_only.push_back(static_cast<int>(t));
  }
  for (size_t l = 0; l < literals.size(); ++l) {
    if (!used[l]) alignment.equation_only.push_back(static_cast<int>(l));
  }
  return alignment;
}

absl::StatusOr<NumberAlignment> AlignRecord(const MwpRecord& record) {
  auto eq = mathexpr::ParseEquation(record.equation);
  if (!eq.ok()) return eq.status();
  const std::vector<NumberToken> tokens = ExtractNumbers(record.text);
  const std::vector<double> literals = mathexpr::Literals(*eq);
  return AlignNumbers(tokens, literals);
}

}  // namespace mwpaug::corpus
