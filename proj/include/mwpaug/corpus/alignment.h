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

#ifndef MWPAUG_CORPUS_ALIGNMENT_H_
#define MWPAUG_CORPUS_ALIGNMENT_H_

#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "mwpaug/corpus/numbers.h"
#include "mwpaug/corpus/record.h"

namespace mwpaug::corpus {

// Mapping between text number tokens and equation literals, by index.
struct NumberAlignment {
  std::vector<std::pair<int, int>> pairs;  // (text token, equation literal)
  std::vector<int> text_only;
  std::vector<int> equation_only;

  bool operator==(const NumberAlignment&) const = default;
};

// Greedy positional matching: each text token, in order, takes the first
// unpaired literal with the same value.
NumberAlignment AlignNumbers(std::span<const NumberToken> tokens,
                             std::span<const double> literals);

// Aligns the record's text against its parsed equation.
absl::StatusOr<NumberAlignment> AlignRecord(const MwpRecord& record);

}  // namespace mwpaug::corpus

#endif  // MWPAUG_CORPUS_ALIGNMENT_H_
