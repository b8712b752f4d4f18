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

#ifndef MWPAUG_CORPUS_NUMBERS_H_
#define MWPAUG_CORPUS_NUMBERS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mwpaug::corpus {

enum class NumberKind { kInteger, kFloat };

// A number literal found in problem text. The span [start, end) is in bytes
// and covers the digits only; currency and percent signs stay outside it.
struct NumberToken {
  std::string surface;
  double value = 0.0;
  size_t start = 0;
  size_t end = 0;
  NumberKind kind = NumberKind::kInteger;

  bool operator==(const NumberToken&) const = default;
};

// Left-to-right decimal literals (digits, optionally '.' digits). Digits glued
// to letters ("B2", "2nd") are not numbers.
std::vector<NumberToken> ExtractNumbers(std::string_view text);

// Thousands separators ("1,000") and exponent notation ("1e5") are not
// supported by extraction; records using them are rejected at load.
bool HasUnsupportedNumberFormat(std::string_view text);

// Surface for a replacement value: integers without a decimal point, floats
// with exactly `float_decimals` digits after it.
std::string FormatSurface(double value, NumberKind kind, int float_decimals);

// Values compare equal for alignment when within 1e-9 ("7" matches "7.0").
bool SameNumber(double a, double b);

}  // namespace mwpaug::corpus

#endif  // MWPAUG_CORPUS_NUMBERS_H_
