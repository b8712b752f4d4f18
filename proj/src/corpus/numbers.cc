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

#include "mwpaug/corpus/numbers.h"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace mwpaug::corpus {
namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

}  // namespace

std::vector<NumberToken> ExtractNumbers(std::string_view text) {
  std::vector<NumberToken> tokens;
  size_t i = 0;
  while (i < text.size()) {
    if (!IsDigit(text[i])) {
      ++i;
      continue;
    }
    const size_t start = i;
    while (i < text.size() && IsDigit(text[i])) ++i;
    bool is_float = false;
    if (i + 1 < text.size() && text[i] == '.' && IsDigit(text[i + 1])) {
      is_float = true;
      ++i;
      while (i < text.size() && IsDigit(text[i])) ++i;
    }
    const size_t end = i;
    // Glued to a word on either side: part of an identifier, not a quantity.
    const bool glued_before = start > 0 && (IsAsciiAlpha(text[start - 1]) ||
                                            text[start - 1] == '_');
    const bool glued_after =
        end < text.size() && (IsAsciiAlpha(text[end]) || text[end] == '_');
    if (glued_before || glued_after) {
      // Skip the rest of the alphanumeric run.
      while (i < text.size() &&
             (IsDigit(text[i]) || IsAsciiAlpha(text[i]) || text[i] == '_')) {
        ++i;
      }
      continue;
    }
    NumberToken token;
    token.surface = std::string(text.substr(start, end - start));
    std::from_chars(token.surface.data(),
                    token.surface.data() + token.surface.size(), token.value);
    token.start = start;
    token.end = end;
    token.kind = is_float ? NumberKind::kFloat : NumberKind::kInteger;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

bool HasUnsupportedNumberFormat(std::string_view text) {
  for (size_t i = 0; i + 1 < text.size(); ++i) {
    if (!IsDigit(text[i])) continue;
    const char next = text[i + 1];
    // 1,000 style grouping: digit ',' three digits, not followed by a digit.
    if (next == ',' && i + 4 < text.size() && IsDigit(text[i + 2]) &&
        IsDigit(text[i + 3]) && IsDigit(text[i + 4]) &&
        (i + 5 == text.size() || !IsDigit(text[i + 5]))) {
      return true;
    }
    // 1e5, 2.5E-3: exponent right after the digits.
    if ((next == 'e' || next == 'E') && i + 2 < text.size()) {
      size_t j = i + 2;
      if ((text[j] == '+' || text[j] == '-') && j + 1 < text.size()) ++j;
      if (IsDigit(text[j])) {
        // Make sure the mantissa is not itself glued to a word ("B2e5").
        size_t k = i;
        while (k > 0 && (IsDigit(text[k - 1]) || text[k - 1] == '.')) --k;
        if (k == 0 || !IsAsciiAlpha(text[k - 1])) return true;
      }
    }
  }
  return false;
}

std::string FormatSurface(double value, NumberKind kind, int float_decimals) {
  char buf[64];
  if (kind == NumberKind::kInteger) {
    std::snprintf(buf, sizeof(buf), "%lld",
                  static_cast<long long>(std::llround(value)));
  } else {
    std::snprintf(buf, sizeof(buf), "%.*f", float_decimals, value);
  }
  return buf;
}

bool SameNumber(double a, double b) { return std::fabs(a - b) <= 1e-9; }

}  // namespace mwpaug::corpus
