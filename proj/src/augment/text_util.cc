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

#include "mwpaug/augment/text_util.h"

#include <cctype>

#include "mwpaug/corpus/numbers.h"

namespace mwpaug::augment {

namespace {
bool IsDigitAt(std::string_view text, size_t pos) {
  return pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos]));
}
}  // namespace

bool IsSentenceEnd(std::string_view text, size_t pos) {
  const char c = text[pos];
  if (c == '?' || c == '!') return true;
  if (c != '.') return false;
  return !(pos > 0 && IsDigitAt(text, pos - 1) && IsDigitAt(text, pos + 1));
}

std::vector<double> NumberValues(std::string_view text) {
  std::vector<double> out;
  for (const auto& token : corpus::ExtractNumbers(text)) {
    out.push_back(token.value);
  }
  return out;
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace mwpaug::augment
