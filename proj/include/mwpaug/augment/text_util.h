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

#ifndef MWPAUG_AUGMENT_TEXT_UTIL_H_
#define MWPAUG_AUGMENT_TEXT_UTIL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mwpaug::augment {

// '.', '!' or '?' at `pos` ends a sentence; a '.' between two digits is a
// decimal point and does not.
bool IsSentenceEnd(std::string_view text, size_t pos);

// Values of the number tokens in `text`, left to right.
std::vector<double> NumberValues(std::string_view text);

// Lowercase ASCII copy.
std::string AsciiLower(std::string_view text);

}  // namespace mwpaug::augment

#endif  // MWPAUG_AUGMENT_TEXT_UTIL_H_
