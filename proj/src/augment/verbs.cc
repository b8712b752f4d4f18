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

#include "mwpaug/augment/verbs.h"

#include <sstream>

#include "absl/status/status.h"
#include "embedded.h"
#include "mwpaug/augment/text_util.h"

namespace mwpaug::augment {
namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

absl::StatusOr<VerbTable> VerbTable::Parse(std::string_view tsv) {
  VerbTable table;
  std::istringstream lines{std::string(tsv)};
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string base, past, third;
    if (!std::getline(fields, base, '\t') || !std::getline(fields, past, '\t') ||
        !std::getline(fields, third, '\t') || base.empty() || past.empty() ||
        third.empty()) {
      return absl::InvalidArgumentError("verbs: malformed-line " +
                                        std::to_string(line_no));
    }
    table.by_base_[base] = {past, third};
    table.by_form_.try_emplace(base, VerbMatch{base, VerbForm::kBase});
    table.by_form_.try_emplace(third, VerbMatch{base, VerbForm::kThirdPerson});
    table.by_form_.insert_or_assign(past, VerbMatch{base, VerbForm::kPast});
  }
  return table;
}

const VerbTable& VerbTable::Default() {
  static const VerbTable* table = [] {
    auto parsed = Parse(embedded::File("verbs.tsv").value_or(""));
    return new VerbTable(parsed.ok() ? std::move(*parsed) : VerbTable());
  }();
  return *table;
}

std::string VerbTable::Past(std::string_view base) const {
  if (auto it = by_base_.find(base); it != by_base_.end()) return it->second.past;
  std::string out(base);
  if (EndsWith(out, "e")) return out + "d";
  if (out.size() > 1 && out.back() == 'y' && !IsVowel(out[out.size() - 2])) {
    out.pop_back();
    return out + "ied";
  }
  return out + "ed";
}

std::string VerbTable::ThirdPerson(std::string_view base) const {
  if (auto it = by_base_.find(base); it != by_base_.end()) {
    return it->second.third;
  }
  std::string out(base);
  if (out.size() > 1 && out.back() == 'y' && !IsVowel(out[out.size() - 2])) {
    out.pop_back();
    return out + "ies";
  }
  for (std::string_view s : {"s", "sh", "ch", "x", "z", "o"}) {
    if (EndsWith(out, s)) return out + "es";
  }
  return out + "s";
}

bool VerbTable::IsBase(std::string_view word) const {
  return by_base_.contains(AsciiLower(word));
}

std::optional<VerbMatch> VerbTable::Lookup(std::string_view word) const {
  auto it = by_form_.find(AsciiLower(word));
  if (it == by_form_.end()) return std::nullopt;
  return it->second;
}

}  // namespace mwpaug::augment
