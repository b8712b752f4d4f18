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

#ifndef MWPAUG_AUGMENT_VERBS_H_
#define MWPAUG_AUGMENT_VERBS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace mwpaug::augment {

enum class VerbForm { kBase, kPast, kThirdPerson };

struct VerbMatch {
  std::string base;
  VerbForm form = VerbForm::kBase;
};

// Base, past and third-person forms. Irregular verbs must be listed; verbs
// absent from the table conjugate by the regular spelling rules.
class VerbTable {
 public:
  // TSV lines "base<TAB>past<TAB>third"; '#' starts a comment line.
  static absl::StatusOr<VerbTable> Parse(std::string_view tsv);
  // The table compiled into the library.
  static const VerbTable& Default();

  std::string Past(std::string_view base) const;
  std::string ThirdPerson(std::string_view base) const;
  bool IsBase(std::string_view word) const;

  // Identifies an inflected or base form. A form that is both past and base
  // ("put") reports kPast.
  std::optional<VerbMatch> Lookup(std::string_view word) const;

 private:
  struct Forms {
    std::string past;
    std::string third;
  };
  std::map<std::string, Forms, std::less<>> by_base_;
  std::map<std::string, VerbMatch, std::less<>> by_form_;
};

}  // namespace mwpaug::augment

#endif  // MWPAUG_AUGMENT_VERBS_H_
