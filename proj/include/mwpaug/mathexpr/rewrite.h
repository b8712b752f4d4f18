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

#ifndef MWPAUG_MATHEXPR_REWRITE_H_
#define MWPAUG_MATHEXPR_REWRITE_H_

#include <map>

#include "absl/status/statusor.h"
#include "mwpaug/mathexpr/expr.h"

namespace mwpaug::mathexpr {

// Replaces literals by their left-to-right index (see Literals()). Everything
// not listed is shared with the input. Fails with "index-out-of-range".
absl::StatusOr<Equation> SubstituteLiterals(
    const Equation& eq, const std::map<int, double>& replacements);

// True when one side is a bare X and the other holds no X ("X = f(...)").
bool IsTemplateForm(const Equation& eq);

// For a template equation X = f(n1..nk), builds answer = f' where literal
// `literal_index` of f has become X. The index counts literals across the
// whole equation, which for template form is the index within f.
//
// Errors: "template-form" when eq is not in template form,
// "index-out-of-range".
absl::StatusOr<Equation> ReplaceLiteralWithUnknown(const Equation& eq,
                                                   int literal_index,
                                                   double old_answer);

}  // namespace mwpaug::mathexpr

#endif  // MWPAUG_MATHEXPR_REWRITE_H_
