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

#ifndef MWPAUG_MATHEXPR_RENDER_H_
#define MWPAUG_MATHEXPR_RENDER_H_

#include <string>

#include "mwpaug/mathexpr/expr.h"

namespace mwpaug::mathexpr {

// Shortest decimal that round-trips, never in exponent form: 7 -> "7",
// 9.5 -> "9.5", 0.1 -> "0.1".
std::string FormatNumber(double value);

// Readable rendering with only the parentheses the grammar needs, e.g.
// "X=(7-3)*(9/10)". Parsing the result gives back a structurally equal tree
// (negative literals excepted, which re-parse as negations).
std::string ToString(const Expr& e);
std::string ToString(const Equation& eq);

// Normal form used for comparison: when the rhs is a bare X and the lhs is
// not, sides are swapped; negative literals become Negate(|v|).
Equation CanonicalForm(const Equation& eq);

// Fully parenthesized rendering of CanonicalForm(eq), e.g.
// "X=((7-3)*(9/10))". Identical trees always render identically and
// ParseEquation(Canonicalize(eq)) == CanonicalForm(eq).
std::string Canonicalize(const Equation& eq);

// Equation-accuracy style comparison: canonical strings are equal.
bool EquationsMatch(const Equation& a, const Equation& b);

}  // namespace mwpaug::mathexpr

#endif  // MWPAUG_MATHEXPR_RENDER_H_
