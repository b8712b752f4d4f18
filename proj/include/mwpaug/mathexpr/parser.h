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

#ifndef MWPAUG_MATHEXPR_PARSER_H_
#define MWPAUG_MATHEXPR_PARSER_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "mwpaug/mathexpr/expr.h"

namespace mwpaug::mathexpr {

// Parses an equation string such as "X=(7-3)*(9/10)" or "4 = X - 3".
//
//   equation := expr '=' expr
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' | 'x' | '×' | '/') factor)*
//   factor   := ['-'] (number | 'X' | '(' expr ')')
//   number   := digit+ ['.' digit+]
//
// Whitespace is ignored. Lowercase 'x' and U+00D7 are multiplication; only
// uppercase 'X' is the unknown. The number of unknowns is not checked here.
//
// Errors are InvalidArgument with a message of the form
// "syntax-error at offset N: ..." or "empty-input".
absl::StatusOr<Equation> ParseEquation(std::string_view src);

// Parses a single expression (no '=').
absl::StatusOr<ExprPtr> ParseExpression(std::string_view src);

// Byte offset carried by a syntax error produced by the parser.
std::optional<size_t> SyntaxErrorOffset(const absl::Status& status);

}  // namespace mwpaug::mathexpr

#endif  // MWPAUG_MATHEXPR_PARSER_H_
