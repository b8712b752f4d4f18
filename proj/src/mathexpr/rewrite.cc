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

#include "mwpaug/mathexpr/rewrite.h"

#include <functional>
#include <string>

#include "absl/status/status.h"

namespace mwpaug::mathexpr {
namespace {

// Rebuilds `e`, handing each literal (with its running index) to `leaf`.
ExprPtr MapLiterals(const ExprPtr& e, int* index,
                    const std::function<ExprPtr(const ExprPtr&, int)>& leaf) {
  switch (e->kind()) {
    case Expr::Kind::kNumber:
      return leaf(e, (*index)++);
    case Expr::Kind::kUnknown:
      return e;
    case Expr::Kind::kNegate: {
      ExprPtr operand = MapLiterals(e->operand(), index, leaf);
      if (operand == e->operand()) return e;
      return Expr::Negate(std::move(operand));
    }
    case Expr::Kind::kBinary: {
      ExprPtr left = MapLiterals(e->left(), index, leaf);
      ExprPtr right = MapLiterals(e->right(), index, leaf);
      if (left == e->left() && right == e->right()) return e;
      return Expr::Binary(e->op(), std::move(left), std::move(right));
    }
  }
  return e;
}

absl::Status IndexOutOfRange(int index, int count) {
  return absl::OutOfRangeError("index-out-of-range: literal " +
                               std::to_string(index) + " of " +
                               std::to_string(count));
}

}  // namespace

absl::StatusOr<Equation> SubstituteLiterals(
    const Equation& eq, const std::map<int, double>& replacements) {
  const int count = static_cast<int>(Literals(eq).size());
  for (const auto& [index, value] : replacements) {
    if (index < 0 || index >= count) return IndexOutOfRange(index, count);
  }
  if (replacements.empty()) return eq;
  auto leaf = [&replacements](const ExprPtr& node, int index) -> ExprPtr {
    auto it = replacements.find(index);
    if (it == replacements.end()) return node;
    return Expr::Number(it->second);
  };
  int index = 0;
  Equation out;
  out.lhs = MapLiterals(eq.lhs, &index, leaf);
  out.rhs = MapLiterals(eq.rhs, &index, leaf);
  return out;
}

bool IsTemplateForm(const Equation& eq) {
  return (eq.lhs->is_unknown() && CountUnknowns(*eq.rhs) == 0) ||
         (eq.rhs->is_unknown() && CountUnknowns(*eq.lhs) == 0);
}

absl::StatusOr<Equation> ReplaceLiteralWithUnknown(const Equation& eq,
                                                   int literal_index,
                                                   double old_answer) {
  if (!IsTemplateForm(eq)) {
    return absl::FailedPreconditionError(
        "template-form: unknown is not alone on one side");
  }
  const ExprPtr& body = eq.lhs->is_unknown() ? eq.rhs : eq.lhs;
  const int count = static_cast<int>(Literals(*body).size());
  if (literal_index < 0 || literal_index >= count) {
    return IndexOutOfRange(literal_index, count);
  }
  int index = 0;
  ExprPtr replaced = MapLiterals(
      body, &index, [literal_index](const ExprPtr& node, int i) -> ExprPtr {
        return i == literal_index ? Expr::Unknown() : node;
      });
  return Equation{Expr::Number(old_answer), std::move(replaced)};
}

}  // namespace mwpaug::mathexpr
