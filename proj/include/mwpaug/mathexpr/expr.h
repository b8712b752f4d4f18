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

#ifndef MWPAUG_MATHEXPR_EXPR_H_
#define MWPAUG_MATHEXPR_EXPR_H_

#include <memory>
#include <vector>

namespace mwpaug::mathexpr {

enum class BinaryOp { kAdd, kSub, kMul, kDiv };

char OpSymbol(BinaryOp op);

class Expr;

// Nodes are immutable once built, so subtrees are shared freely between
// equations and across threads.
using ExprPtr = std::shared_ptr<const Expr>;

// Arithmetic AST over decimal literals and the single unknown X.
class Expr {
 public:
  enum class Kind { kNumber, kUnknown, kBinary, kNegate };

  static ExprPtr Number(double value);
  static ExprPtr Unknown();
  static ExprPtr Binary(BinaryOp op, ExprPtr left, ExprPtr right);
  static ExprPtr Negate(ExprPtr operand);

  Kind kind() const { return kind_; }
  bool is_number() const { return kind_ == Kind::kNumber; }
  bool is_unknown() const { return kind_ == Kind::kUnknown; }
  bool is_binary() const { return kind_ == Kind::kBinary; }
  bool is_negate() const { return kind_ == Kind::kNegate; }

  double value() const { return value_; }
  BinaryOp op() const { return op_; }
  const ExprPtr& left() const { return left_; }
  const ExprPtr& right() const { return right_; }
  // Negate's child is stored in left().
  const ExprPtr& operand() const { return left_; }

 private:
  Expr(Kind kind, double value, BinaryOp op, ExprPtr left, ExprPtr right);

  Kind kind_;
  double value_;
  BinaryOp op_;
  ExprPtr left_;
  ExprPtr right_;
};

// Exact structural equality; literal values are compared with ==.
bool StructurallyEqual(const Expr& a, const Expr& b);

int CountUnknowns(const Expr& e);

// Literal values in left-to-right (in-order) position.
std::vector<double> Literals(const Expr& e);

struct Equation {
  ExprPtr lhs;
  ExprPtr rhs;
};

bool StructurallyEqual(const Equation& a, const Equation& b);
inline bool operator==(const Equation& a, const Equation& b) {
  return StructurallyEqual(a, b);
}

int CountUnknowns(const Equation& eq);

// Literals of lhs followed by literals of rhs. Literal indices used by the
// rewriting functions refer to positions in this list.
std::vector<double> Literals(const Equation& eq);

}  // namespace mwpaug::mathexpr

#endif  // MWPAUG_MATHEXPR_EXPR_H_
