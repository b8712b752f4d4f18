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

#include "mwpaug/mathexpr/expr.h"

#include <utility>

namespace mwpaug::mathexpr {
namespace {

void CollectLiterals(const Expr& e, std::vector<double>* out) {
  switch (e.kind()) {
    case Expr::Kind::kNumber:
      out->push_back(e.value());
      break;
    case Expr::Kind::kUnknown:
      break;
    case Expr::Kind::kBinary:
      CollectLiterals(*e.left(), out);
      CollectLiterals(*e.right(), out);
      break;
    case Expr::Kind::kNegate:
      CollectLiterals(*e.operand(), out);
      break;
  }
}

}  // namespace

char OpSymbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd:
      return '+';
    case BinaryOp::kSub:
      return '-';
    case BinaryOp::kMul:
      return '*';
    case BinaryOp::kDiv:
      return '/';
  }
  return '?';
}

Expr::Expr(Kind kind, double value, BinaryOp op, ExprPtr left, ExprPtr right)
    : kind_(kind),
      value_(value),
      op_(op),
      left_(std::move(left)),
      right_(std::move(right)) {}

ExprPtr Expr::Number(double value) {
  return ExprPtr(new Expr(Kind::kNumber, value, BinaryOp::kAdd, nullptr,
                          nullptr));
}

ExprPtr Expr::Unknown() {
  static const ExprPtr unknown(
      new Expr(Kind::kUnknown, 0.0, BinaryOp::kAdd, nullptr, nullptr));
  return unknown;
}

ExprPtr Expr::Binary(BinaryOp op, ExprPtr left, ExprPtr right) {
  return ExprPtr(
      new Expr(Kind::kBinary, 0.0, op, std::move(left), std::move(right)));
}

ExprPtr Expr::Negate(ExprPtr operand) {
  return ExprPtr(new Expr(Kind::kNegate, 0.0, BinaryOp::kAdd,
                          std::move(operand), nullptr));
}

bool StructurallyEqual(const Expr& a, const Expr& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::kNumber:
      return a.value() == b.value();
    case Expr::Kind::kUnknown:
      return true;
    case Expr::Kind::kBinary:
      return a.op() == b.op() && StructurallyEqual(*a.left(), *b.left()) &&
             StructurallyEqual(*a.right(), *b.right());
    case Expr::Kind::kNegate:
      return StructurallyEqual(*a.operand(), *b.operand());
  }
  return false;
}

int CountUnknowns(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::kNumber:
      return 0;
    case Expr::Kind::kUnknown:
      return 1;
    case Expr::Kind::kBinary:
      return CountUnknowns(*e.left()) + CountUnknowns(*e.right());
    case Expr::Kind::kNegate:
      return CountUnknowns(*e.operand());
  }
  return 0;
}

std::vector<double> Literals(const Expr& e) {
  std::vector<double> out;
  CollectLiterals(e, &out);
  return out;
}

bool StructurallyEqual(const Equation& a, const Equation& b) {
  return StructurallyEqual(*a.lhs, *b.lhs) && StructurallyEqual(*a.rhs, *b.rhs);
}

int CountUnknowns(const Equation& eq) {
  return CountUnknowns(*eq.lhs) + CountUnknowns(*eq.rhs);
}

std::vector<double> Literals(const Equation& eq) {
  std::vector<double> out;
  CollectLiterals(*eq.lhs, &out);
  CollectLiterals(*eq.rhs, &out);
  return out;
}

}  // namespace mwpaug::mathexpr
