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

#include "mwpaug/mathexpr/render.h"

#include <charconv>
#include <cmath>
#include <system_error>

namespace mwpaug::mathexpr {
namespace {

int Precedence(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::kBinary:
      return (e.op() == BinaryOp::kAdd || e.op() == BinaryOp::kSub) ? 1 : 2;
    case Expr::Kind::kNegate:
      return 3;
    default:
      return 4;
  }
}

bool IsNegativeLiteral(const Expr& e) {
  return e.is_number() && std::signbit(e.value()) && e.value() != 0.0;
}

void Readable(const Expr& e, std::string* out);

void ReadableChild(const Expr& child, bool wrap, std::string* out) {
  if (wrap) out->push_back('(');
  Readable(child, out);
  if (wrap) out->push_back(')');
}

void Readable(const Expr& e, std::string* out) {
  switch (e.kind()) {
    case Expr::Kind::kNumber:
      out->append(FormatNumber(e.value()));
      return;
    case Expr::Kind::kUnknown:
      out->push_back('X');
      return;
    case Expr::Kind::kNegate: {
      out->push_back('-');
      const Expr& operand = *e.operand();
      ReadableChild(operand,
                    operand.is_binary() || operand.is_negate() ||
                        IsNegativeLiteral(operand),
                    out);
      return;
    }
    case Expr::Kind::kBinary: {
      const int prec = Precedence(e);
      const Expr& left = *e.left();
      const Expr& right = *e.right();
      ReadableChild(left,
                    Precedence(left) < prec || left.is_negate() ||
                        IsNegativeLiteral(left),
                    out);
      out->push_back(OpSymbol(e.op()));
      // Left associativity: an equal-precedence right child keeps its
      // parentheses so the tree shape survives a re-parse.
      ReadableChild(right,
                    Precedence(right) <= prec || right.is_negate() ||
                        IsNegativeLiteral(right),
                    out);
      return;
    }
  }
}

void Full(const Expr& e, std::string* out) {
  switch (e.kind()) {
    case Expr::Kind::kNumber:
      out->append(FormatNumber(e.value()));
      return;
    case Expr::Kind::kUnknown:
      out->push_back('X');
      return;
    case Expr::Kind::kNegate:
      out->append("(-");
      Full(*e.operand(), out);
      out->push_back(')');
      return;
    case Expr::Kind::kBinary:
      out->push_back('(');
      Full(*e.left(), out);
      out->push_back(OpSymbol(e.op()));
      Full(*e.right(), out);
      out->push_back(')');
      return;
  }
}

ExprPtr Normalize(const ExprPtr& e) {
  switch (e->kind()) {
    case Expr::Kind::kNumber:
      if (IsNegativeLiteral(*e)) {
        return Expr::Negate(Expr::Number(-e->value()));
      }
      return e;
    case Expr::Kind::kUnknown:
      return e;
    case Expr::Kind::kNegate:
      return Expr::Negate(Normalize(e->operand()));
    case Expr::Kind::kBinary:
      return Expr::Binary(e->op(), Normalize(e->left()),
                          Normalize(e->right()));
  }
  return e;
}

}  // namespace

std::string FormatNumber(double value) {
  if (value == 0.0) return "0";
  char buf[400];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string ToString(const Expr& e) {
  std::string out;
  Readable(e, &out);
  return out;
}

std::string ToString(const Equation& eq) {
  return ToString(*eq.lhs) + "=" + ToString(*eq.rhs);
}

Equation CanonicalForm(const Equation& eq) {
  Equation out{Normalize(eq.lhs), Normalize(eq.rhs)};
  if (out.rhs->is_unknown() && !out.lhs->is_unknown()) {
    std::swap(out.lhs, out.rhs);
  }
  return out;
}

std::string Canonicalize(const Equation& eq) {
  const Equation canonical = CanonicalForm(eq);
  std::string out;
  Full(*canonical.lhs, &out);
  out.push_back('=');
  Full(*canonical.rhs, &out);
  return out;
}

bool EquationsMatch(const Equation& a, const Equation& b) {
  return Canonicalize(a) == Canonicalize(b);
}

}  // namespace mwpaug::mathexpr
