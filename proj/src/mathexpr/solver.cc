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

#include "mwpaug/mathexpr/solver.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "absl/status/status.h"

namespace mwpaug::mathexpr {
namespace {

absl::Status DivisionByZero() {
  return absl::InvalidArgumentError("division-by-zero");
}

}  // namespace

absl::StatusOr<double> Evaluate(const Expr& e,
                                std::optional<double> unknown_value) {
  switch (e.kind()) {
    case Expr::Kind::kNumber:
      return e.value();
    case Expr::Kind::kUnknown:
      if (!unknown_value.has_value()) {
        return absl::FailedPreconditionError("missing-unknown-value");
      }
      return *unknown_value;
    case Expr::Kind::kNegate: {
      auto v = Evaluate(*e.operand(), unknown_value);
      if (!v.ok()) return v;
      return -*v;
    }
    case Expr::Kind::kBinary: {
      auto l = Evaluate(*e.left(), unknown_value);
      if (!l.ok()) return l;
      auto r = Evaluate(*e.right(), unknown_value);
      if (!r.ok()) return r;
      switch (e.op()) {
        case BinaryOp::kAdd:
          return *l + *r;
        case BinaryOp::kSub:
          return *l - *r;
        case BinaryOp::kMul:
          return *l * *r;
        case BinaryOp::kDiv:
          if (*r == 0.0) return DivisionByZero();
          return *l / *r;
      }
    }
  }
  return absl::InternalError("unreachable expression kind");
}

absl::StatusOr<double> Solve(const Equation& eq) {
  const int lhs_unknowns = CountUnknowns(*eq.lhs);
  const int rhs_unknowns = CountUnknowns(*eq.rhs);
  if (lhs_unknowns + rhs_unknowns != 1) {
    return absl::FailedPreconditionError(
        "unknown-count: expected exactly one X, found " +
        std::to_string(lhs_unknowns + rhs_unknowns));
  }
  const Expr* side = lhs_unknowns == 1 ? eq.lhs.get() : eq.rhs.get();
  auto other = Evaluate(lhs_unknowns == 1 ? *eq.rhs : *eq.lhs);
  if (!other.ok()) return other.status();
  double target = *other;

  while (!side->is_unknown()) {
    if (side->is_negate()) {
      target = -target;
      side = side->operand().get();
      continue;
    }
    // Binary: exactly one child holds X; the other is a constant.
    const bool unknown_left = CountUnknowns(*side->left()) == 1;
    const Expr& known = unknown_left ? *side->right() : *side->left();
    auto k = Evaluate(known);
    if (!k.ok()) return k.status();
    switch (side->op()) {
      case BinaryOp::kAdd:
        target -= *k;
        break;
      case BinaryOp::kSub:
        // u - k = t  =>  u = t + k;   k - u = t  =>  u = k - t
        target = unknown_left ? target + *k : *k - target;
        break;
      case BinaryOp::kMul:
        if (*k == 0.0) return DivisionByZero();
        target /= *k;
        break;
      case BinaryOp::kDiv:
        if (unknown_left) {
          // u / k = t  =>  u = t * k
          if (*k == 0.0) return DivisionByZero();
          target *= *k;
        } else {
          // k / u = t  =>  u = k / t
          if (target == 0.0) return DivisionByZero();
          target = *k / target;
        }
        break;
    }
    side = unknown_left ? side->left().get() : side->right().get();
  }

  auto lhs = Evaluate(*eq.lhs, target);
  auto rhs = Evaluate(*eq.rhs, target);
  if (!lhs.ok()) return lhs.status();
  if (!rhs.ok()) return rhs.status();
  if (!std::isfinite(target) ||
      std::fabs(*lhs - *rhs) >
          kResidualTolerance * std::max(1.0, std::fabs(*lhs))) {
    return absl::InternalError("residual-check: substituted sides differ");
  }
  return target;
}

bool IsConsistent(const Equation& eq, double answer) {
  auto solved = Solve(eq);
  return solved.ok() && std::fabs(*solved - answer) <= kAnswerTolerance;
}

}  // namespace mwpaug::mathexpr
