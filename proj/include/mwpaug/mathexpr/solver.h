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

#ifndef MWPAUG_MATHEXPR_SOLVER_H_
#define MWPAUG_MATHEXPR_SOLVER_H_

#include <optional>

#include "absl/status/statusor.h"
#include "mwpaug/mathexpr/expr.h"

namespace mwpaug::mathexpr {

// Absolute tolerance between a stored answer and the solved unknown.
inline constexpr double kAnswerTolerance = 1e-6;
// Relative tolerance for the residual |lhs - rhs| <= tol * max(1, |lhs|).
inline constexpr double kResidualTolerance = 1e-9;

// Double-precision recursive evaluation. Fails with "division-by-zero" or
// "missing-unknown-value".
absl::StatusOr<double> Evaluate(const Expr& e,
                                std::optional<double> unknown_value = {});

// Solves for the single unknown by path inversion: the side holding X is
// peeled from the root down while the inverse operation is applied to the
// value of the other side. The result is checked by substitution.
//
// Errors: "unknown-count" (zero or several X), "division-by-zero" (on either
// side or along the inversion path), "residual-check".
absl::StatusOr<double> Solve(const Equation& eq);

// True when eq solves to `answer` within kAnswerTolerance.
bool IsConsistent(const Equation& eq, double answer);

}  // namespace mwpaug::mathexpr

#endif  // MWPAUG_MATHEXPR_SOLVER_H_
