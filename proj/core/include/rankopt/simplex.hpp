// Copyright 2026 The rankopt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RANKOPT_SIMPLEX_HPP_
#define RANKOPT_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

namespace rankopt {

enum class Relation { kLe, kGe, kEq };

struct LinearConstraint {
  std::vector<double> coeffs;
  Relation rel = Relation::kLe;
  double rhs = 0.0;
};

// min objective . x subject to the rows; variables with nonneg[j] set are
// constrained to x_j >= 0, the rest are free.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LinearConstraint> rows;
  std::vector<bool> nonneg;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  SolveStatus status = SolveStatus::kOptimal;
  std::vector<double> x;
  double objective = 0.0;
};

// Dense two-phase primal simplex with Bland's anti-cycling rule. Free
// variables are split internally. Intended for problems up to a few hundred
// variables; this is an exact small-scale solver, not a scalable one.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace rankopt

#endif  // RANKOPT_SIMPLEX_HPP_
