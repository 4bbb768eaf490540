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

#include "rankopt/simplex.hpp"

#include <cmath>

#include <gtest/gtest.h>

namespace rankopt {
namespace {

LinearProgram make_lp(std::vector<double> objective,
                      std::vector<LinearConstraint> rows,
                      std::vector<bool> nonneg) {
  LinearProgram lp;
  lp.objective = std::move(objective);
  lp.rows = std::move(rows);
  lp.nonneg = std::move(nonneg);
  return lp;
}

TEST(Simplex, TwoVariableTextbookProblem) {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18, x,y >= 0
  // == min -3x - 5y; optimum at (2, 6) with value -36.
  const LinearProgram lp = make_lp(
      {-3.0, -5.0},
      {{{1.0, 0.0}, Relation::kLe, 4.0},
       {{0.0, 2.0}, Relation::kLe, 12.0},
       {{3.0, 2.0}, Relation::kLe, 18.0}},
      {true, true});
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.x[0], 2.0, 1e-9);
  EXPECT_NEAR(s.x[1], 6.0, 1e-9);
  EXPECT_NEAR(s.objective, -36.0, 1e-9);
}

TEST(Simplex, EqualityAndGeRows) {
  // min x + 2y s.t. x + y = 3, x >= 1, y >= 0.5: optimum (2.5, 0.5).
  const LinearProgram lp = make_lp(
      {1.0, 2.0},
      {{{1.0, 1.0}, Relation::kEq, 3.0},
       {{1.0, 0.0}, Relation::kGe, 1.0},
       {{0.0, 1.0}, Relation::kGe, 0.5}},
      {true, true});
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.x[0], 2.5, 1e-9);
  EXPECT_NEAR(s.x[1], 0.5, 1e-9);
  EXPECT_NEAR(s.objective, 3.5, 1e-9);
}

TEST(Simplex, FreeVariableAndNegativeRhs) {
  // min |style| problem with a free variable: min 2x - y with y free,
  // x >= 0, x - y >= -2 (i.e. y <= x + 2), x <= 3, y >= -1 via -y <= 1.
  // Optimum pushes y up to x + 2 and x down to 0: value -2 at (0, 2).
  const LinearProgram lp = make_lp(
      {2.0, -1.0},
      {{{1.0, -1.0}, Relation::kGe, -2.0},
       {{1.0, 0.0}, Relation::kLe, 3.0},
       {{0.0, -1.0}, Relation::kLe, 1.0}},
      {true, false});
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.x[0], 0.0, 1e-9);
  EXPECT_NEAR(s.x[1], 2.0, 1e-9);
  EXPECT_NEAR(s.objective, -2.0, 1e-9);
}

TEST(Simplex, DetectsInfeasible) {
  // x >= 2 and x <= 1 cannot both hold.
  const LinearProgram lp = make_lp(
      {1.0},
      {{{1.0}, Relation::kGe, 2.0}, {{1.0}, Relation::kLe, 1.0}},
      {true});
  EXPECT_EQ(solve_lp(lp).status, SolveStatus::kInfeasible);
}

TEST(Simplex, DetectsUnbounded) {
  // min -x with only x >= 0.
  const LinearProgram lp =
      make_lp({-1.0}, {{{1.0}, Relation::kGe, 0.0}}, {true});
  EXPECT_EQ(solve_lp(lp).status, SolveStatus::kUnbounded);
}

TEST(Simplex, DegenerateProblemTerminates) {
  // Classic degeneracy: multiple optimal bases with zero-length ratio
  // steps. Bland's rule must terminate with the right value.
  const LinearProgram lp = make_lp(
      {-0.75, 150.0, -0.02, 6.0},
      {{{0.25, -60.0, -0.04, 9.0}, Relation::kLe, 0.0},
       {{0.5, -90.0, -0.02, 3.0}, Relation::kLe, 0.0},
       {{0.0, 0.0, 1.0, 0.0}, Relation::kLe, 1.0}},
      {true, true, true, true});
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective, -0.05, 1e-9);
}

TEST(Simplex, SolutionSatisfiesAllConstraints) {
  const LinearProgram lp = make_lp(
      {1.0, 1.0, 1.0},
      {{{1.0, 2.0, 0.0}, Relation::kGe, 4.0},
       {{0.0, 1.0, 3.0}, Relation::kGe, 6.0},
       {{1.0, 1.0, 1.0}, Relation::kLe, 10.0}},
      {true, true, true});
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  for (const LinearConstraint& row : lp.rows) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
      lhs += row.coeffs[j] * s.x[j];
    }
    switch (row.rel) {
      case Relation::kLe:
        EXPECT_LE(lhs, row.rhs + 1e-9);
        break;
      case Relation::kGe:
        EXPECT_GE(lhs, row.rhs - 1e-9);
        break;
      case Relation::kEq:
        EXPECT_NEAR(lhs, row.rhs, 1e-9);
        break;
    }
  }
}

}  // namespace
}  // namespace rankopt
