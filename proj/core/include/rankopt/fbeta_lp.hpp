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

#ifndef RANKOPT_FBETA_LP_HPP_
#define RANKOPT_FBETA_LP_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "rankopt/dataset.hpp"
#include "rankopt/scorer.hpp"
#include "rankopt/simplex.hpp"

namespace rankopt {

// The linear-fractional reformulation of reciprocal surrogate F1,
// linearized by the change of variables (tau, phi, omega, epsilon):
//
//   minimize  n_pos * eps + sum tau_i + sum phi_i
//   s.t.      tau_i <= eps,  tau_i <= omega . x_i        (i positive)
//             phi_i >= 0,    phi_i >= eps + omega . x_i  (i negative)
//             sum tau_i = 1,  eps >= 0
//
// The bias is absorbed as a trailing constant-1 feature coordinate of
// omega; there is no separate threshold variable. The original scorer is
// w = omega / eps. Since tau_i <= eps for every positive and the taus sum
// to 1, any optimum has eps >= 1/n_pos > 0, so the inverse mapping is
// always defined on solver output.
//
// The optimal objective value equals min over w of
// (n_pos + tp_lb + fp_ub) / tp_lb = 2 / max surrogate-F1, so half the
// optimum is the reciprocal of the best achievable surrogate F1.
struct FBetaLP {
  LinearProgram lp;
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::size_t dim = 0;  // feature dimension, excluding the bias coordinate
  // Variable layout in lp: [tau_0..tau_{p-1}, phi_0..phi_{q-1},
  // omega_0..omega_d, eps], with omega_d the bias coordinate.
  std::size_t tau_offset() const { return 0; }
  std::size_t phi_offset() const { return n_pos; }
  std::size_t omega_offset() const { return n_pos + n_neg; }
  std::size_t eps_index() const { return n_pos + n_neg + dim + 1; }
  std::size_t num_vars() const { return eps_index() + 1; }
};

struct FBetaLPSolution {
  std::vector<double> taus;
  std::vector<double> phis;
  std::vector<double> omega;  // dim + 1 coordinates, bias last
  double epsilon = 0.0;
  double objective = 0.0;
};

FBetaLP build_lp(const LabeledDataset& data);

// Same program from raw rows; unlike LabeledDataset this admits datasets
// with no negatives (the phi block is then empty and any unit-margin
// separator attains surrogate F1 = 1). Requires at least one positive and
// consistent dimensions.
FBetaLP build_lp(const std::vector<LabeledExample>& examples);

// Solves with the dense simplex. Throws std::runtime_error when the LP is
// infeasible or unbounded (possible only for hand-built programs; LPs from
// build_lp are always feasible and bounded).
FBetaLPSolution solve_lp(const FBetaLP& lp);

// w = omega / epsilon with the threshold folded into the bias coordinate
// (theta_1 = 0). Throws std::domain_error when epsilon <= 0, the degenerate
// optimum where the inverse mapping is undefined.
ThresholdedScorer recover_scorer(const FBetaLP& lp,
                                 const FBetaLPSolution& solution);

// Plain-text standard-form listing (objective row, then constraint rows)
// for cross-checking with external solvers.
std::string to_text(const FBetaLP& lp);

}  // namespace rankopt

#endif  // RANKOPT_FBETA_LP_HPP_
