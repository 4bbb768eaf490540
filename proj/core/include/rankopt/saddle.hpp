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

#ifndef RANKOPT_SADDLE_HPP_
#define RANKOPT_SADDLE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rankopt/bounds.hpp"
#include "rankopt/dataset.hpp"
#include "rankopt/objective.hpp"
#include "rankopt/scorer.hpp"

namespace rankopt {

// Primal parameters (scorer, plus the F-beta auxiliary psi) and dual
// multipliers mid-optimization. Every dual is kept >= 0 by projection after
// each ascent step. Single-owner mutable; the training loop is sequential.
struct SaddleState {
  ThresholdedScorer scorer;
  std::vector<double> duals;
  double psi = 0.0;  // F-beta auxiliary primal variable; unused otherwise
  std::int64_t step = 0;
};

// Zero scorer, duals at their initial values, psi at n_pos / 2 for F-beta.
SaddleState make_initial_state(const ObjectiveSpec& spec,
                               const LabeledDataset& data);

// Value and exact subgradients of a saddle objective at one point.
// grad_duals holds dL/dlambda_t, the ascent direction for the duals.
// grad_psi is populated only by the F-beta form.
struct SaddleEvaluation {
  double value = 0.0;
  std::vector<double> grad_weights;
  double grad_bias = 0.0;
  std::vector<double> grad_thresholds;
  std::vector<double> grad_duals;
  double grad_psi = 0.0;
};

// A subset of dataset rows with per-class rescaling, making each batch's
// hinge sums unbiased estimators of the full-data sums conditioned on batch
// composition. An empty index span means the whole dataset with unit scales.
// When a class is absent from the batch, gradients of any component whose
// expression requires that class's loss sum are reported as zero; the
// corresponding scale is irrelevant.
struct BatchSample {
  std::span<const std::size_t> indices;
  double pos_scale = 1.0;
  double neg_scale = 1.0;
  bool has_pos = true;
  bool has_neg = true;
};

BatchSample full_batch(const LabeledDataset& data);

// Builds the per-class scales n_pos/b_pos and n_neg/b_neg for a subset.
BatchSample make_batch(const LabeledDataset& data,
                       std::span<const std::size_t> indices);

// L = (1 + lambda) l+ + lambda alpha/(1-alpha) l- - lambda n_pos, the
// saddle form of maximum recall at precision >= alpha. K = 1. Throws
// std::invalid_argument unless alpha is in (0, 1).
SaddleEvaluation rap_lagrangian(const SaddleState& state, double alpha,
                                const LabeledDataset& data);
SaddleEvaluation rap_lagrangian(const SaddleState& state, double alpha,
                                const LabeledDataset& data,
                                const BatchSample& batch);

// alpha l- + (1-alpha) l+ - (1-alpha) n_pos; <= 0 means the surrogate
// precision constraint is satisfied, which implies exact precision >= alpha.
double rap_constraint_residual(const SaddleState& state, double alpha,
                               const LabeledDataset& data);

// Positive-class weight (1+lambda)(1-alpha) / (lambda alpha) that turns the
// fixed-lambda R@P inner problem into a weighted SVM. Strictly decreasing in
// lambda. Throws std::invalid_argument when lambda is 0.
double c_weight(double alpha, double lambda);

// L = l- + lambda (beta + l+/n_pos - 1): the reciprocal-precision saddle
// form of maximum precision at recall >= beta. Shares its minimizer with the
// direct -P form but not its value. K = 1.
SaddleEvaluation par_lagrangian(const SaddleState& state, double beta_recall,
                                const LabeledDataset& data);
SaddleEvaluation par_lagrangian(const SaddleState& state, double beta_recall,
                                const LabeledDataset& data,
                                const BatchSample& batch);

// L = sum_t delta_t [ (1+lambda_t) l+(theta_t)
//                     + lambda_t alpha_t/(1-alpha_t) l-(theta_t)
//                     - lambda_t n_pos ].
// Weight and bias gradients sum across anchors; threshold and dual
// gradients are per anchor. Throws if any anchor is >= 1.
SaddleEvaluation aucpr_lagrangian(const SaddleState& state,
                                  const AnchorWeights& anchors,
                                  const LabeledDataset& data);
SaddleEvaluation aucpr_lagrangian(const SaddleState& state,
                                  const AnchorWeights& anchors,
                                  const LabeledDataset& data,
                                  const BatchSample& batch);

// ROC analog with per-anchor constraint fp_ub(theta_t) <= phi_t n_neg:
// L = sum_t delta_t [ l+(theta_t) + lambda_t (l-(theta_t) - phi_t n_neg) ].
SaddleEvaluation aucroc_lagrangian(const SaddleState& state,
                                   const AnchorWeights& fpr_anchors,
                                   const LabeledDataset& data);
SaddleEvaluation aucroc_lagrangian(const SaddleState& state,
                                   const AnchorWeights& fpr_anchors,
                                   const LabeledDataset& data,
                                   const BatchSample& batch);

// Surrogate F-beta (1+beta^2) tp_lb / (beta^2 n_pos + tp_lb + fp_ub);
// never exceeds the exact F-beta. Throws std::domain_error on a
// non-positive denominator.
double fbeta_surrogate(const BoundValues& b, std::size_t n_pos, double beta);

// Saddle form of the reciprocal surrogate F-beta with auxiliary variable
// psi standing in for tp_lb:
//   L = psi^-1 l- + lambda l+ + (beta^2 psi^-1 - lambda) n_pos + psi lambda.
// With the constraint psi = n_pos - l+ substituted, L + 1 equals
// (1 + beta^2) / fbeta_surrogate. lambda is an equality multiplier and may
// take any sign here. Throws std::invalid_argument unless psi > 0.
SaddleEvaluation fbeta_psi_lagrangian(const ThresholdedScorer& scorer,
                                      double psi, double lambda,
                                      const LabeledDataset& data, double beta);
SaddleEvaluation fbeta_psi_lagrangian(const ThresholdedScorer& scorer,
                                      double psi, double lambda,
                                      const LabeledDataset& data, double beta,
                                      const BatchSample& batch);

// L = l+ + l-: the plain hinge objective used as the accuracy baseline.
// No duals.
SaddleEvaluation hinge_objective(const SaddleState& state,
                                 const LabeledDataset& data);
SaddleEvaluation hinge_objective(const SaddleState& state,
                                 const LabeledDataset& data,
                                 const BatchSample& batch);

// Dispatches to the Lagrangian matching spec.kind, reading duals (and psi)
// from the state.
SaddleEvaluation evaluate_lagrangian(const SaddleState& state,
                                     const ObjectiveSpec& spec,
                                     const LabeledDataset& data);
SaddleEvaluation evaluate_lagrangian(const SaddleState& state,
                                     const ObjectiveSpec& spec,
                                     const LabeledDataset& data,
                                     const BatchSample& batch);

}  // namespace rankopt

#endif  // RANKOPT_SADDLE_HPP_
