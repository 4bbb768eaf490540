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

#ifndef RANKOPT_BOUNDS_HPP_
#define RANKOPT_BOUNDS_HPP_

#include <cstddef>

#include "rankopt/dataset.hpp"
#include "rankopt/scorer.hpp"

namespace rankopt {

// Hinge loss max(0, 1 - label * (raw_score - threshold)) of a +-1 labeled
// example scored against one decision threshold.
double hinge_loss(double raw_score, double threshold, int label);

// Subgradient of hinge_loss with respect to raw_score: -label on the active
// branch (label * (raw_score - threshold) < 1), 0 otherwise. The kink at
// margin exactly 1 takes the inactive branch, so perfectly-fit points
// contribute nothing. The derivative with respect to threshold is the
// negation of this value.
double hinge_subgradient(double raw_score, double threshold, int label);

// Hinge sums over each class at one threshold, and the counting bounds they
// induce: tp_lb = n_pos - loss_pos lower-bounds the true-positive count
// (tp_lb may be negative), fp_ub = loss_neg upper-bounds the false-positive
// count.
struct BoundValues {
  double tp_lb = 0.0;
  double fp_ub = 0.0;
  double loss_pos = 0.0;  // sum of hinge losses over positives
  double loss_neg = 0.0;  // sum of hinge losses over negatives
};

// Evaluates the hinge sums of `scorer` at thresholds[anchor_index] over the
// dataset, accumulating in dataset order. Throws std::out_of_range if
// anchor_index >= number of thresholds.
BoundValues compute_bounds(const ThresholdedScorer& scorer,
                           std::size_t anchor_index,
                           const LabeledDataset& data);

// tp_lb / (tp_lb + fp_ub); never exceeds the exact precision. Throws
// std::domain_error when the denominator is zero.
double surrogate_precision(const BoundValues& b);

// tp_lb / n_pos; never exceeds the exact recall.
double surrogate_recall(const BoundValues& b, std::size_t n_pos);

}  // namespace rankopt

#endif  // RANKOPT_BOUNDS_HPP_
