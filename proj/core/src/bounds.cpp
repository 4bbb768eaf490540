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

#include "rankopt/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rankopt {

double hinge_loss(double raw_score, double threshold, int label) {
  return std::max(0.0, 1.0 - label * (raw_score - threshold));
}

double hinge_subgradient(double raw_score, double threshold, int label) {
  return label * (raw_score - threshold) < 1.0 ? -static_cast<double>(label)
                                               : 0.0;
}

BoundValues compute_bounds(const ThresholdedScorer& scorer,
                           std::size_t anchor_index,
                           const LabeledDataset& data) {
  if (anchor_index >= scorer.num_thresholds()) {
    throw std::out_of_range("anchor index " + std::to_string(anchor_index) +
                            " >= " + std::to_string(scorer.num_thresholds()));
  }
  const double threshold = scorer.thresholds[anchor_index];
  BoundValues b;
  for (const LabeledExample& ex : data.examples()) {
    const double loss = hinge_loss(score(scorer, ex.features), threshold,
                                   ex.label);
    if (ex.label > 0) {
      b.loss_pos += loss;
    } else {
      b.loss_neg += loss;
    }
  }
  b.tp_lb = static_cast<double>(data.n_pos()) - b.loss_pos;
  b.fp_ub = b.loss_neg;
  return b;
}

double surrogate_precision(const BoundValues& b) {
  const double denom = b.tp_lb + b.fp_ub;
  if (denom == 0.0) {
    throw std::domain_error("surrogate precision: tp_lb + fp_ub is zero");
  }
  return b.tp_lb / denom;
}

double surrogate_recall(const BoundValues& b, std::size_t n_pos) {
  if (n_pos == 0) {
    throw std::invalid_argument("surrogate recall requires n_pos >= 1");
  }
  return b.tp_lb / static_cast<double>(n_pos);
}

}  // namespace rankopt
