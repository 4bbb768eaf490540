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

#ifndef RANKOPT_SCORER_HPP_
#define RANKOPT_SCORER_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace rankopt {

// A linear score function together with one decision threshold per anchor.
// The raw score of x is weights . x + bias; classification at anchor t is
// the predicate score(x) >= thresholds[t]. Shifting bias and every
// threshold by the same constant leaves all classifications unchanged.
struct ThresholdedScorer {
  std::vector<double> weights;
  double bias = 0.0;
  std::vector<double> thresholds;  // K >= 1

  std::size_t dim() const { return weights.size(); }
  std::size_t num_thresholds() const { return thresholds.size(); }
};

// Returns weights . x + bias. Thresholds are not subtracted here; callers
// apply them. Throws std::invalid_argument on dimension mismatch.
double score(const ThresholdedScorer& scorer, std::span<const double> x);

// A scorer with all parameters zero.
ThresholdedScorer zero_scorer(std::size_t dim, std::size_t num_thresholds);

}  // namespace rankopt

#endif  // RANKOPT_SCORER_HPP_
