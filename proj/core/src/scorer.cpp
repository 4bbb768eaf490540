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

#include "rankopt/scorer.hpp"

#include <stdexcept>
#include <string>

namespace rankopt {

double score(const ThresholdedScorer& scorer, std::span<const double> x) {
  if (x.size() != scorer.weights.size()) {
    throw std::invalid_argument("score: feature dimension " +
                                std::to_string(x.size()) +
                                " != scorer dimension " +
                                std::to_string(scorer.weights.size()));
  }
  double s = scorer.bias;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += scorer.weights[i] * x[i];
  }
  return s;
}

ThresholdedScorer zero_scorer(std::size_t dim, std::size_t num_thresholds) {
  ThresholdedScorer scorer;
  scorer.weights.assign(dim, 0.0);
  scorer.bias = 0.0;
  scorer.thresholds.assign(num_thresholds, 0.0);
  return scorer;
}

}  // namespace rankopt
