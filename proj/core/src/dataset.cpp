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

#include "rankopt/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace rankopt {

LabeledDataset::LabeledDataset(std::vector<LabeledExample> examples)
    : examples_(std::move(examples)) {
  if (examples_.empty()) {
    throw std::invalid_argument("dataset is empty");
  }
  dim_ = examples_[0].features.size();
  for (std::size_t i = 0; i < examples_.size(); ++i) {
    const LabeledExample& ex = examples_[i];
    if (ex.label != 1 && ex.label != -1) {
      throw std::invalid_argument("example " + std::to_string(i) +
                                  ": label must be +1 or -1, got " +
                                  std::to_string(ex.label));
    }
    if (ex.features.size() != dim_) {
      throw std::invalid_argument(
          "example " + std::to_string(i) + ": dimension " +
          std::to_string(ex.features.size()) + " != " + std::to_string(dim_));
    }
    for (double v : ex.features) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("example " + std::to_string(i) +
                                    ": non-finite feature value");
      }
    }
    if (ex.label > 0) {
      ++n_pos_;
    } else {
      ++n_neg_;
    }
  }
  if (n_pos_ == 0 || n_neg_ == 0) {
    throw std::invalid_argument(
        "dataset must contain both classes (got " + std::to_string(n_pos_) +
        " positives, " + std::to_string(n_neg_) + " negatives)");
  }
}

}  // namespace rankopt
