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

#ifndef RANKOPT_DATASET_HPP_
#define RANKOPT_DATASET_HPP_

#include <cstddef>
#include <vector>

namespace rankopt {

// A single training example. Labels are normalized to {-1, +1}.
struct LabeledExample {
  std::vector<double> features;
  int label = 1;
};

// An immutable binary classification dataset. Construction validates that
// every label is +-1, all features are finite and share one dimension, and
// both classes are present. Safe to share across threads after construction.
class LabeledDataset {
 public:
  explicit LabeledDataset(std::vector<LabeledExample> examples);

  std::size_t size() const { return examples_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t n_pos() const { return n_pos_; }
  std::size_t n_neg() const { return n_neg_; }
  // Positive class prior |Y+| / (|Y+| + |Y-|), always in (0, 1).
  double prior() const {
    return static_cast<double>(n_pos_) / static_cast<double>(size());
  }

  const LabeledExample& operator[](std::size_t i) const { return examples_[i]; }
  const std::vector<LabeledExample>& examples() const { return examples_; }

 private:
  std::vector<LabeledExample> examples_;
  std::size_t dim_ = 0;
  std::size_t n_pos_ = 0;
  std::size_t n_neg_ = 0;
};

}  // namespace rankopt

#endif  // RANKOPT_DATASET_HPP_
