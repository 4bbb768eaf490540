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

#ifndef RANKOPT_SYNTHETIC_HPP_
#define RANKOPT_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "rankopt/dataset.hpp"

namespace rankopt {

enum class GeneratorKind {
  // Two overlapping Gaussian clouds in the first two coordinates: negatives
  // elongated along x and thin along y; positives offset up and to the
  // right, thin along x and elongated along y, their lower tail descending
  // into the negatives. The accuracy-optimal linear separator is measurably
  // worse at precision-at-high-recall than the best achievable linear rule.
  // `overlap` scales how deep the positive tail reaches.
  kTwoGaussiansFig1,
  // Two unit blobs shifted +-2 along the all-ones direction, then pushed
  // apart so every point clears a margin of 0.5; the max-margin direction
  // attains precision = recall = 1.
  kSeparable,
  // Features uniform in [-1, 1]; labels carry no signal.
  kUniformNoise,
};

GeneratorKind generator_from_string(const std::string& name);
std::string to_string(GeneratorKind kind);

struct SyntheticSpec {
  GeneratorKind generator = GeneratorKind::kTwoGaussiansFig1;
  std::size_t n_pos = 1000;
  std::size_t n_neg = 1000;
  std::size_t dimension = 2;  // >= 2; extra coordinates are pure noise
  double overlap = 1.0;
  std::uint64_t seed = 0;
};

// Deterministic given the seed.
LabeledDataset generate(const SyntheticSpec& spec);

}  // namespace rankopt

#endif  // RANKOPT_SYNTHETIC_HPP_
