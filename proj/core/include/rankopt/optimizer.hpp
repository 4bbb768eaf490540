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

#ifndef RANKOPT_OPTIMIZER_HPP_
#define RANKOPT_OPTIMIZER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rankopt/dataset.hpp"
#include "rankopt/metrics.hpp"
#include "rankopt/objective.hpp"
#include "rankopt/saddle.hpp"
#include "rankopt/scorer.hpp"

namespace rankopt {

enum class LrDecay { kConstant, kInvSqrt };

struct TrainConfig {
  std::int64_t steps = 1000;
  std::size_t batch_size = 64;
  double lr_primal = 0.5;
  double lr_dual = 0.5;
  LrDecay lr_decay = LrDecay::kInvSqrt;
  double l2_reg = 0.0;  // weights only; bias and thresholds unregularized
  // Duals are projected to [0, lambda_cap]; nullopt disables the cap.
  std::optional<double> lambda_cap = 1e4;
  std::uint64_t seed = 0;
  std::int64_t eval_every = 100;
};

// Throws std::invalid_argument on violated config invariants.
void validate(const TrainConfig& cfg);

struct TraceEntry {
  std::int64_t step = 0;
  double lagrangian = 0.0;  // full-data Lagrangian value at this state
  std::vector<double> duals;
  double psi = 0.0;
  ThresholdedScorer scorer;  // primal snapshot
  MetricsReport eval;        // exact metrics on the evaluation set
  bool lambda_cap_hit = false;
};

struct TrainTrace {
  std::vector<TraceEntry> entries;
};

// One primal-descent / dual-ascent step on a batch estimate of the
// Lagrangian. The primal moves first; the dual ascends at the updated
// primal, then projects onto [0, lambda_cap]. Gradient components whose
// batch estimate requires a class absent from the batch are skipped.
//
// Updates are preconditioned so that one learning rate serves every
// objective: primal gradients are normalized to per-example means, the P@R
// dual steps in units of its multiplier's natural scale n_pos, and the
// F-beta auxiliary psi and multiplier step in units of n_pos and 1/n_pos
// respectively. psi is kept in (0, n_pos] by projection.
//
// Throws std::runtime_error naming the step on a non-finite gradient.
SaddleState sgd_step(const SaddleState& state, const LabeledDataset& data,
                     std::span<const std::size_t> batch_indices,
                     const ObjectiveSpec& objective, const TrainConfig& cfg);

struct TrainResult {
  ThresholdedScorer scorer;  // final iterate
  SaddleState final_state;
  TrainTrace trace;
};

// Runs cfg.steps sgd_steps over seeded shuffled-epoch batches. Deterministic
// given the seed. Trace entries are recorded every cfg.eval_every steps and
// always at the final step; exact metrics are computed on eval_data when
// given, else on the training data.
TrainResult train(const LabeledDataset& data, const ObjectiveSpec& objective,
                  const TrainConfig& cfg,
                  const LabeledDataset* eval_data = nullptr);

// Uniform average of the primal parameters over the last half of the
// recorded snapshots (midpoint included). The standard stabilizer for
// saddle-point SGD.
ThresholdedScorer averaged_iterate(const TrainTrace& trace);

struct GapConfig {
  double dual_grid_max = 10.0;  // primal value maximizes lambda over [0, this]
  std::int64_t inner_steps = 2000;
  double inner_lr = 0.5;
};

struct DualityGap {
  double primal_value = 0.0;  // max over the dual box at the current primal
  double dual_value = 0.0;    // inner minimization at the current duals
  double gap = 0.0;
};

// Estimates the duality gap at a state: the Lagrangian maximized over duals
// in [0, dual_grid_max] (coordinatewise; the Lagrangian is affine in each
// dual) minus the best value found by an inner full-batch primal descent
// started from the state. The l2 term is included on both sides.
DualityGap estimate_duality_gap(const SaddleState& state,
                                const ObjectiveSpec& objective,
                                const LabeledDataset& data, double l2_reg,
                                const GapConfig& gap_cfg = {});

}  // namespace rankopt

#endif  // RANKOPT_OPTIMIZER_HPP_
