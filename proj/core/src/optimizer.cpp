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

#include "rankopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rankopt/random.hpp"

namespace rankopt {

namespace {

constexpr double kPsiFloor = 1e-3;

// Per-objective step preconditioning. The Lagrangians are sums over
// examples, so primal steps use per-example means. Two variables live on
// different natural scales and step in their own units: the P@R multiplier
// (which balances a summed objective against a mean constraint, so its
// optimum is O(n_pos)) and the F-beta auxiliary psi (which tracks the
// true-positive lower bound, O(n_pos)) with its O(1/n_pos) multiplier.
struct StepScales {
  double primal = 1.0;
  double dual = 1.0;
  double psi = 0.0;
};

StepScales step_scales(ObjectiveKind kind, const LabeledDataset& data) {
  const double n = static_cast<double>(data.size());
  const double n_pos = static_cast<double>(data.n_pos());
  switch (kind) {
    case ObjectiveKind::kPrecisionAtRecall:
      return {1.0 / n, n_pos * n_pos / n, 0.0};
    case ObjectiveKind::kFBeta:
      return {1.0, 1.0 / (n_pos * n_pos), n_pos * n_pos};
    default:
      return {1.0 / n, 1.0 / n, 0.0};
  }
}

double decayed(double lr, LrDecay decay, std::int64_t step) {
  return decay == LrDecay::kInvSqrt
             ? lr / std::sqrt(static_cast<double>(step + 1))
             : lr;
}

bool all_finite(const SaddleEvaluation& e) {
  if (!std::isfinite(e.value) || !std::isfinite(e.grad_bias) ||
      !std::isfinite(e.grad_psi)) {
    return false;
  }
  auto finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](double x) { return std::isfinite(x); });
  };
  return finite(e.grad_weights) && finite(e.grad_thresholds) &&
         finite(e.grad_duals);
}

void apply_primal_step(SaddleState& state, const SaddleEvaluation& eval,
                       double lr, double l2_reg, const StepScales& scales,
                       std::size_t n_pos) {
  for (std::size_t j = 0; j < state.scorer.weights.size(); ++j) {
    state.scorer.weights[j] -=
        lr * (scales.primal * eval.grad_weights[j] +
              l2_reg * state.scorer.weights[j]);
  }
  state.scorer.bias -= lr * scales.primal * eval.grad_bias;
  for (std::size_t t = 0; t < state.scorer.thresholds.size(); ++t) {
    state.scorer.thresholds[t] -= lr * scales.primal * eval.grad_thresholds[t];
  }
  if (scales.psi != 0.0) {
    state.psi -= lr * scales.psi * eval.grad_psi;
    state.psi = std::clamp(state.psi, kPsiFloor, static_cast<double>(n_pos));
  }
}

double l2_term(const SaddleState& state, double l2_reg,
               const StepScales& scales) {
  double sq = 0.0;
  for (double w : state.scorer.weights) sq += w * w;
  // The optimizer descends primal_scale * L + (l2/2)|w|^2; expressed in the
  // Lagrangian's sum units the ridge term is (l2/2)|w|^2 / primal_scale.
  return 0.5 * l2_reg * sq / scales.primal;
}

}  // namespace

void validate(const TrainConfig& cfg) {
  if (cfg.steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (cfg.batch_size < 2) throw std::invalid_argument("batch_size must be >= 2");
  if (!(cfg.lr_primal > 0.0) || !(cfg.lr_dual > 0.0)) {
    throw std::invalid_argument("learning rates must be positive");
  }
  if (cfg.l2_reg < 0.0) throw std::invalid_argument("l2_reg must be >= 0");
  if (cfg.lambda_cap && !(*cfg.lambda_cap > 0.0)) {
    throw std::invalid_argument("lambda_cap must be positive");
  }
  if (cfg.eval_every < 1) throw std::invalid_argument("eval_every must be >= 1");
}

SaddleState sgd_step(const SaddleState& state, const LabeledDataset& data,
                     std::span<const std::size_t> batch_indices,
                     const ObjectiveSpec& objective, const TrainConfig& cfg) {
  const BatchSample batch = make_batch(data, batch_indices);
  const StepScales scales = step_scales(objective.kind, data);
  const double lr_p = decayed(cfg.lr_primal, cfg.lr_decay, state.step);
  const double lr_d = decayed(cfg.lr_dual, cfg.lr_decay, state.step);

  const SaddleEvaluation primal_eval =
      evaluate_lagrangian(state, objective, data, batch);
  if (!all_finite(primal_eval)) {
    throw std::runtime_error("non-finite gradient at step " +
                             std::to_string(state.step));
  }

  SaddleState next = state;
  apply_primal_step(next, primal_eval, lr_p, cfg.l2_reg, scales, data.n_pos());

  // Dual ascent at the updated primal, then projection onto [0, cap].
  if (!next.duals.empty()) {
    const SaddleEvaluation dual_eval =
        evaluate_lagrangian(next, objective, data, batch);
    if (!all_finite(dual_eval)) {
      throw std::runtime_error("non-finite dual gradient at step " +
                               std::to_string(state.step));
    }
    const double cap = cfg.lambda_cap
                           ? *cfg.lambda_cap
                           : std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < next.duals.size(); ++t) {
      next.duals[t] = std::clamp(
          next.duals[t] + lr_d * scales.dual * dual_eval.grad_duals[t], 0.0,
          cap);
    }
  }
  next.step = state.step + 1;
  return next;
}

namespace {

TraceEntry make_trace_entry(const SaddleState& state,
                            const ObjectiveSpec& objective,
                            const LabeledDataset& data,
                            const LabeledDataset& eval_data,
                            const TrainConfig& cfg) {
  TraceEntry entry;
  entry.step = state.step;
  entry.lagrangian = evaluate_lagrangian(state, objective, data).value;
  entry.duals = state.duals;
  entry.psi = state.psi;
  entry.scorer = state.scorer;
  const double beta =
      objective.kind == ObjectiveKind::kFBeta ? objective.target : 1.0;
  entry.eval = evaluate_scorer(state.scorer, eval_data, beta);
  if (cfg.lambda_cap) {
    for (double lambda : state.duals) {
      if (lambda >= *cfg.lambda_cap) entry.lambda_cap_hit = true;
    }
  }
  return entry;
}

}  // namespace

TrainResult train(const LabeledDataset& data, const ObjectiveSpec& objective,
                  const TrainConfig& cfg, const LabeledDataset* eval_data) {
  validate(cfg);
  validate(objective, data);
  const LabeledDataset& eval_set = eval_data ? *eval_data : data;

  SaddleState state = make_initial_state(objective, data);
  Rng rng(cfg.seed);
  std::vector<std::size_t> perm(data.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  rng.shuffle(perm);
  std::size_t cursor = 0;

  TrainResult result;
  for (std::int64_t s = 0; s < cfg.steps; ++s) {
    if (cursor >= perm.size()) {
      rng.shuffle(perm);
      cursor = 0;
    }
    const std::size_t take = std::min(cfg.batch_size, perm.size() - cursor);
    std::span<const std::size_t> batch(perm.data() + cursor, take);
    cursor += take;
    state = sgd_step(state, data, batch, objective, cfg);
    if (state.step % cfg.eval_every == 0 || s + 1 == cfg.steps) {
      result.trace.entries.push_back(
          make_trace_entry(state, objective, data, eval_set, cfg));
    }
  }
  result.scorer = state.scorer;
  result.final_state = std::move(state);
  return result;
}

ThresholdedScorer averaged_iterate(const TrainTrace& trace) {
  if (trace.entries.empty()) {
    throw std::invalid_argument("averaged_iterate needs a non-empty trace");
  }
  const std::size_t n = trace.entries.size();
  const std::size_t start = (n - 1) / 2;  // midpoint inclusive
  ThresholdedScorer avg = trace.entries[start].scorer;
  for (std::size_t i = start + 1; i < n; ++i) {
    const ThresholdedScorer& s = trace.entries[i].scorer;
    for (std::size_t j = 0; j < avg.weights.size(); ++j) {
      avg.weights[j] += s.weights[j];
    }
    avg.bias += s.bias;
    for (std::size_t t = 0; t < avg.thresholds.size(); ++t) {
      avg.thresholds[t] += s.thresholds[t];
    }
  }
  const double count = static_cast<double>(n - start);
  for (double& w : avg.weights) w /= count;
  avg.bias /= count;
  for (double& t : avg.thresholds) t /= count;
  return avg;
}

DualityGap estimate_duality_gap(const SaddleState& state,
                                const ObjectiveSpec& objective,
                                const LabeledDataset& data, double l2_reg,
                                const GapConfig& gap_cfg) {
  const StepScales scales = step_scales(objective.kind, data);

  // The Lagrangian is affine in each dual, so the maximum over the dual box
  // [0, B]^K sits at a corner selected by the sign of each dual gradient.
  const SaddleEvaluation at_state = evaluate_lagrangian(state, objective, data);
  double primal_value = at_state.value + l2_term(state, l2_reg, scales);
  for (std::size_t t = 0; t < state.duals.size(); ++t) {
    const double g = at_state.grad_duals[t];
    const double best_lambda = g > 0.0 ? gap_cfg.dual_grid_max : 0.0;
    primal_value += (best_lambda - state.duals[t]) * g;
  }

  // Inner full-batch primal descent at fixed duals; best value seen.
  SaddleState inner = state;
  double dual_value = at_state.value + l2_term(state, l2_reg, scales);
  for (std::int64_t s = 0; s < gap_cfg.inner_steps; ++s) {
    const SaddleEvaluation eval = evaluate_lagrangian(inner, objective, data);
    const double lr = gap_cfg.inner_lr / std::sqrt(static_cast<double>(s + 1));
    apply_primal_step(inner, eval, lr, l2_reg, scales, data.n_pos());
    const double value = evaluate_lagrangian(inner, objective, data).value +
                         l2_term(inner, l2_reg, scales);
    dual_value = std::min(dual_value, value);
  }
  return {primal_value, dual_value, primal_value - dual_value};
}

}  // namespace rankopt
