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

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "rankopt/metrics.hpp"
#include "rankopt/random.hpp"
#include "rankopt/synthetic.hpp"
#include "testutil.hpp"

namespace rankopt {
namespace {

using testing::margins_dataset;

std::vector<std::size_t> all_indices(const LabeledDataset& data) {
  std::vector<std::size_t> idx(data.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

TrainConfig quick_config(std::int64_t steps, double lr = 0.5) {
  TrainConfig cfg;
  cfg.steps = steps;
  cfg.batch_size = 32;
  cfg.lr_primal = lr;
  cfg.lr_dual = lr;
  cfg.l2_reg = 1e-4;
  cfg.eval_every = std::max<std::int64_t>(1, steps / 10);
  return cfg;
}

TEST(SgdStep, DualProjectionHoldsAtZero) {
  // Separable data with unit margins: the R@P dual gradient is -n_pos, so
  // a dual at zero must stay at zero.
  const LabeledDataset data = margins_dataset({2.0, 3.0}, {-2.0, -3.0});
  const ObjectiveSpec spec = make_recall_at_precision(0.7);
  SaddleState state = make_initial_state(spec, data);
  state.scorer.weights = {1.0};
  state.duals = {0.0};
  TrainConfig cfg = quick_config(1);
  const auto idx = all_indices(data);
  const SaddleState next = sgd_step(state, data, idx, spec, cfg);
  EXPECT_DOUBLE_EQ(next.duals[0], 0.0);
}

TEST(SgdStep, ZeroLearningRatesLeaveParametersUnchanged) {
  Rng rng(3);
  const auto data = testing::random_dataset(rng, 16, 2);
  const ObjectiveSpec spec = make_recall_at_precision(0.8);
  SaddleState state = make_initial_state(spec, data);
  state.scorer.weights = {0.3, -0.2};
  TrainConfig cfg = quick_config(1);
  cfg.lr_primal = 0.0;
  cfg.lr_dual = 0.0;
  const auto idx = all_indices(data);
  const SaddleState next = sgd_step(state, data, idx, spec, cfg);
  EXPECT_EQ(next.scorer.weights, state.scorer.weights);
  EXPECT_EQ(next.scorer.bias, state.scorer.bias);
  EXPECT_EQ(next.scorer.thresholds, state.scorer.thresholds);
  EXPECT_EQ(next.duals, state.duals);
}

// One full-batch step from the zero scorer moves the weights by exactly
// -lr times the per-example-mean subgradient, verified against central
// finite differences of the batch Lagrangian.
TEST(SgdStep, FullBatchStepMatchesFiniteDifferenceGradient) {
  const LabeledDataset data =
      margins_dataset({2.0, 0.5, -1.0}, {-2.0, -0.5, 1.0});
  const ObjectiveSpec spec = make_recall_at_precision(0.6);
  SaddleState state = make_initial_state(spec, data);
  // Nudge off the kink so the batch Lagrangian is differentiable here.
  state.scorer.bias = 0.05;
  TrainConfig cfg = quick_config(1, 0.1);
  cfg.l2_reg = 0.0;
  cfg.lr_decay = LrDecay::kConstant;
  const auto idx = all_indices(data);

  const auto fd = testing::fd_gradient(
      [&](const SaddleState& at) {
        return rap_lagrangian(at, 0.6, data).value /
               static_cast<double>(data.size());
      },
      state, /*with_psi=*/false);
  const SaddleState next = sgd_step(state, data, idx, spec, cfg);
  EXPECT_NEAR(next.scorer.weights[0] - state.scorer.weights[0],
              -0.1 * fd[0], 1e-9);
  EXPECT_NEAR(next.scorer.bias - state.scorer.bias, -0.1 * fd[1], 1e-9);
  EXPECT_NEAR(next.scorer.thresholds[0] - state.scorer.thresholds[0],
              -0.1 * fd[2], 1e-9);
}

TEST(SgdStep, DualMovesWithResidualSign) {
  Rng rng(7);
  const auto data = testing::random_dataset(rng, 30, 2);
  const ObjectiveSpec spec = make_recall_at_precision(0.8);
  TrainConfig cfg = quick_config(1);
  cfg.lr_primal = 1e-12;  // isolate the dual update
  cfg.lr_decay = LrDecay::kConstant;
  const auto idx = all_indices(data);
  for (int trial = 0; trial < 30; ++trial) {
    SaddleState state = make_initial_state(spec, data);
    state.scorer = testing::random_scorer(rng, 2, 1);
    state.duals = {rng.uniform(0.5, 2.0)};
    const double residual = rap_constraint_residual(state, 0.8, data);
    const SaddleState next = sgd_step(state, data, idx, spec, cfg);
    if (residual > 1e-9) {
      EXPECT_GT(next.duals[0], state.duals[0]);
    } else if (residual < -1e-9) {
      EXPECT_LT(next.duals[0], state.duals[0]);
    }
  }
}

TEST(Train, DeterministicGivenSeed) {
  SyntheticSpec spec;
  spec.generator = GeneratorKind::kTwoGaussiansFig1;
  spec.n_pos = spec.n_neg = 120;
  spec.seed = 9;
  const LabeledDataset data = generate(spec);
  const ObjectiveSpec objective = make_precision_at_recall(0.9);
  TrainConfig cfg = quick_config(300);
  cfg.seed = 42;
  const TrainResult a = train(data, objective, cfg);
  const TrainResult b = train(data, objective, cfg);
  EXPECT_EQ(a.scorer.weights, b.scorer.weights);
  EXPECT_EQ(a.scorer.bias, b.scorer.bias);
  EXPECT_EQ(a.scorer.thresholds, b.scorer.thresholds);
  EXPECT_EQ(a.final_state.duals, b.final_state.duals);
}

TEST(Train, SeparableDataReachesPerfectMetrics) {
  SyntheticSpec gen;
  gen.generator = GeneratorKind::kSeparable;
  gen.n_pos = gen.n_neg = 80;
  gen.seed = 4;
  const LabeledDataset data = generate(gen);
  for (const ObjectiveSpec& objective :
       {make_recall_at_precision(0.9), make_precision_at_recall(0.9),
        make_fbeta(1.0), make_hinge(), make_aucpr(5, data.prior()),
        make_aucroc(5)}) {
    TrainConfig cfg = quick_config(1500);
    const TrainResult result = train(data, objective, cfg);
    const MetricsReport report = evaluate_scorer(result.scorer, data);
    EXPECT_DOUBLE_EQ(report.precision, 1.0) << to_string(objective.kind);
    EXPECT_DOUBLE_EQ(report.recall, 1.0) << to_string(objective.kind);
    EXPECT_DOUBLE_EQ(report.average_precision, 1.0)
        << to_string(objective.kind);
  }
}

TEST(Train, TraceRoundTripsWithEvaluate) {
  SyntheticSpec gen;
  gen.generator = GeneratorKind::kTwoGaussiansFig1;
  gen.n_pos = gen.n_neg = 100;
  gen.seed = 12;
  const LabeledDataset data = generate(gen);
  gen.seed = 13;
  const LabeledDataset eval_set = generate(gen);
  TrainConfig cfg = quick_config(250);
  const TrainResult result =
      train(data, make_recall_at_precision(0.8), cfg, &eval_set);
  ASSERT_FALSE(result.trace.entries.empty());
  const TraceEntry& last = result.trace.entries.back();
  EXPECT_EQ(last.step, cfg.steps);
  const MetricsReport fresh = evaluate_scorer(result.scorer, eval_set);
  EXPECT_EQ(last.eval.counts.tp, fresh.counts.tp);
  EXPECT_EQ(last.eval.counts.fp, fresh.counts.fp);
  EXPECT_DOUBLE_EQ(last.eval.average_precision, fresh.average_precision);
  EXPECT_DOUBLE_EQ(last.eval.auc_roc, fresh.auc_roc);
}

TEST(Train, LambdaCapHitIsFlagged) {
  // An unreachable precision target on noisy data drives the dual into the
  // cap; the trace must record the event.
  SyntheticSpec gen;
  gen.generator = GeneratorKind::kUniformNoise;
  gen.n_pos = 30;
  gen.n_neg = 70;
  gen.seed = 5;
  const LabeledDataset data = generate(gen);
  const ObjectiveSpec objective = make_recall_at_precision(0.95);
  TrainConfig cfg = quick_config(2000, 1.0);
  cfg.lambda_cap = 2.0;
  cfg.lr_decay = LrDecay::kConstant;
  const TrainResult result = train(data, objective, cfg);
  bool hit = false;
  for (const TraceEntry& e : result.trace.entries) {
    hit |= e.lambda_cap_hit;
    for (double lambda : e.duals) {
      EXPECT_GE(lambda, 0.0);
      EXPECT_LE(lambda, *cfg.lambda_cap);
    }
  }
  EXPECT_TRUE(hit);
}

// On the overlapping-Gaussians task, training for precision at recall 0.95
// finds a direction whose exact precision at that recall beats the plain
// hinge baseline's.
TEST(Train, HighRecallObjectiveBeatsHingeBaselineOnFig1) {
  SyntheticSpec gen;
  gen.generator = GeneratorKind::kTwoGaussiansFig1;
  gen.n_pos = gen.n_neg = 500;
  gen.seed = 2;
  const LabeledDataset data = generate(gen);
  TrainConfig cfg = quick_config(3000);
  cfg.batch_size = 128;
  const TrainResult baseline = train(data, make_hinge(), cfg);
  const TrainResult tuned = train(data, make_precision_at_recall(0.95), cfg);
  const double pb = exact_precision_at_recall(
                        ScoredSet::from_scorer(baseline.scorer, data), 0.95)
                        .precision;
  const double pt = exact_precision_at_recall(
                        ScoredSet::from_scorer(tuned.scorer, data), 0.95)
                        .precision;
  EXPECT_GT(pt, pb);
}

TEST(Train, RejectsInvalidConfigs) {
  Rng rng(1);
  const auto data = testing::random_dataset(rng, 12, 2);
  const ObjectiveSpec objective = make_hinge();
  TrainConfig cfg = quick_config(10);
  cfg.batch_size = 1;
  EXPECT_THROW(train(data, objective, cfg), std::invalid_argument);
  cfg = quick_config(10);
  cfg.lr_primal = -0.1;
  EXPECT_THROW(train(data, objective, cfg), std::invalid_argument);
  cfg = quick_config(0);
  EXPECT_THROW(train(data, objective, cfg), std::invalid_argument);
}

TEST(AveragedIterate, SimpleCases) {
  TrainTrace trace;
  TraceEntry e;
  e.scorer = {{0.0}, 0.0, {0.0}};
  trace.entries.push_back(e);
  e.scorer = {{2.0}, 1.0, {4.0}};
  trace.entries.push_back(e);
  const ThresholdedScorer avg = averaged_iterate(trace);
  EXPECT_DOUBLE_EQ(avg.weights[0], 1.0);
  EXPECT_DOUBLE_EQ(avg.bias, 0.5);
  EXPECT_DOUBLE_EQ(avg.thresholds[0], 2.0);
  // A constant trace averages to itself.
  TrainTrace constant;
  e.scorer = {{3.0, -1.0}, 0.25, {0.5}};
  constant.entries.assign(5, e);
  const ThresholdedScorer same = averaged_iterate(constant);
  EXPECT_EQ(same.weights, e.scorer.weights);
  EXPECT_DOUBLE_EQ(same.bias, e.scorer.bias);
}

TEST(DualityGap, ShrinksUnderFullBatchTraining) {
  // Small smoke version of the convergence acceptance criterion.
  Rng rng(19);
  std::vector<LabeledExample> rows;
  for (int i = 0; i < 50; ++i) {
    rows.push_back({{rng.gaussian() + 1.2, rng.gaussian()}, +1});
    rows.push_back({{rng.gaussian() - 1.2, rng.gaussian()}, -1});
  }
  const LabeledDataset data(std::move(rows));
  const ObjectiveSpec objective = make_recall_at_precision(0.7);
  TrainConfig cfg;
  cfg.steps = 3000;
  cfg.batch_size = data.size();
  cfg.lr_primal = cfg.lr_dual = 0.5;
  cfg.l2_reg = 1e-3;
  cfg.eval_every = 50;
  const SaddleState initial = make_initial_state(objective, data);
  GapConfig gap_cfg;
  gap_cfg.inner_steps = 800;
  const DualityGap before =
      estimate_duality_gap(initial, objective, data, cfg.l2_reg, gap_cfg);
  const TrainResult result = train(data, objective, cfg);
  SaddleState averaged = result.final_state;
  averaged.scorer = averaged_iterate(result.trace);
  const DualityGap after =
      estimate_duality_gap(averaged, objective, data, cfg.l2_reg, gap_cfg);
  EXPECT_GT(before.gap, 0.0);
  EXPECT_LT(after.gap, 0.10 * before.gap);
}

}  // namespace
}  // namespace rankopt
