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

#include <numeric>

#include <benchmark/benchmark.h>

#include "rankopt/objective.hpp"
#include "rankopt/optimizer.hpp"
#include "rankopt/synthetic.hpp"

namespace {

rankopt::LabeledDataset bench_data(std::size_t per_class, std::size_t dim) {
  rankopt::SyntheticSpec spec;
  spec.generator = rankopt::GeneratorKind::kTwoGaussiansFig1;
  spec.n_pos = spec.n_neg = per_class;
  spec.dimension = dim;
  spec.seed = 3;
  return rankopt::generate(spec);
}

void BM_SgdStepRap(benchmark::State& state) {
  const auto data = bench_data(4096, state.range(0));
  const auto objective = rankopt::make_recall_at_precision(0.9);
  rankopt::TrainConfig cfg;
  cfg.batch_size = 128;
  cfg.lr_decay = rankopt::LrDecay::kConstant;
  rankopt::SaddleState s = rankopt::make_initial_state(objective, data);
  std::vector<std::size_t> batch(cfg.batch_size);
  std::iota(batch.begin(), batch.end(), std::size_t{0});
  for (auto _ : state) {
    s = rankopt::sgd_step(s, data, batch, objective, cfg);
    benchmark::DoNotOptimize(s.duals[0]);
  }
  state.SetItemsProcessed(state.iterations() * cfg.batch_size);
}
BENCHMARK(BM_SgdStepRap)->Arg(2)->Arg(16)->Arg(64);

void BM_SgdStepAucPr(benchmark::State& state) {
  const auto data = bench_data(4096, 8);
  const auto objective =
      rankopt::make_aucpr(state.range(0), data.prior());
  rankopt::TrainConfig cfg;
  cfg.batch_size = 128;
  cfg.lr_decay = rankopt::LrDecay::kConstant;
  rankopt::SaddleState s = rankopt::make_initial_state(objective, data);
  std::vector<std::size_t> batch(cfg.batch_size);
  std::iota(batch.begin(), batch.end(), std::size_t{0});
  for (auto _ : state) {
    s = rankopt::sgd_step(s, data, batch, objective, cfg);
    benchmark::DoNotOptimize(s.duals[0]);
  }
  state.SetItemsProcessed(state.iterations() * cfg.batch_size);
}
BENCHMARK(BM_SgdStepAucPr)->Arg(5)->Arg(10)->Arg(20);

void BM_TrainFig1(benchmark::State& state) {
  const auto data = bench_data(1000, 2);
  const auto objective = rankopt::make_precision_at_recall(0.95);
  rankopt::TrainConfig cfg;
  cfg.steps = state.range(0);
  cfg.batch_size = 128;
  cfg.l2_reg = 1e-4;
  cfg.eval_every = cfg.steps;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rankopt::train(data, objective, cfg));
  }
}
BENCHMARK(BM_TrainFig1)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
