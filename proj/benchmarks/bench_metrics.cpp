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

#include <benchmark/benchmark.h>

#include "rankopt/metrics.hpp"
#include "rankopt/random.hpp"

namespace {

std::vector<rankopt::ScoredExample> random_items(std::size_t n) {
  rankopt::Rng rng(7);
  std::vector<rankopt::ScoredExample> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    items.push_back({rng.gaussian(), rng.uniform() < 0.3 ? 1 : -1});
  }
  items[0].label = 1;
  items[1].label = -1;
  return items;
}

void BM_ScoredSetSort(benchmark::State& state) {
  const auto items = random_items(state.range(0));
  for (auto _ : state) {
    rankopt::ScoredSet scored(items);
    benchmark::DoNotOptimize(scored.n_pos());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScoredSetSort)->Range(1 << 10, 1 << 17)->Complexity();

void BM_AveragePrecision(benchmark::State& state) {
  const rankopt::ScoredSet scored(random_items(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rankopt::average_precision(scored));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AveragePrecision)->Range(1 << 10, 1 << 17)->Complexity();

void BM_AucRoc(benchmark::State& state) {
  const rankopt::ScoredSet scored(random_items(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rankopt::auc_roc(scored));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AucRoc)->Range(1 << 10, 1 << 17)->Complexity();

void BM_RecallAtPrecision(benchmark::State& state) {
  const rankopt::ScoredSet scored(random_items(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rankopt::exact_recall_at_precision(scored, 0.8));
  }
}
BENCHMARK(BM_RecallAtPrecision)->Range(1 << 10, 1 << 17);

}  // namespace

BENCHMARK_MAIN();
