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

#include "rankopt/fbeta_lp.hpp"
#include "rankopt/random.hpp"

namespace {

std::vector<rankopt::LabeledExample> random_rows(std::size_t n,
                                                 std::size_t dim) {
  rankopt::Rng rng(11);
  std::vector<rankopt::LabeledExample> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x(dim);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    rows.push_back({std::move(x), i < 2 ? (i == 0 ? 1 : -1)
                                        : (rng.uniform() < 0.5 ? 1 : -1)});
  }
  return rows;
}

void BM_F1ProgramSolve(benchmark::State& state) {
  const auto rows = random_rows(state.range(0), 2);
  const rankopt::FBetaLP lp = rankopt::build_lp(rows);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rankopt::solve_lp(lp));
  }
}
BENCHMARK(BM_F1ProgramSolve)->Arg(8)->Arg(24)->Arg(64);

void BM_F1ProgramBuild(benchmark::State& state) {
  const auto rows = random_rows(state.range(0), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rankopt::build_lp(rows));
  }
}
BENCHMARK(BM_F1ProgramBuild)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
