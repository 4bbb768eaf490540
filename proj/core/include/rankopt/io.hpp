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

#ifndef RANKOPT_IO_HPP_
#define RANKOPT_IO_HPP_

#include <string>

#include "rankopt/dataset.hpp"
#include "rankopt/metrics.hpp"
#include "rankopt/objective.hpp"
#include "rankopt/optimizer.hpp"
#include "rankopt/scorer.hpp"

namespace rankopt {

// CSV dataset format: header row f0,...,f{d-1},label; labels may be {0,1}
// or {-1,+1} in the file and are normalized to {-1,+1} on load. Values are
// written with shortest round-trip formatting, so load -> save -> load
// reproduces counts and features bit-exactly.
LabeledDataset load_csv_dataset(const std::string& path);
void save_csv_dataset(const LabeledDataset& data, const std::string& path);

// Model JSON: {"weights": [...], "bias": r, "thresholds": [...]}.
ThresholdedScorer load_model_json(const std::string& path);
void save_model_json(const ThresholdedScorer& scorer, const std::string& path);

// Metrics report as a JSON object (pr_curve included). When alpha/beta
// oracles were requested the caller attaches them; see the CLI.
std::string metrics_report_to_json(const MetricsReport& report);
void save_metrics_report(const MetricsReport& report, const std::string& path);

// Trace as JSON lines, one entry per line.
void save_trace_jsonl(const TrainTrace& trace, const std::string& path);

// Curve CSVs with headers threshold,recall,precision / threshold,fpr,tpr.
void save_pr_curve_csv(const std::vector<PrPoint>& curve,
                       const std::string& path);
void save_roc_curve_csv(const std::vector<RocPoint>& curve,
                        const std::string& path);

// JSON training configuration. Recognized keys: objective, target, anchors,
// epsilon_cap, precision_range, lr_primal, lr_dual, lr_decay, l2_reg,
// lambda_cap, steps, batch_size, seed, eval_every. Unknown keys are
// rejected. Every key is optional; absent keys keep defaults.
struct RunConfig {
  std::string objective = "hinge";
  double target = 0.0;
  std::size_t anchors = 10;
  double epsilon_cap = 0.05;
  std::optional<std::pair<double, double>> precision_range;
  TrainConfig train;
};

RunConfig load_run_config(const std::string& path);

// Builds the ObjectiveSpec named by cfg for a concrete dataset (anchor
// construction needs the class prior).
ObjectiveSpec objective_from_config(const RunConfig& cfg,
                                    const LabeledDataset& data);

}  // namespace rankopt

#endif  // RANKOPT_IO_HPP_
