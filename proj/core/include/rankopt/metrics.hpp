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

#ifndef RANKOPT_METRICS_HPP_
#define RANKOPT_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rankopt/dataset.hpp"
#include "rankopt/scorer.hpp"

namespace rankopt {

struct ScoredExample {
  double score = 0.0;
  int label = 1;  // +-1
};

// Scores paired with labels, sorted by score descending. Examples with equal
// scores form one tie group and cross any threshold together (the >=
// convention). All curve and oracle computations below walk the distinct
// score groups of this ordering.
class ScoredSet {
 public:
  explicit ScoredSet(std::vector<ScoredExample> items);

  // Raw scores (weights . x + bias) of a scorer over a dataset.
  static ScoredSet from_scorer(const ThresholdedScorer& scorer,
                               const LabeledDataset& data);

  const std::vector<ScoredExample>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  std::size_t n_pos() const { return n_pos_; }
  std::size_t n_neg() const { return n_neg_; }
  // Index of the first item of each distinct-score group, ascending by
  // position (so descending by score).
  const std::vector<std::size_t>& group_starts() const { return group_starts_; }

 private:
  std::vector<ScoredExample> items_;
  std::size_t n_pos_ = 0;
  std::size_t n_neg_ = 0;
  std::vector<std::size_t> group_starts_;
};

struct Confusion {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;
};

// Exact confusion counts of the rule score >= threshold.
Confusion confusion_at(const ScoredSet& scored, double threshold);

struct PrPoint {
  double threshold = 0.0;
  double recall = 0.0;
  double precision = 0.0;
};

// One point per distinct score threshold, recall non-decreasing along the
// sequence. Requires at least one positive.
std::vector<PrPoint> pr_curve(const ScoredSet& scored);

struct RocPoint {
  double threshold = 0.0;
  double fpr = 0.0;
  double tpr = 0.0;
};

std::vector<RocPoint> roc_curve(const ScoredSet& scored);

// Rank-based average precision: the mean over positives, in rank order, of
// the precision at each positive's threshold. Tied examples enter together.
double average_precision(const ScoredSet& scored);

struct RecallAtPrecisionResult {
  double recall = 0.0;
  // Threshold achieving the result; +infinity when no threshold reaches the
  // precision target (recall is then 0).
  double threshold = 0.0;
};

// Scans all distinct thresholds and returns the maximum recall among those
// with precision >= alpha. Non-increasing in alpha.
RecallAtPrecisionResult exact_recall_at_precision(const ScoredSet& scored,
                                                  double alpha);

struct PrecisionAtRecallResult {
  double precision = 0.0;
  double threshold = 0.0;
};

// Maximum precision among thresholds with recall >= target_recall.
PrecisionAtRecallResult exact_precision_at_recall(const ScoredSet& scored,
                                                  double target_recall);

// F_beta from confusion counts via the type I / type II error form
// (1+beta^2) tp / ((1+beta^2) tp + beta^2 fn + fp), defined whenever
// tp + fp + fn > 0.
double exact_fbeta(std::int64_t tp, std::int64_t fp, std::int64_t fn,
                   double beta);

// Exact pairwise AUCROC: the fraction of (positive, negative) pairs ranked
// correctly, ties counting one half. Invariant under strictly monotone
// score transforms.
double auc_roc(const ScoredSet& scored);

// Exact evaluation of a scorer on a dataset. Confusion counts and the
// derived point metrics use the first threshold; average precision, AUCROC
// and the PR curve are threshold-free.
struct MetricsReport {
  Confusion counts;
  double precision = 0.0;
  double recall = 0.0;
  double f_beta = 0.0;
  double accuracy = 0.0;
  double average_precision = 0.0;
  double auc_roc = 0.0;
  std::vector<PrPoint> pr_curve;
};

MetricsReport evaluate_scorer(const ThresholdedScorer& scorer,
                              const LabeledDataset& data, double beta = 1.0);

}  // namespace rankopt

#endif  // RANKOPT_METRICS_HPP_
