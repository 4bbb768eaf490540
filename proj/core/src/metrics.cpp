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

#include "rankopt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace rankopt {

ScoredSet::ScoredSet(std::vector<ScoredExample> items)
    : items_(std::move(items)) {
  std::stable_sort(items_.begin(), items_.end(),
                   [](const ScoredExample& a, const ScoredExample& b) {
                     return a.score > b.score;
                   });
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].label > 0) {
      ++n_pos_;
    } else {
      ++n_neg_;
    }
    if (i == 0 || items_[i].score != items_[i - 1].score) {
      group_starts_.push_back(i);
    }
  }
}

ScoredSet ScoredSet::from_scorer(const ThresholdedScorer& scorer,
                                 const LabeledDataset& data) {
  std::vector<ScoredExample> items;
  items.reserve(data.size());
  for (const LabeledExample& ex : data.examples()) {
    items.push_back({score(scorer, ex.features), ex.label});
  }
  return ScoredSet(std::move(items));
}

Confusion confusion_at(const ScoredSet& scored, double threshold) {
  Confusion c;
  for (const ScoredExample& item : scored.items()) {
    const bool predicted = item.score >= threshold;
    if (item.label > 0) {
      (predicted ? c.tp : c.fn)++;
    } else {
      (predicted ? c.fp : c.tn)++;
    }
  }
  return c;
}

namespace {

// Walks the distinct-score groups in descending score order, calling
// visit(threshold, cumulative tp, cumulative fp) after each whole group has
// crossed the threshold.
template <typename Visitor>
void for_each_threshold(const ScoredSet& scored, Visitor&& visit) {
  const auto& items = scored.items();
  const auto& starts = scored.group_starts();
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  for (std::size_t g = 0; g < starts.size(); ++g) {
    const std::size_t end =
        g + 1 < starts.size() ? starts[g + 1] : items.size();
    for (std::size_t i = starts[g]; i < end; ++i) {
      if (items[i].label > 0) {
        ++tp;
      } else {
        ++fp;
      }
    }
    visit(items[starts[g]].score, tp, fp);
  }
}

}  // namespace

std::vector<PrPoint> pr_curve(const ScoredSet& scored) {
  if (scored.n_pos() == 0) {
    throw std::invalid_argument("pr_curve requires at least one positive");
  }
  std::vector<PrPoint> curve;
  curve.reserve(scored.group_starts().size());
  const double n_pos = static_cast<double>(scored.n_pos());
  for_each_threshold(scored, [&](double threshold, std::int64_t tp,
                                 std::int64_t fp) {
    curve.push_back({threshold, static_cast<double>(tp) / n_pos,
                     static_cast<double>(tp) / static_cast<double>(tp + fp)});
  });
  return curve;
}

std::vector<RocPoint> roc_curve(const ScoredSet& scored) {
  if (scored.n_pos() == 0 || scored.n_neg() == 0) {
    throw std::invalid_argument("roc_curve requires both classes");
  }
  std::vector<RocPoint> curve;
  curve.reserve(scored.group_starts().size());
  const double n_pos = static_cast<double>(scored.n_pos());
  const double n_neg = static_cast<double>(scored.n_neg());
  for_each_threshold(scored, [&](double threshold, std::int64_t tp,
                                 std::int64_t fp) {
    curve.push_back({threshold, static_cast<double>(fp) / n_neg,
                     static_cast<double>(tp) / n_pos});
  });
  return curve;
}

double average_precision(const ScoredSet& scored) {
  if (scored.n_pos() == 0) {
    throw std::invalid_argument(
        "average_precision requires at least one positive");
  }
  double ap = 0.0;
  std::int64_t prev_tp = 0;
  for_each_threshold(scored,
                     [&](double, std::int64_t tp, std::int64_t fp) {
                       if (tp > prev_tp) {
                         ap += static_cast<double>(tp - prev_tp) *
                               static_cast<double>(tp) /
                               static_cast<double>(tp + fp);
                         prev_tp = tp;
                       }
                     });
  return ap / static_cast<double>(scored.n_pos());
}

RecallAtPrecisionResult exact_recall_at_precision(const ScoredSet& scored,
                                                  double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  RecallAtPrecisionResult best{0.0, std::numeric_limits<double>::infinity()};
  bool found = false;
  const double n_pos = static_cast<double>(scored.n_pos());
  for_each_threshold(scored, [&](double threshold, std::int64_t tp,
                                 std::int64_t fp) {
    const double precision =
        static_cast<double>(tp) / static_cast<double>(tp + fp);
    const double recall = static_cast<double>(tp) / n_pos;
    if (precision >= alpha && (!found || recall > best.recall)) {
      best = {recall, threshold};
      found = true;
    }
  });
  return best;
}

PrecisionAtRecallResult exact_precision_at_recall(const ScoredSet& scored,
                                                  double target_recall) {
  if (!(target_recall > 0.0 && target_recall <= 1.0)) {
    throw std::invalid_argument("target recall must lie in (0, 1]");
  }
  PrecisionAtRecallResult best{0.0, std::numeric_limits<double>::infinity()};
  bool found = false;
  const double n_pos = static_cast<double>(scored.n_pos());
  for_each_threshold(scored, [&](double threshold, std::int64_t tp,
                                 std::int64_t fp) {
    const double precision =
        static_cast<double>(tp) / static_cast<double>(tp + fp);
    const double recall = static_cast<double>(tp) / n_pos;
    if (recall >= target_recall && (!found || precision > best.precision)) {
      best = {precision, threshold};
      found = true;
    }
  });
  return best;
}

double exact_fbeta(std::int64_t tp, std::int64_t fp, std::int64_t fn,
                   double beta) {
  if (tp + fp + fn <= 0) {
    throw std::invalid_argument("exact_fbeta requires tp + fp + fn > 0");
  }
  const double beta2 = beta * beta;
  const double num = (1.0 + beta2) * static_cast<double>(tp);
  return num / (num + beta2 * static_cast<double>(fn) +
                static_cast<double>(fp));
}

double auc_roc(const ScoredSet& scored) {
  if (scored.n_pos() == 0 || scored.n_neg() == 0) {
    throw std::invalid_argument("auc_roc requires both classes");
  }
  // Mann-Whitney with midranks over tie groups: equals the fraction of
  // correctly ordered (positive, negative) pairs with ties counting half.
  const auto& items = scored.items();
  const auto& starts = scored.group_starts();
  double rank_sum_pos = 0.0;  // ranks ascending by score
  const std::size_t n = items.size();
  for (std::size_t g = 0; g < starts.size(); ++g) {
    const std::size_t begin = starts[g];
    const std::size_t end = g + 1 < starts.size() ? starts[g + 1] : n;
    // Items are sorted descending; positions begin..end-1 correspond to
    // ascending ranks n - end + 1 .. n - begin.
    const double mid_rank =
        (static_cast<double>(n - end + 1) + static_cast<double>(n - begin)) /
        2.0;
    for (std::size_t i = begin; i < end; ++i) {
      if (items[i].label > 0) {
        rank_sum_pos += mid_rank;
      }
    }
  }
  const double n_pos = static_cast<double>(scored.n_pos());
  const double n_neg = static_cast<double>(scored.n_neg());
  return (rank_sum_pos - n_pos * (n_pos + 1.0) / 2.0) / (n_pos * n_neg);
}

MetricsReport evaluate_scorer(const ThresholdedScorer& scorer,
                              const LabeledDataset& data, double beta) {
  const ScoredSet scored = ScoredSet::from_scorer(scorer, data);
  MetricsReport report;
  report.counts = confusion_at(scored, scorer.thresholds.at(0));
  const Confusion& c = report.counts;
  report.precision = c.tp + c.fp > 0 ? static_cast<double>(c.tp) /
                                           static_cast<double>(c.tp + c.fp)
                                     : 0.0;
  report.recall = static_cast<double>(c.tp) / static_cast<double>(data.n_pos());
  report.f_beta = exact_fbeta(c.tp, c.fp, c.fn, beta);
  report.accuracy = static_cast<double>(c.tp + c.tn) /
                    static_cast<double>(data.size());
  report.average_precision = average_precision(scored);
  report.auc_roc = auc_roc(scored);
  report.pr_curve = pr_curve(scored);
  return report;
}

}  // namespace rankopt
