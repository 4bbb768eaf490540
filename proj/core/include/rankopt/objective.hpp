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

#ifndef RANKOPT_OBJECTIVE_HPP_
#define RANKOPT_OBJECTIVE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankopt/dataset.hpp"

namespace rankopt {

enum class ObjectiveKind {
  kHinge,              // plain unweighted hinge; the accuracy baseline
  kRecallAtPrecision,  // max recall subject to precision >= alpha
  kPrecisionAtRecall,  // max precision subject to recall >= beta
  kAucPr,              // area under the precision-recall curve
  kAucRoc,             // area under the ROC curve
  kFBeta,              // F_beta via the auxiliary-variable saddle form
};

std::string to_string(ObjectiveKind kind);

// Which surrogate to optimize, its target, and (for the AUC kinds) the
// anchor sequence alpha_0 < alpha_1 < ... < alpha_k. anchors[0] is the base
// of the discretized integral and carries no dual or threshold; the k
// remaining anchors each own one threshold and one multiplier.
struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::kHinge;
  // alpha for R@P, target recall for P@R, beta for F-beta. Unused for the
  // AUC kinds and for the hinge baseline.
  double target = 0.0;
  std::vector<double> anchors;  // AUC kinds only, base first
  std::optional<std::pair<double, double>> precision_range;

  bool is_auc() const {
    return kind == ObjectiveKind::kAucPr || kind == ObjectiveKind::kAucRoc;
  }
  std::size_t num_thresholds() const {
    return is_auc() ? anchors.size() - 1 : 1;
  }
  std::size_t num_duals() const {
    switch (kind) {
      case ObjectiveKind::kHinge:
        return 0;
      case ObjectiveKind::kAucPr:
      case ObjectiveKind::kAucRoc:
        return anchors.size() - 1;
      default:
        return 1;
    }
  }
};

// Anchor values with their consecutive gaps. alphas holds the k dual-bearing
// anchors; deltas[t] = alphas[t] - previous anchor (the base for t = 0).
// All deltas are positive and sum to alphas.back() - base.
struct AnchorWeights {
  std::vector<double> alphas;
  std::vector<double> deltas;
};

// Splits a full anchor sequence (base first, strictly increasing) into
// AnchorWeights. Throws std::invalid_argument if not strictly increasing.
AnchorWeights anchor_weights(const std::vector<double>& anchors);

// Uniform precision anchors alpha_t = base + (hi - base) * t / k for
// t = 1..k with base = max(prior, range lo) and hi = range hi (1 without a
// range). Values above 1 - epsilon_cap are clamped there and de-duplicated,
// so the result may hold fewer than k anchors. Returns the full sequence
// including the base.
std::vector<double> uniform_precision_anchors(
    std::size_t k, double prior, double epsilon_cap = 0.05,
    std::optional<std::pair<double, double>> range = std::nullopt);

// Uniform false-positive-rate anchors phi_t = lo + (hi - lo) * t / k with
// base lo = 0 without a range; same clamp at 1 - epsilon_cap.
std::vector<double> uniform_fpr_anchors(
    std::size_t k, double epsilon_cap = 0.05,
    std::optional<std::pair<double, double>> range = std::nullopt);

ObjectiveSpec make_hinge();
ObjectiveSpec make_recall_at_precision(double alpha);
ObjectiveSpec make_precision_at_recall(double target_recall);
ObjectiveSpec make_fbeta(double beta);
ObjectiveSpec make_aucpr(std::size_t k, double prior, double epsilon_cap = 0.05,
                         std::optional<std::pair<double, double>> range =
                             std::nullopt);
ObjectiveSpec make_aucroc(std::size_t k, double epsilon_cap = 0.05,
                          std::optional<std::pair<double, double>> range =
                              std::nullopt);

// Validates spec invariants against a concrete dataset: R@P needs
// alpha in (prior, 1), P@R a target in (0, 1], F-beta a positive beta, and
// AUC kinds a strictly increasing in-range anchor sequence. Throws
// std::invalid_argument with a description on violation.
void validate(const ObjectiveSpec& spec, const LabeledDataset& data);

}  // namespace rankopt

#endif  // RANKOPT_OBJECTIVE_HPP_
