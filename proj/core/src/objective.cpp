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

#include "rankopt/objective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rankopt {

std::string to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kHinge:
      return "hinge";
    case ObjectiveKind::kRecallAtPrecision:
      return "rap";
    case ObjectiveKind::kPrecisionAtRecall:
      return "par";
    case ObjectiveKind::kAucPr:
      return "aucpr";
    case ObjectiveKind::kAucRoc:
      return "aucroc";
    case ObjectiveKind::kFBeta:
      return "fbeta";
  }
  return "unknown";
}

AnchorWeights anchor_weights(const std::vector<double>& anchors) {
  if (anchors.size() < 2) {
    throw std::invalid_argument(
        "anchor sequence needs a base plus at least one anchor");
  }
  AnchorWeights aw;
  aw.alphas.assign(anchors.begin() + 1, anchors.end());
  aw.deltas.resize(aw.alphas.size());
  for (std::size_t t = 0; t + 1 < anchors.size(); ++t) {
    const double delta = anchors[t + 1] - anchors[t];
    if (!(delta > 0.0)) {
      throw std::invalid_argument("anchors must be strictly increasing");
    }
    aw.deltas[t] = delta;
  }
  return aw;
}

namespace {

std::vector<double> uniform_anchors(std::size_t k, double base, double hi,
                                    double epsilon_cap) {
  if (k == 0) {
    throw std::invalid_argument("anchor count must be >= 1");
  }
  if (!(epsilon_cap > 0.0 && epsilon_cap < 1.0)) {
    throw std::invalid_argument("epsilon_cap must be in (0, 1)");
  }
  const double cap = std::min(hi, 1.0 - epsilon_cap);
  if (!(cap > base)) {
    throw std::invalid_argument("anchor cap does not exceed the base value");
  }
  std::vector<double> anchors{base};
  for (std::size_t t = 1; t <= k; ++t) {
    const double a =
        std::min(base + (hi - base) * static_cast<double>(t) /
                            static_cast<double>(k),
                 cap);
    if (a > anchors.back()) {
      anchors.push_back(a);
    }
  }
  return anchors;
}

}  // namespace

std::vector<double> uniform_precision_anchors(
    std::size_t k, double prior, double epsilon_cap,
    std::optional<std::pair<double, double>> range) {
  if (!(prior > 0.0 && prior < 1.0)) {
    throw std::invalid_argument("prior must be in (0, 1)");
  }
  double lo = 0.0;
  double hi = 1.0;
  if (range) {
    std::tie(lo, hi) = *range;
    if (!(lo >= 0.0 && lo < hi && hi < 1.0)) {
      throw std::invalid_argument("precision range must satisfy 0 <= lo < hi < 1");
    }
  }
  return uniform_anchors(k, std::max(prior, lo), hi, epsilon_cap);
}

std::vector<double> uniform_fpr_anchors(
    std::size_t k, double epsilon_cap,
    std::optional<std::pair<double, double>> range) {
  double lo = 0.0;
  double hi = 1.0;
  if (range) {
    std::tie(lo, hi) = *range;
    if (!(lo >= 0.0 && lo < hi && hi < 1.0)) {
      throw std::invalid_argument("fpr range must satisfy 0 <= lo < hi < 1");
    }
  }
  return uniform_anchors(k, lo, hi, epsilon_cap);
}

ObjectiveSpec make_hinge() { return ObjectiveSpec{}; }

ObjectiveSpec make_recall_at_precision(double alpha) {
  ObjectiveSpec spec;
  spec.kind = ObjectiveKind::kRecallAtPrecision;
  spec.target = alpha;
  return spec;
}

ObjectiveSpec make_precision_at_recall(double target_recall) {
  ObjectiveSpec spec;
  spec.kind = ObjectiveKind::kPrecisionAtRecall;
  spec.target = target_recall;
  return spec;
}

ObjectiveSpec make_fbeta(double beta) {
  ObjectiveSpec spec;
  spec.kind = ObjectiveKind::kFBeta;
  spec.target = beta;
  return spec;
}

ObjectiveSpec make_aucpr(std::size_t k, double prior, double epsilon_cap,
                         std::optional<std::pair<double, double>> range) {
  ObjectiveSpec spec;
  spec.kind = ObjectiveKind::kAucPr;
  spec.anchors = uniform_precision_anchors(k, prior, epsilon_cap, range);
  spec.precision_range = range;
  return spec;
}

ObjectiveSpec make_aucroc(std::size_t k, double epsilon_cap,
                          std::optional<std::pair<double, double>> range) {
  ObjectiveSpec spec;
  spec.kind = ObjectiveKind::kAucRoc;
  spec.anchors = uniform_fpr_anchors(k, epsilon_cap, range);
  spec.precision_range = range;
  return spec;
}

void validate(const ObjectiveSpec& spec, const LabeledDataset& data) {
  switch (spec.kind) {
    case ObjectiveKind::kHinge:
      break;
    case ObjectiveKind::kRecallAtPrecision:
      if (!(spec.target > data.prior() && spec.target < 1.0)) {
        throw std::invalid_argument(
            "R@P target must lie in (prior, 1); prior is " +
            std::to_string(data.prior()));
      }
      break;
    case ObjectiveKind::kPrecisionAtRecall:
      if (!(spec.target > 0.0 && spec.target <= 1.0)) {
        throw std::invalid_argument("P@R target must lie in (0, 1]");
      }
      break;
    case ObjectiveKind::kFBeta:
      if (!(spec.target > 0.0)) {
        throw std::invalid_argument("F-beta requires beta > 0");
      }
      break;
    case ObjectiveKind::kAucPr:
    case ObjectiveKind::kAucRoc: {
      if (spec.anchors.size() < 2) {
        throw std::invalid_argument("AUC objectives need at least one anchor");
      }
      anchor_weights(spec.anchors);  // strictly increasing
      const bool pr = spec.kind == ObjectiveKind::kAucPr;
      for (std::size_t t = 1; t < spec.anchors.size(); ++t) {
        if (!(spec.anchors[t] > 0.0 && spec.anchors[t] < 1.0)) {
          throw std::invalid_argument("AUC anchors must lie in (0, 1)");
        }
      }
      if (pr) {
        const double lo =
            spec.precision_range ? spec.precision_range->first : 0.0;
        const double base = std::max(data.prior(), lo);
        if (std::abs(spec.anchors.front() - base) > 1e-12) {
          throw std::invalid_argument(
              "AUCPR base anchor must equal max(prior, range lo)");
        }
      } else if (spec.anchors.front() < 0.0) {
        throw std::invalid_argument("AUCROC base anchor must be >= 0");
      }
      break;
    }
  }
}

}  // namespace rankopt
