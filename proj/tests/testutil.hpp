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

#ifndef RANKOPT_TESTS_TESTUTIL_HPP_
#define RANKOPT_TESTS_TESTUTIL_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "rankopt/dataset.hpp"
#include "rankopt/random.hpp"
#include "rankopt/saddle.hpp"
#include "rankopt/scorer.hpp"

namespace rankopt::testing {

inline LabeledDataset make_dataset(
    std::initializer_list<std::pair<std::vector<double>, int>> rows) {
  std::vector<LabeledExample> examples;
  for (const auto& [x, y] : rows) {
    examples.push_back({x, y});
  }
  return LabeledDataset(std::move(examples));
}

// 1D dataset whose positive raw scores under weights=[1], bias=0, theta=0
// are exactly the feature values. Used by the worked numeric examples.
inline LabeledDataset margins_dataset(const std::vector<double>& pos,
                                      const std::vector<double>& neg) {
  std::vector<LabeledExample> examples;
  for (double v : pos) examples.push_back({{v}, +1});
  for (double v : neg) examples.push_back({{v}, -1});
  return LabeledDataset(std::move(examples));
}

inline LabeledDataset random_dataset(Rng& rng, std::size_t n, std::size_t dim,
                                     double class_shift = 0.0) {
  std::vector<LabeledExample> examples;
  examples.reserve(n);
  // Two forced examples keep both classes present.
  for (std::size_t i = 0; i < n; ++i) {
    const int label = i == 0 ? 1 : i == 1 ? -1 : (rng.uniform() < 0.5 ? 1 : -1);
    std::vector<double> x(dim);
    for (double& v : x) {
      v = rng.gaussian() + label * class_shift;
    }
    examples.push_back({std::move(x), label});
  }
  return LabeledDataset(std::move(examples));
}

inline ThresholdedScorer random_scorer(Rng& rng, std::size_t dim,
                                       std::size_t num_thresholds,
                                       double scale = 1.0) {
  ThresholdedScorer scorer;
  scorer.weights.resize(dim);
  for (double& w : scorer.weights) w = scale * rng.gaussian();
  scorer.bias = scale * rng.gaussian();
  scorer.thresholds.resize(num_thresholds);
  for (double& t : scorer.thresholds) t = scale * rng.gaussian();
  return scorer;
}

// Distance of the closest example/threshold pair to the hinge kink
// (margin = 1). Gradient checks sample points where this is bounded away
// from zero.
inline double kink_distance(const SaddleState& state,
                            const LabeledDataset& data) {
  double closest = std::numeric_limits<double>::infinity();
  for (const LabeledExample& ex : data.examples()) {
    const double raw = score(state.scorer, ex.features);
    for (double theta : state.scorer.thresholds) {
      closest = std::min(closest, std::abs(1.0 - ex.label * (raw - theta)));
    }
  }
  return closest;
}

// Flattens the differentiable coordinates of a state: weights, bias,
// thresholds, duals, then psi when in use.
struct StateVector {
  static std::vector<double> pack(const SaddleState& s, bool with_psi) {
    std::vector<double> v(s.scorer.weights);
    v.push_back(s.scorer.bias);
    v.insert(v.end(), s.scorer.thresholds.begin(), s.scorer.thresholds.end());
    v.insert(v.end(), s.duals.begin(), s.duals.end());
    if (with_psi) v.push_back(s.psi);
    return v;
  }

  static SaddleState unpack(const std::vector<double>& v,
                            const SaddleState& like, bool with_psi) {
    SaddleState s = like;
    std::size_t at = 0;
    for (double& w : s.scorer.weights) w = v[at++];
    s.scorer.bias = v[at++];
    for (double& t : s.scorer.thresholds) t = v[at++];
    for (double& d : s.duals) d = v[at++];
    if (with_psi) s.psi = v[at++];
    return s;
  }

  static std::vector<double> pack_gradient(const SaddleEvaluation& e,
                                           bool with_psi) {
    std::vector<double> g(e.grad_weights);
    g.push_back(e.grad_bias);
    g.insert(g.end(), e.grad_thresholds.begin(), e.grad_thresholds.end());
    g.insert(g.end(), e.grad_duals.begin(), e.grad_duals.end());
    if (with_psi) g.push_back(e.grad_psi);
    return g;
  }
};

// Central finite differences of a scalar function of the state, one
// coordinate at a time.
inline std::vector<double> fd_gradient(
    const std::function<double(const SaddleState&)>& value,
    const SaddleState& at, bool with_psi, double h = 1e-5) {
  const std::vector<double> x0 = StateVector::pack(at, with_psi);
  std::vector<double> grad(x0.size());
  for (std::size_t i = 0; i < x0.size(); ++i) {
    std::vector<double> hi = x0;
    std::vector<double> lo = x0;
    hi[i] += h;
    lo[i] -= h;
    grad[i] = (value(StateVector::unpack(hi, at, with_psi)) -
               value(StateVector::unpack(lo, at, with_psi))) /
              (2.0 * h);
  }
  return grad;
}

inline double max_relative_error(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double scale = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
    worst = std::max(worst, std::abs(a[i] - b[i]) / scale);
  }
  return worst;
}

// Surrogate F1 of a bias-absorbed weight vector (threshold 0, margin 1),
// the quantity the F1 linear program minimizes the reciprocal of. Returns
// -infinity where tp_lb <= 0, outside the program's feasible image.
inline double surrogate_f1_raw(const std::vector<double>& w_ext,
                               const std::vector<LabeledExample>& examples) {
  double tp_lb = 0.0;
  double fp_ub = 0.0;
  double n_pos = 0.0;
  for (const LabeledExample& ex : examples) {
    double s = w_ext.back();  // bias coordinate
    for (std::size_t j = 0; j + 1 < w_ext.size(); ++j) {
      s += w_ext[j] * ex.features[j];
    }
    if (ex.label > 0) {
      n_pos += 1.0;
      tp_lb += std::min(1.0, s);
    } else {
      fp_ub += std::max(0.0, 1.0 + s);
    }
  }
  if (tp_lb <= 0.0) return -std::numeric_limits<double>::infinity();
  return 2.0 * tp_lb / (n_pos + tp_lb + fp_ub);
}

// Independent exact maximizer of surrogate_f1_raw on small instances.
//
// The surrogate is piecewise linear-fractional in the extended weight
// vector, so a maximizer lies at an intersection of dim_ext hinge
// boundaries w . x_i = +1 (positives) / w . x_j = -1 (negatives), or is
// approached along a ray from one. Enumerates every such intersection by
// solving the corresponding linear systems and evaluates each candidate
// together with scaled multiples that realize the saturation plateaus.
inline double vertex_max_surrogate_f1(
    const std::vector<LabeledExample>& examples, std::size_t dim_ext) {
  const std::size_t k = dim_ext;
  std::vector<std::vector<double>> planes;  // row = extended feature vector
  std::vector<double> rhs;
  for (const LabeledExample& ex : examples) {
    std::vector<double> row(ex.features);
    row.push_back(1.0);  // bias coordinate
    planes.push_back(std::move(row));
    rhs.push_back(ex.label > 0 ? 1.0 : -1.0);
  }
  const std::size_t n = planes.size();

  double best = -std::numeric_limits<double>::infinity();
  const auto consider = [&](const std::vector<double>& w) {
    for (double s : {0.5, 1.0, 2.0, 8.0, 64.0, 512.0, 16384.0}) {
      std::vector<double> scaled(w);
      for (double& v : scaled) v *= s;
      best = std::max(best, surrogate_f1_raw(scaled, examples));
    }
  };

  // All size-k subsets of the n hinge planes, via Gaussian elimination.
  std::vector<std::size_t> pick(k);
  const std::function<void(std::size_t, std::size_t)> recurse =
      [&](std::size_t at, std::size_t from) {
        if (at == k) {
          std::vector<std::vector<double>> a(k, std::vector<double>(k + 1));
          for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) {
              a[r][c] = planes[pick[r]][c];
            }
            a[r][k] = rhs[pick[r]];
          }
          for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < k; ++r) {
              if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
            }
            if (std::abs(a[piv][col]) < 1e-9) return;  // singular subset
            std::swap(a[col], a[piv]);
            for (std::size_t r = 0; r < k; ++r) {
              if (r == col) continue;
              const double f = a[r][col] / a[col][col];
              for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
            }
          }
          std::vector<double> w(k);
          for (std::size_t r = 0; r < k; ++r) w[r] = a[r][k] / a[r][r];
          consider(w);
          return;
        }
        for (std::size_t i = from; i + (k - at) <= n; ++i) {
          pick[at] = i;
          recurse(at + 1, i + 1);
        }
      };
  recurse(0, 0);
  return best;
}

}  // namespace rankopt::testing

#endif  // RANKOPT_TESTS_TESTUTIL_HPP_
