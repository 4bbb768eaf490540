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

#include "rankopt/simplex.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rankopt {

namespace {

constexpr double kPivotTol = 1e-7;  // entries below this never pivot
constexpr double kFeasTol = 1e-7;
constexpr std::int64_t kMaxPivots = 200000;
constexpr std::int64_t kStallLimit = 50;    // pivots without progress
constexpr std::int64_t kRefreshEvery = 64;  // re-canonicalization cadence

// The standard-form program min c.x, A x = b, x >= 0 kept pristine so the
// working tableau can be rebuilt from the current basis at any time.
struct StandardForm {
  std::vector<std::vector<double>> a;
  std::vector<double> b;
};

// Canonical full-tableau state: basis columns form an identity, b >= 0.
struct Tableau {
  std::vector<std::vector<double>> a;  // m x n
  std::vector<double> b;               // m
  std::vector<std::size_t> basis;      // m, column basic in each row

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return a.empty() ? 0 : a[0].size(); }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = a[pr][pc];
    for (double& v : a[pr]) v /= p;
    b[pr] /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == pr) continue;
      const double f = a[i][pc];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols(); ++j) {
        a[i][j] -= f * a[pr][j];
      }
      a[i][pc] = 0.0;
      b[i] -= f * b[pr];
      if (b[i] < 0.0 && b[i] > -1e-9) b[i] = 0.0;
    }
    basis[pr] = pc;
  }

  double objective(const std::vector<double>& cost) const {
    double v = 0.0;
    for (std::size_t i = 0; i < rows(); ++i) v += cost[basis[i]] * b[i];
    return v;
  }
};

// Rebuilds the canonical tableau for the current basis from the pristine
// standard form by Gauss-Jordan with partial pivoting on the basis block,
// discarding the roundoff accumulated by successive pivots. Throws if the
// basis matrix is numerically singular.
void recanonicalize(Tableau& t, const StandardForm& sf) {
  const std::size_t m = t.rows();
  const std::size_t n = t.cols();
  // Augmented system [B | A | b] with B the basis columns in basis order.
  std::vector<std::vector<double>> aug(m, std::vector<double>(m + n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      aug[i][k] = sf.a[i][t.basis[k]];
    }
    for (std::size_t j = 0; j < n; ++j) {
      aug[i][m + j] = sf.a[i][j];
    }
    aug[i][m + n] = sf.b[i];
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r) {
      if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
    }
    if (std::abs(aug[piv][col]) < 1e-12) {
      throw std::runtime_error("simplex basis became singular");
    }
    std::swap(aug[col], aug[piv]);
    const double d = aug[col][col];
    for (std::size_t j = col; j < m + n + 1; ++j) aug[col][j] /= d;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = aug[r][col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j < m + n + 1; ++j) {
        aug[r][j] -= f * aug[col][j];
      }
    }
  }
  // Row k of the reduced augmented block is the tableau row in which
  // basis[k] is the unit column.
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      t.a[k][j] = aug[k][m + j];
    }
    t.a[k][t.basis[k]] = 1.0;
    t.b[k] = std::max(aug[k][m + n], 0.0);
  }
}

enum class PivotResult { kOptimal, kUnbounded };

// Minimizes cost over the tableau. Pricing starts with Dantzig's rule
// (most negative reduced cost: fewest pivots, least error buildup) and
// switches permanently to Bland's anti-cycling rule once the objective
// stalls; cycling shows up as a stall, so termination is guaranteed. The
// tableau is rebuilt from the pristine standard form periodically and any
// terminal verdict is re-verified against a freshly rebuilt tableau.
// Columns with `allowed` false never enter (locks out artificials).
PivotResult run_simplex(Tableau& t, const StandardForm& sf,
                        const std::vector<double>& cost,
                        const std::vector<bool>& allowed) {
  double cost_scale = 1.0;
  for (double c : cost) cost_scale = std::max(cost_scale, std::abs(c));
  const double enter_tol = 1e-9 * cost_scale * static_cast<double>(t.rows());

  bool bland = false;
  std::int64_t stalled = 0;
  std::int64_t since_refresh = 0;
  bool fresh = false;
  double last_objective = t.objective(cost);
  for (std::int64_t iter = 0; iter < kMaxPivots; ++iter) {
    if (since_refresh >= kRefreshEvery) {
      recanonicalize(t, sf);
      since_refresh = 0;
      fresh = true;
    }
    // Reduced costs from the canonical form: r_j = c_j - sum_i c_B(i) a_ij.
    std::size_t entering = t.cols();
    double most_negative = -enter_tol;
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (!allowed[j]) continue;
      double r = cost[j];
      for (std::size_t i = 0; i < t.rows(); ++i) {
        const double cb = cost[t.basis[i]];
        if (cb != 0.0) r -= cb * t.a[i][j];
      }
      if (r < most_negative) {
        entering = j;
        if (bland) break;  // lowest index wins
        most_negative = r;
      }
    }
    if (entering == t.cols()) {
      if (fresh) return PivotResult::kOptimal;
      recanonicalize(t, sf);
      since_refresh = 0;
      fresh = true;
      continue;  // re-verify on the rebuilt tableau
    }

    std::size_t leaving = t.rows();
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.a[i][entering] > kPivotTol) {
        const double ratio = t.b[i] / t.a[i][entering];
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 &&
             (leaving == t.rows() || t.basis[i] < t.basis[leaving]))) {
          best_ratio = std::min(best_ratio, ratio);
          leaving = i;
        }
      }
    }
    if (leaving == t.rows()) {
      if (fresh) return PivotResult::kUnbounded;
      recanonicalize(t, sf);
      since_refresh = 0;
      fresh = true;
      continue;
    }
    t.pivot(leaving, entering);
    fresh = false;
    ++since_refresh;

    const double objective = t.objective(cost);
    if (objective < last_objective - 1e-12 * cost_scale) {
      stalled = 0;
    } else if (!bland && ++stalled >= kStallLimit) {
      bland = true;
    }
    last_objective = objective;
  }
  throw std::runtime_error("simplex exceeded the pivot limit");
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n_orig = lp.objective.size();
  if (lp.nonneg.size() != n_orig) {
    throw std::invalid_argument("nonneg mask size != variable count");
  }
  for (const LinearConstraint& row : lp.rows) {
    if (row.coeffs.size() != n_orig) {
      throw std::invalid_argument("constraint row size != variable count");
    }
  }

  // With no constraints the problem separates per variable: any free
  // variable with nonzero cost or nonnegative variable with negative cost
  // is an unbounded direction; otherwise the origin is optimal.
  if (lp.rows.empty()) {
    for (std::size_t j = 0; j < n_orig; ++j) {
      if ((lp.nonneg[j] && lp.objective[j] < 0.0) ||
          (!lp.nonneg[j] && lp.objective[j] != 0.0)) {
        return {SolveStatus::kUnbounded, {}, 0.0};
      }
    }
    return {SolveStatus::kOptimal, std::vector<double>(n_orig, 0.0), 0.0};
  }

  // Split free variables into differences of nonnegatives.
  std::vector<std::size_t> col_plus(n_orig), col_minus(n_orig, SIZE_MAX);
  std::size_t n_std = 0;
  for (std::size_t j = 0; j < n_orig; ++j) {
    col_plus[j] = n_std++;
    if (!lp.nonneg[j]) col_minus[j] = n_std++;
  }
  const std::size_t m = lp.rows.size();
  const std::size_t n_slack = [&] {
    std::size_t c = 0;
    for (const auto& row : lp.rows) c += row.rel != Relation::kEq ? 1 : 0;
    return c;
  }();
  const std::size_t n_total = n_std + n_slack + m;  // + one artificial per row

  StandardForm sf;
  sf.a.assign(m, std::vector<double>(n_total, 0.0));
  sf.b.assign(m, 0.0);
  Tableau t;
  t.basis.assign(m, 0);

  std::size_t slack_at = n_std;
  for (std::size_t i = 0; i < m; ++i) {
    const LinearConstraint& row = lp.rows[i];
    const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n_orig; ++j) {
      const double c = sign * row.coeffs[j];
      sf.a[i][col_plus[j]] = c;
      if (col_minus[j] != SIZE_MAX) sf.a[i][col_minus[j]] = -c;
    }
    if (row.rel != Relation::kEq) {
      const double slack = row.rel == Relation::kLe ? 1.0 : -1.0;
      sf.a[i][slack_at++] = sign * slack;
    }
    sf.b[i] = sign * row.rhs;
    sf.a[i][n_std + n_slack + i] = 1.0;  // artificial
    t.basis[i] = n_std + n_slack + i;
  }
  t.a = sf.a;
  t.b = sf.b;

  // Phase 1: drive the artificials to zero.
  std::vector<double> phase1_cost(n_total, 0.0);
  for (std::size_t i = 0; i < m; ++i) phase1_cost[n_std + n_slack + i] = 1.0;
  std::vector<bool> allowed(n_total, true);
  if (run_simplex(t, sf, phase1_cost, allowed) == PivotResult::kUnbounded) {
    throw std::logic_error("phase 1 cannot be unbounded");
  }
  if (t.objective(phase1_cost) > kFeasTol) {
    return {SolveStatus::kInfeasible, {}, 0.0};
  }

  // Pivot any artificial still basic (at zero) out of the basis where a
  // structural column is available; rows with none are redundant but kept
  // harmlessly since their artificial stays at zero and is locked out.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] >= n_std + n_slack) {
      for (std::size_t j = 0; j < n_std + n_slack; ++j) {
        if (std::abs(t.a[i][j]) > kPivotTol) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }
  for (std::size_t j = n_std + n_slack; j < n_total; ++j) allowed[j] = false;

  // Phase 2 with the original costs.
  std::vector<double> cost(n_total, 0.0);
  for (std::size_t j = 0; j < n_orig; ++j) {
    cost[col_plus[j]] = lp.objective[j];
    if (col_minus[j] != SIZE_MAX) cost[col_minus[j]] = -lp.objective[j];
  }
  if (run_simplex(t, sf, cost, allowed) == PivotResult::kUnbounded) {
    return {SolveStatus::kUnbounded, {}, 0.0};
  }

  std::vector<double> std_values(n_total, 0.0);
  for (std::size_t i = 0; i < m; ++i) std_values[t.basis[i]] = t.b[i];
  LpSolution solution;
  solution.status = SolveStatus::kOptimal;
  solution.x.resize(n_orig);
  for (std::size_t j = 0; j < n_orig; ++j) {
    solution.x[j] = std_values[col_plus[j]];
    if (col_minus[j] != SIZE_MAX) solution.x[j] -= std_values[col_minus[j]];
    solution.objective += lp.objective[j] * solution.x[j];
  }
  return solution;
}

}  // namespace rankopt
