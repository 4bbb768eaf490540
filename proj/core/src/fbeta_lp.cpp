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

#include "rankopt/fbeta_lp.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankopt {

namespace {

std::vector<std::string> variable_names(const FBetaLP& lp) {
  std::vector<std::string> names;
  names.reserve(lp.num_vars());
  for (std::size_t i = 0; i < lp.n_pos; ++i) {
    names.push_back("tau" + std::to_string(i));
  }
  for (std::size_t i = 0; i < lp.n_neg; ++i) {
    names.push_back("phi" + std::to_string(i));
  }
  for (std::size_t j = 0; j <= lp.dim; ++j) {
    names.push_back("omega" + std::to_string(j));
  }
  names.push_back("eps");
  return names;
}

}  // namespace

FBetaLP build_lp(const LabeledDataset& data) {
  return build_lp(data.examples());
}

FBetaLP build_lp(const std::vector<LabeledExample>& examples) {
  FBetaLP out;
  for (const LabeledExample& ex : examples) {
    if (ex.label > 0) {
      ++out.n_pos;
    } else {
      ++out.n_neg;
    }
  }
  if (out.n_pos == 0) {
    throw std::invalid_argument("the F1 program needs at least one positive");
  }
  out.dim = examples.front().features.size();
  for (const LabeledExample& ex : examples) {
    if (ex.features.size() != out.dim) {
      throw std::invalid_argument("inconsistent feature dimensions");
    }
  }
  const std::size_t n_vars = out.num_vars();

  LinearProgram& lp = out.lp;
  lp.objective.assign(n_vars, 0.0);
  lp.nonneg.assign(n_vars, false);  // bounds are carried as explicit rows
  for (std::size_t i = 0; i < out.n_pos; ++i) {
    lp.objective[out.tau_offset() + i] = 1.0;
  }
  for (std::size_t i = 0; i < out.n_neg; ++i) {
    lp.objective[out.phi_offset() + i] = 1.0;
  }
  lp.objective[out.eps_index()] = static_cast<double>(out.n_pos);

  // omega . x with the bias absorbed as a trailing constant-1 coordinate.
  auto omega_dot = [&](LinearConstraint& row, const LabeledExample& ex,
                       double sign) {
    for (std::size_t j = 0; j < out.dim; ++j) {
      row.coeffs[out.omega_offset() + j] = sign * ex.features[j];
    }
    row.coeffs[out.omega_offset() + out.dim] = sign;
  };

  std::size_t pos_seen = 0;
  std::size_t neg_seen = 0;
  LinearConstraint sum_row;
  sum_row.coeffs.assign(n_vars, 0.0);
  sum_row.rel = Relation::kEq;
  sum_row.rhs = 1.0;
  for (const LabeledExample& ex : examples) {
    if (ex.label > 0) {
      const std::size_t tau = out.tau_offset() + pos_seen++;
      LinearConstraint le_eps;  // tau_i - eps <= 0
      le_eps.coeffs.assign(n_vars, 0.0);
      le_eps.coeffs[tau] = 1.0;
      le_eps.coeffs[out.eps_index()] = -1.0;
      le_eps.rel = Relation::kLe;
      lp.rows.push_back(std::move(le_eps));

      LinearConstraint le_score;  // tau_i - omega . x_i <= 0
      le_score.coeffs.assign(n_vars, 0.0);
      le_score.coeffs[tau] = 1.0;
      omega_dot(le_score, ex, -1.0);
      le_score.rel = Relation::kLe;
      lp.rows.push_back(std::move(le_score));

      sum_row.coeffs[tau] = 1.0;
    } else {
      const std::size_t phi = out.phi_offset() + neg_seen++;
      LinearConstraint ge_zero;  // phi_i >= 0
      ge_zero.coeffs.assign(n_vars, 0.0);
      ge_zero.coeffs[phi] = 1.0;
      ge_zero.rel = Relation::kGe;
      lp.rows.push_back(std::move(ge_zero));

      LinearConstraint ge_score;  // phi_i - eps - omega . x_i >= 0
      ge_score.coeffs.assign(n_vars, 0.0);
      ge_score.coeffs[phi] = 1.0;
      ge_score.coeffs[out.eps_index()] = -1.0;
      omega_dot(ge_score, ex, -1.0);
      ge_score.rel = Relation::kGe;
      lp.rows.push_back(std::move(ge_score));
    }
  }
  lp.rows.push_back(std::move(sum_row));

  LinearConstraint eps_nonneg;  // eps >= 0
  eps_nonneg.coeffs.assign(n_vars, 0.0);
  eps_nonneg.coeffs[out.eps_index()] = 1.0;
  eps_nonneg.rel = Relation::kGe;
  lp.rows.push_back(std::move(eps_nonneg));
  return out;
}

FBetaLPSolution solve_lp(const FBetaLP& lp) {
  const LpSolution raw = solve_lp(lp.lp);
  if (raw.status == SolveStatus::kInfeasible) {
    throw std::runtime_error("F1 linear program is infeasible");
  }
  if (raw.status == SolveStatus::kUnbounded) {
    throw std::runtime_error("F1 linear program is unbounded");
  }
  FBetaLPSolution solution;
  solution.taus.assign(raw.x.begin() + lp.tau_offset(),
                       raw.x.begin() + lp.tau_offset() + lp.n_pos);
  solution.phis.assign(raw.x.begin() + lp.phi_offset(),
                       raw.x.begin() + lp.phi_offset() + lp.n_neg);
  solution.omega.assign(raw.x.begin() + lp.omega_offset(),
                        raw.x.begin() + lp.omega_offset() + lp.dim + 1);
  solution.epsilon = raw.x[lp.eps_index()];
  solution.objective = raw.objective;
  return solution;
}

ThresholdedScorer recover_scorer(const FBetaLP& lp,
                                 const FBetaLPSolution& solution) {
  if (!(solution.epsilon > 0.0)) {
    throw std::domain_error(
        "degenerate optimum: eps = 0, scorer recovery undefined");
  }
  ThresholdedScorer scorer;
  scorer.weights.resize(lp.dim);
  for (std::size_t j = 0; j < lp.dim; ++j) {
    scorer.weights[j] = solution.omega[j] / solution.epsilon;
  }
  scorer.bias = solution.omega[lp.dim] / solution.epsilon;
  scorer.thresholds = {0.0};
  return scorer;
}

std::string to_text(const FBetaLP& lp) {
  const std::vector<std::string> names = variable_names(lp);
  std::ostringstream out;
  auto write_terms = [&](const std::vector<double>& coeffs) {
    bool first = true;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0.0) continue;
      if (!first) out << " + ";
      out << coeffs[j] << " " << names[j];
      first = false;
    }
    if (first) out << "0";
  };
  out << "minimize: ";
  write_terms(lp.lp.objective);
  out << "\nsubject to:\n";
  for (const LinearConstraint& row : lp.lp.rows) {
    out << "  ";
    write_terms(row.coeffs);
    switch (row.rel) {
      case Relation::kLe:
        out << " <= ";
        break;
      case Relation::kGe:
        out << " >= ";
        break;
      case Relation::kEq:
        out << " = ";
        break;
    }
    out << row.rhs << "\n";
  }
  return out.str();
}

}  // namespace rankopt
