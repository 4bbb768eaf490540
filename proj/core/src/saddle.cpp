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

#include "rankopt/saddle.hpp"

#include <stdexcept>
#include <string>

namespace rankopt {

namespace {

// Rows of a batch resolved against the dataset, with raw scores computed
// once. An empty index span selects the whole dataset.
struct BatchRows {
  std::vector<const LabeledExample*> rows;
  std::vector<double> raw;
};

BatchRows collect_rows(const ThresholdedScorer& scorer,
                       const LabeledDataset& data,
                       std::span<const std::size_t> indices) {
  if (scorer.dim() != data.dim()) {
    throw std::invalid_argument("scorer dimension " +
                                std::to_string(scorer.dim()) +
                                " != dataset dimension " +
                                std::to_string(data.dim()));
  }
  BatchRows out;
  const std::size_t n = indices.empty() ? data.size() : indices.size();
  out.rows.reserve(n);
  out.raw.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const LabeledExample& ex = data[indices.empty() ? i : indices[i]];
    out.rows.push_back(&ex);
    out.raw.push_back(score(scorer, ex.features));
  }
  return out;
}

// Scaled hinge sums and their subgradients for one class at one threshold.
struct ClassTerms {
  double loss = 0.0;
  std::vector<double> grad_w;
  double grad_b = 0.0;  // d loss / d bias; d loss / d threshold is -grad_b
};

struct AnchorTerms {
  ClassTerms pos;
  ClassTerms neg;
};

AnchorTerms anchor_terms(const BatchRows& rows, double threshold,
                         const BatchSample& batch, std::size_t dim) {
  AnchorTerms t;
  t.pos.grad_w.assign(dim, 0.0);
  t.neg.grad_w.assign(dim, 0.0);
  for (std::size_t i = 0; i < rows.rows.size(); ++i) {
    const LabeledExample& ex = *rows.rows[i];
    const double scale = ex.label > 0 ? batch.pos_scale : batch.neg_scale;
    ClassTerms& ct = ex.label > 0 ? t.pos : t.neg;
    ct.loss += scale * hinge_loss(rows.raw[i], threshold, ex.label);
    const double g = hinge_subgradient(rows.raw[i], threshold, ex.label);
    if (g != 0.0) {
      const double sg = scale * g;
      for (std::size_t j = 0; j < dim; ++j) {
        ct.grad_w[j] += sg * ex.features[j];
      }
      ct.grad_b += sg;
    }
  }
  return t;
}

SaddleEvaluation make_eval(std::size_t dim, std::size_t num_thresholds,
                           std::size_t num_duals) {
  SaddleEvaluation e;
  e.grad_weights.assign(dim, 0.0);
  e.grad_thresholds.assign(num_thresholds, 0.0);
  e.grad_duals.assign(num_duals, 0.0);
  return e;
}

// Adds coef * class terms into the scorer gradients for anchor t.
void add_class(SaddleEvaluation& e, const ClassTerms& ct, double coef,
               std::size_t anchor) {
  for (std::size_t j = 0; j < e.grad_weights.size(); ++j) {
    e.grad_weights[j] += coef * ct.grad_w[j];
  }
  e.grad_bias += coef * ct.grad_b;
  e.grad_thresholds[anchor] -= coef * ct.grad_b;
}

void check_single_threshold(const SaddleState& state, const char* what) {
  if (state.scorer.num_thresholds() != 1) {
    throw std::invalid_argument(std::string(what) +
                                " uses a single threshold (K = 1)");
  }
}

}  // namespace

SaddleState make_initial_state(const ObjectiveSpec& spec,
                               const LabeledDataset& data) {
  SaddleState state;
  state.scorer = zero_scorer(data.dim(), spec.num_thresholds());
  if (spec.kind == ObjectiveKind::kFBeta) {
    // The equality multiplier's natural scale is O(1/n_pos); initializing
    // at the zero-scorer stationary value of dL/dpsi keeps the first dual
    // steps commensurate with the psi dynamics.
    const double beta2 = spec.target * spec.target;
    const double n_pos = static_cast<double>(data.n_pos());
    state.duals.assign(1, (static_cast<double>(data.n_neg()) +
                           beta2 * n_pos) /
                              (n_pos * n_pos));
    state.psi = n_pos / 2.0;
  } else {
    state.duals.assign(spec.num_duals(), 1.0);
  }
  return state;
}

BatchSample full_batch(const LabeledDataset&) { return BatchSample{}; }

BatchSample make_batch(const LabeledDataset& data,
                       std::span<const std::size_t> indices) {
  if (indices.empty()) {
    return BatchSample{};
  }
  std::size_t b_pos = 0;
  for (std::size_t i : indices) {
    if (data[i].label > 0) ++b_pos;
  }
  const std::size_t b_neg = indices.size() - b_pos;
  BatchSample batch;
  batch.indices = indices;
  batch.has_pos = b_pos > 0;
  batch.has_neg = b_neg > 0;
  batch.pos_scale = batch.has_pos ? static_cast<double>(data.n_pos()) /
                                        static_cast<double>(b_pos)
                                  : 0.0;
  batch.neg_scale = batch.has_neg ? static_cast<double>(data.n_neg()) /
                                        static_cast<double>(b_neg)
                                  : 0.0;
  return batch;
}

SaddleEvaluation rap_lagrangian(const SaddleState& state, double alpha,
                                const LabeledDataset& data) {
  return rap_lagrangian(state, alpha, data, full_batch(data));
}

SaddleEvaluation rap_lagrangian(const SaddleState& state, double alpha,
                                const LabeledDataset& data,
                                const BatchSample& batch) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("R@P alpha must lie in (0, 1)");
  }
  check_single_threshold(state, "rap_lagrangian");
  const double lambda = state.duals.at(0);
  const double ratio = alpha / (1.0 - alpha);
  const double n_pos = static_cast<double>(data.n_pos());

  const BatchRows rows = collect_rows(state.scorer, data, batch.indices);
  const AnchorTerms t =
      anchor_terms(rows, state.scorer.thresholds[0], batch, data.dim());

  SaddleEvaluation e = make_eval(data.dim(), 1, 1);
  e.value = (1.0 + lambda) * t.pos.loss + lambda * ratio * t.neg.loss -
            lambda * n_pos;
  add_class(e, t.pos, 1.0 + lambda, 0);
  add_class(e, t.neg, lambda * ratio, 0);
  if (batch.has_pos && batch.has_neg) {
    e.grad_duals[0] = t.pos.loss + ratio * t.neg.loss - n_pos;
  }
  return e;
}

double rap_constraint_residual(const SaddleState& state, double alpha,
                               const LabeledDataset& data) {
  check_single_threshold(state, "rap_constraint_residual");
  const BoundValues b = compute_bounds(state.scorer, 0, data);
  return alpha * b.loss_neg + (1.0 - alpha) * b.loss_pos -
         (1.0 - alpha) * static_cast<double>(data.n_pos());
}

double c_weight(double alpha, double lambda) {
  if (lambda == 0.0) {
    throw std::invalid_argument("c_weight is undefined at lambda = 0");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("c_weight needs alpha in (0, 1)");
  }
  return (1.0 + lambda) * (1.0 - alpha) / (lambda * alpha);
}

SaddleEvaluation par_lagrangian(const SaddleState& state, double beta_recall,
                                const LabeledDataset& data) {
  return par_lagrangian(state, beta_recall, data, full_batch(data));
}

SaddleEvaluation par_lagrangian(const SaddleState& state, double beta_recall,
                                const LabeledDataset& data,
                                const BatchSample& batch) {
  if (!(beta_recall > 0.0 && beta_recall <= 1.0)) {
    throw std::invalid_argument("P@R target recall must lie in (0, 1]");
  }
  check_single_threshold(state, "par_lagrangian");
  const double lambda = state.duals.at(0);
  const double n_pos = static_cast<double>(data.n_pos());

  const BatchRows rows = collect_rows(state.scorer, data, batch.indices);
  const AnchorTerms t =
      anchor_terms(rows, state.scorer.thresholds[0], batch, data.dim());

  SaddleEvaluation e = make_eval(data.dim(), 1, 1);
  e.value = t.neg.loss + lambda * (beta_recall + t.pos.loss / n_pos - 1.0);
  add_class(e, t.neg, 1.0, 0);
  add_class(e, t.pos, lambda / n_pos, 0);
  if (batch.has_pos) {
    e.grad_duals[0] = beta_recall + t.pos.loss / n_pos - 1.0;
  }
  return e;
}

namespace {

void check_anchor_state(const SaddleState& state, const AnchorWeights& anchors,
                        const char* what) {
  const std::size_t k = anchors.alphas.size();
  if (k == 0) {
    throw std::invalid_argument(std::string(what) + ": empty anchor set");
  }
  if (state.scorer.num_thresholds() != k || state.duals.size() != k) {
    throw std::invalid_argument(
        std::string(what) +
        ": state must carry one threshold and one dual per anchor");
  }
}

}  // namespace

SaddleEvaluation aucpr_lagrangian(const SaddleState& state,
                                  const AnchorWeights& anchors,
                                  const LabeledDataset& data) {
  return aucpr_lagrangian(state, anchors, data, full_batch(data));
}

SaddleEvaluation aucpr_lagrangian(const SaddleState& state,
                                  const AnchorWeights& anchors,
                                  const LabeledDataset& data,
                                  const BatchSample& batch) {
  check_anchor_state(state, anchors, "aucpr_lagrangian");
  const std::size_t k = anchors.alphas.size();
  const double n_pos = static_cast<double>(data.n_pos());
  const BatchRows rows = collect_rows(state.scorer, data, batch.indices);

  SaddleEvaluation e = make_eval(data.dim(), k, k);
  for (std::size_t t = 0; t < k; ++t) {
    const double alpha = anchors.alphas[t];
    if (!(alpha < 1.0)) {
      throw std::invalid_argument("AUCPR anchor >= 1 is singular");
    }
    const double delta = anchors.deltas[t];
    const double lambda = state.duals[t];
    const double ratio = alpha / (1.0 - alpha);
    const AnchorTerms terms =
        anchor_terms(rows, state.scorer.thresholds[t], batch, data.dim());
    e.value += delta * ((1.0 + lambda) * terms.pos.loss +
                        lambda * ratio * terms.neg.loss - lambda * n_pos);
    add_class(e, terms.pos, delta * (1.0 + lambda), t);
    add_class(e, terms.neg, delta * lambda * ratio, t);
    if (batch.has_pos && batch.has_neg) {
      e.grad_duals[t] =
          delta * (terms.pos.loss + ratio * terms.neg.loss - n_pos);
    }
  }
  return e;
}

SaddleEvaluation aucroc_lagrangian(const SaddleState& state,
                                   const AnchorWeights& fpr_anchors,
                                   const LabeledDataset& data) {
  return aucroc_lagrangian(state, fpr_anchors, data, full_batch(data));
}

SaddleEvaluation aucroc_lagrangian(const SaddleState& state,
                                   const AnchorWeights& fpr_anchors,
                                   const LabeledDataset& data,
                                   const BatchSample& batch) {
  check_anchor_state(state, fpr_anchors, "aucroc_lagrangian");
  const std::size_t k = fpr_anchors.alphas.size();
  const double n_neg = static_cast<double>(data.n_neg());
  const BatchRows rows = collect_rows(state.scorer, data, batch.indices);

  SaddleEvaluation e = make_eval(data.dim(), k, k);
  for (std::size_t t = 0; t < k; ++t) {
    const double phi = fpr_anchors.alphas[t];
    if (!(phi < 1.0)) {
      throw std::invalid_argument("AUCROC anchor must be < 1");
    }
    const double delta = fpr_anchors.deltas[t];
    const double lambda = state.duals[t];
    const AnchorTerms terms =
        anchor_terms(rows, state.scorer.thresholds[t], batch, data.dim());
    e.value +=
        delta * (terms.pos.loss + lambda * (terms.neg.loss - phi * n_neg));
    add_class(e, terms.pos, delta, t);
    add_class(e, terms.neg, delta * lambda, t);
    if (batch.has_neg) {
      e.grad_duals[t] = delta * (terms.neg.loss - phi * n_neg);
    }
  }
  return e;
}

double fbeta_surrogate(const BoundValues& b, std::size_t n_pos, double beta) {
  const double beta2 = beta * beta;
  const double denom =
      beta2 * static_cast<double>(n_pos) + b.tp_lb + b.fp_ub;
  if (!(denom > 0.0)) {
    throw std::domain_error("F-beta surrogate denominator is not positive");
  }
  return (1.0 + beta2) * b.tp_lb / denom;
}

SaddleEvaluation fbeta_psi_lagrangian(const ThresholdedScorer& scorer,
                                      double psi, double lambda,
                                      const LabeledDataset& data,
                                      double beta) {
  return fbeta_psi_lagrangian(scorer, psi, lambda, data, beta,
                              full_batch(data));
}

SaddleEvaluation fbeta_psi_lagrangian(const ThresholdedScorer& scorer,
                                      double psi, double lambda,
                                      const LabeledDataset& data, double beta,
                                      const BatchSample& batch) {
  if (!(psi > 0.0)) {
    throw std::invalid_argument("psi must be positive");
  }
  if (scorer.num_thresholds() != 1) {
    throw std::invalid_argument("F-beta uses a single threshold (K = 1)");
  }
  const double beta2 = beta * beta;
  const double n_pos = static_cast<double>(data.n_pos());
  const BatchRows rows = collect_rows(scorer, data, batch.indices);
  const AnchorTerms t =
      anchor_terms(rows, scorer.thresholds[0], batch, data.dim());

  SaddleEvaluation e = make_eval(data.dim(), 1, 1);
  const double inv_psi = 1.0 / psi;
  e.value = inv_psi * t.neg.loss + lambda * t.pos.loss +
            (beta2 * inv_psi - lambda) * n_pos + psi * lambda;
  add_class(e, t.neg, inv_psi, 0);
  add_class(e, t.pos, lambda, 0);
  if (batch.has_neg) {
    e.grad_psi =
        -inv_psi * inv_psi * (t.neg.loss + beta2 * n_pos) + lambda;
  }
  if (batch.has_pos) {
    e.grad_duals[0] = t.pos.loss - n_pos + psi;
  }
  return e;
}

SaddleEvaluation hinge_objective(const SaddleState& state,
                                 const LabeledDataset& data) {
  return hinge_objective(state, data, full_batch(data));
}

SaddleEvaluation hinge_objective(const SaddleState& state,
                                 const LabeledDataset& data,
                                 const BatchSample& batch) {
  check_single_threshold(state, "hinge_objective");
  const BatchRows rows = collect_rows(state.scorer, data, batch.indices);
  const AnchorTerms t =
      anchor_terms(rows, state.scorer.thresholds[0], batch, data.dim());
  SaddleEvaluation e = make_eval(data.dim(), 1, 0);
  e.value = t.pos.loss + t.neg.loss;
  add_class(e, t.pos, 1.0, 0);
  add_class(e, t.neg, 1.0, 0);
  return e;
}

SaddleEvaluation evaluate_lagrangian(const SaddleState& state,
                                     const ObjectiveSpec& spec,
                                     const LabeledDataset& data) {
  return evaluate_lagrangian(state, spec, data, full_batch(data));
}

SaddleEvaluation evaluate_lagrangian(const SaddleState& state,
                                     const ObjectiveSpec& spec,
                                     const LabeledDataset& data,
                                     const BatchSample& batch) {
  switch (spec.kind) {
    case ObjectiveKind::kHinge:
      return hinge_objective(state, data, batch);
    case ObjectiveKind::kRecallAtPrecision:
      return rap_lagrangian(state, spec.target, data, batch);
    case ObjectiveKind::kPrecisionAtRecall:
      return par_lagrangian(state, spec.target, data, batch);
    case ObjectiveKind::kAucPr:
      return aucpr_lagrangian(state, anchor_weights(spec.anchors), data,
                              batch);
    case ObjectiveKind::kAucRoc:
      return aucroc_lagrangian(state, anchor_weights(spec.anchors), data,
                               batch);
    case ObjectiveKind::kFBeta:
      return fbeta_psi_lagrangian(state.scorer, state.psi, state.duals.at(0),
                                  data, spec.target, batch);
  }
  throw std::logic_error("unreachable objective kind");
}

}  // namespace rankopt
