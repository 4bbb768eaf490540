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

// Command-line surface: generate | train | evaluate | compare.
// Exit codes: 0 ok, 1 runtime failure, 2 bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankopt/dataset.hpp"
#include "rankopt/fbeta_lp.hpp"
#include "rankopt/io.hpp"
#include "rankopt/metrics.hpp"
#include "rankopt/objective.hpp"
#include "rankopt/optimizer.hpp"
#include "rankopt/random.hpp"
#include "rankopt/synthetic.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitBadInput = 2;

std::string stem_of(const std::string& path) {
  const std::size_t dot = path.rfind('.');
  const std::size_t slash = path.rfind('/');
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash)) {
    return path;
  }
  return path.substr(0, dot);
}

struct TrainCli {
  std::string data_path;
  std::string config_path;
  std::string val_path;
  std::string out_path;
  std::string trace_path;
  std::string report_path;
  std::string method = "sgd";
  std::string dump_lp_path;
  rankopt::RunConfig cfg;
};

// Deterministic 80/20 split by seeded shuffle.
std::pair<rankopt::LabeledDataset, rankopt::LabeledDataset> split_dataset(
    const rankopt::LabeledDataset& data, std::uint64_t seed) {
  std::vector<std::size_t> perm(data.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  rankopt::Rng rng(seed);
  rng.shuffle(perm);
  const std::size_t n_train = (data.size() * 8) / 10;
  if (n_train < 2 || n_train == data.size()) {
    throw std::invalid_argument("dataset too small for an 80/20 split");
  }
  std::vector<rankopt::LabeledExample> train_ex;
  std::vector<rankopt::LabeledExample> val_ex;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    (i < n_train ? train_ex : val_ex).push_back(data[perm[i]]);
  }
  return {rankopt::LabeledDataset(std::move(train_ex)),
          rankopt::LabeledDataset(std::move(val_ex))};
}

int run_train(const TrainCli& args) {
  const rankopt::RunConfig& cfg = args.cfg;
  const rankopt::LabeledDataset full =
      rankopt::load_csv_dataset(args.data_path);

  std::optional<rankopt::LabeledDataset> train_set;
  std::optional<rankopt::LabeledDataset> val_set;
  if (!args.val_path.empty()) {
    train_set.emplace(full);
    val_set.emplace(rankopt::load_csv_dataset(args.val_path));
  } else {
    auto [tr, va] = split_dataset(full, cfg.train.seed);
    train_set.emplace(std::move(tr));
    val_set.emplace(std::move(va));
  }

  const rankopt::ObjectiveSpec objective =
      rankopt::objective_from_config(cfg, *train_set);
  const std::string trace_path = args.trace_path.empty()
                                     ? stem_of(args.out_path) + ".trace.jsonl"
                                     : args.trace_path;
  const std::string report_path =
      args.report_path.empty() ? stem_of(args.out_path) + ".report.json"
                               : args.report_path;
  const double metric_beta =
      objective.kind == rankopt::ObjectiveKind::kFBeta ? objective.target
                                                       : 1.0;

  if (args.method == "lp") {
    if (objective.kind != rankopt::ObjectiveKind::kFBeta ||
        objective.target != 1.0) {
      throw std::invalid_argument(
          "--method lp solves the F1 program only; use --objective fbeta "
          "with beta 1");
    }
    const rankopt::FBetaLP lp = rankopt::build_lp(*train_set);
    if (!args.dump_lp_path.empty()) {
      std::ofstream dump(args.dump_lp_path);
      if (!dump) throw std::runtime_error("cannot open " + args.dump_lp_path);
      dump << rankopt::to_text(lp);
    }
    const rankopt::FBetaLPSolution solution = rankopt::solve_lp(lp);
    const rankopt::ThresholdedScorer scorer =
        rankopt::recover_scorer(lp, solution);
    rankopt::save_model_json(scorer, args.out_path);
    rankopt::save_trace_jsonl(rankopt::TrainTrace{}, trace_path);
    rankopt::save_metrics_report(
        rankopt::evaluate_scorer(scorer, *val_set, metric_beta), report_path);
    return kExitOk;
  }

  const rankopt::TrainResult result =
      rankopt::train(*train_set, objective, cfg.train, &*val_set);
  rankopt::save_model_json(result.scorer, args.out_path);
  rankopt::save_trace_jsonl(result.trace, trace_path);
  rankopt::save_metrics_report(
      rankopt::evaluate_scorer(result.scorer, *val_set, metric_beta),
      report_path);
  return kExitOk;
}

json metrics_json(const rankopt::MetricsReport& r) {
  return json{{"tp", r.counts.tp},
              {"fp", r.counts.fp},
              {"fn", r.counts.fn},
              {"tn", r.counts.tn},
              {"precision", r.precision},
              {"recall", r.recall},
              {"f_beta", r.f_beta},
              {"accuracy", r.accuracy},
              {"average_precision", r.average_precision},
              {"auc_roc", r.auc_roc}};
}

int run_evaluate(const std::string& model_path, const std::string& data_path,
                 const std::string& out_path, double fbeta,
                 std::optional<double> alpha, std::optional<double> beta,
                 const std::string& pr_csv, const std::string& roc_csv) {
  const rankopt::ThresholdedScorer scorer =
      rankopt::load_model_json(model_path);
  const rankopt::LabeledDataset data = rankopt::load_csv_dataset(data_path);
  if (scorer.dim() != data.dim()) {
    throw std::invalid_argument(
        "model dimension " + std::to_string(scorer.dim()) +
        " != dataset dimension " + std::to_string(data.dim()));
  }
  const rankopt::MetricsReport report =
      rankopt::evaluate_scorer(scorer, data, fbeta);
  json out = json::parse(rankopt::metrics_report_to_json(report));
  const rankopt::ScoredSet scored =
      rankopt::ScoredSet::from_scorer(scorer, data);
  if (alpha) {
    const auto rap = rankopt::exact_recall_at_precision(scored, *alpha);
    out["recall_at_precision"] = {{"alpha", *alpha},
                                  {"recall", rap.recall},
                                  {"threshold", rap.threshold}};
  }
  if (beta) {
    const auto par = rankopt::exact_precision_at_recall(scored, *beta);
    out["precision_at_recall"] = {{"target_recall", *beta},
                                  {"precision", par.precision},
                                  {"threshold", par.threshold}};
  }
  if (!pr_csv.empty()) {
    rankopt::save_pr_curve_csv(report.pr_curve, pr_csv);
  }
  if (!roc_csv.empty()) {
    rankopt::save_roc_curve_csv(rankopt::roc_curve(scored), roc_csv);
  }
  if (out_path.empty()) {
    std::cout << out.dump(2) << std::endl;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path);
    f << out.dump(2) << '\n';
  }
  return kExitOk;
}

int run_compare(const std::vector<std::string>& model_paths,
                const std::string& data_path, const std::string& out_path,
                double fbeta) {
  const rankopt::LabeledDataset data = rankopt::load_csv_dataset(data_path);
  std::vector<rankopt::MetricsReport> reports;
  for (const std::string& path : model_paths) {
    const rankopt::ThresholdedScorer scorer = rankopt::load_model_json(path);
    if (scorer.dim() != data.dim()) {
      throw std::invalid_argument("model " + path + " has dimension " +
                                  std::to_string(scorer.dim()) +
                                  " but the dataset has " +
                                  std::to_string(data.dim()));
    }
    reports.push_back(rankopt::evaluate_scorer(scorer, data, fbeta));
  }
  const auto pick = [](const rankopt::MetricsReport& r) {
    return std::vector<std::pair<std::string, double>>{
        {"precision", r.precision},
        {"recall", r.recall},
        {"f_beta", r.f_beta},
        {"accuracy", r.accuracy},
        {"average_precision", r.average_precision},
        {"auc_roc", r.auc_roc}};
  };
  json out;
  out["data"] = data_path;
  out["baseline"] = {{"model", model_paths[0]},
                     {"metrics", metrics_json(reports[0])}};
  json rows = json::array();
  const auto base = pick(reports[0]);
  for (std::size_t i = 1; i < reports.size(); ++i) {
    json gains;
    const auto cur = pick(reports[i]);
    for (std::size_t m = 0; m < cur.size(); ++m) {
      // Absolute gain over the baseline, in percentage points.
      gains[cur[m].first] = 100.0 * (cur[m].second - base[m].second);
    }
    rows.push_back({{"model", model_paths[i]},
                    {"metrics", metrics_json(reports[i])},
                    {"gains_pp", gains}});
  }
  out["comparisons"] = rows;
  if (out_path.empty()) {
    std::cout << out.dump(2) << std::endl;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path);
    f << out.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Training and evaluation of linear scorers under "
               "precision/recall-family objectives"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a synthetic dataset CSV");
  std::string gen_kind = "two_gaussians_fig1";
  rankopt::SyntheticSpec spec;
  std::string gen_out;
  gen->add_option("--generator", gen_kind,
                  "two_gaussians_fig1 | separable | uniform_noise");
  gen->add_option("--n-pos", spec.n_pos, "positive examples");
  gen->add_option("--n-neg", spec.n_neg, "negative examples");
  gen->add_option("--dim", spec.dimension, "feature dimension (>= 2)");
  gen->add_option("--overlap", spec.overlap, "class overlap scale");
  gen->add_option("--seed", spec.seed, "RNG seed");
  gen->add_option("--out", gen_out, "output CSV path")->required();

  // train
  auto* tr = app.add_subcommand("train", "Train a model and write model, "
                                         "trace and validation report");
  TrainCli train_args;
  double tr_alpha = 0.0;
  double tr_beta = 0.0;
  std::vector<double> tr_range;
  tr->add_option("--data", train_args.data_path, "training CSV")->required();
  tr->add_option("--config", train_args.config_path, "JSON config file");
  tr->add_option("--val", train_args.val_path,
                 "validation CSV (default: 80/20 split of --data)");
  tr->add_option("--out", train_args.out_path, "model JSON path")->required();
  tr->add_option("--trace", train_args.trace_path,
                 "trace JSONL path (default <out>.trace.jsonl)");
  tr->add_option("--report", train_args.report_path,
                 "validation report path (default <out>.report.json)");
  tr->add_option("--method", train_args.method, "sgd | lp (exact F1 program)");
  tr->add_option("--dump-lp", train_args.dump_lp_path,
                 "write the F1 program as plain text (with --method lp)");
  auto* obj_opt = tr->add_option("--objective", train_args.cfg.objective,
                                 "hinge | rap | par | aucpr | aucroc | fbeta");
  auto* alpha_opt = tr->add_option("--alpha", tr_alpha, "R@P precision target");
  auto* beta_opt =
      tr->add_option("--beta", tr_beta, "P@R recall target, or beta for fbeta");
  auto* anchors_opt = tr->add_option("--anchors", train_args.cfg.anchors,
                                     "anchor count for the AUC objectives");
  auto* eps_opt = tr->add_option("--epsilon-cap", train_args.cfg.epsilon_cap,
                                 "anchor clamp margin below 1");
  auto* range_opt = tr->add_option("--precision-range", tr_range,
                                   "restrict the AUC integral to [lo, hi]")
                        ->expected(2);
  auto* steps_opt = tr->add_option("--steps", train_args.cfg.train.steps);
  auto* batch_opt =
      tr->add_option("--batch-size", train_args.cfg.train.batch_size);
  auto* lrp_opt = tr->add_option("--lr-primal", train_args.cfg.train.lr_primal);
  auto* lrd_opt = tr->add_option("--lr-dual", train_args.cfg.train.lr_dual);
  std::string tr_decay;
  auto* decay_opt = tr->add_option("--lr-decay", tr_decay,
                                   "constant | inv_sqrt");
  auto* l2_opt = tr->add_option("--l2-reg", train_args.cfg.train.l2_reg);
  double tr_lambda_cap = 0.0;
  auto* cap_opt = tr->add_option("--lambda-cap", tr_lambda_cap,
                                 "dual projection cap (0 disables)");
  auto* seed_opt = tr->add_option("--seed", train_args.cfg.train.seed);
  auto* eval_opt =
      tr->add_option("--eval-every", train_args.cfg.train.eval_every);

  // evaluate
  auto* ev = app.add_subcommand("evaluate", "Write a metrics report JSON");
  std::string ev_model, ev_data, ev_out, ev_pr, ev_roc;
  double ev_fbeta = 1.0;
  std::optional<double> ev_alpha, ev_beta;
  ev->add_option("--model", ev_model, "model JSON")->required();
  ev->add_option("--data", ev_data, "dataset CSV")->required();
  ev->add_option("--out", ev_out, "report path (default: stdout)");
  ev->add_option("--fbeta", ev_fbeta, "beta for the F-measure column");
  ev->add_option("--alpha", ev_alpha,
                 "also report the exact recall-at-precision oracle");
  ev->add_option("--beta", ev_beta,
                 "also report the exact precision-at-recall oracle");
  ev->add_option("--pr-curve", ev_pr, "write the PR curve CSV here");
  ev->add_option("--roc-curve", ev_roc, "write the ROC curve CSV here");

  // compare
  auto* cmp = app.add_subcommand(
      "compare", "Per-metric absolute gains of each model over the first");
  std::vector<std::string> cmp_models;
  std::string cmp_data, cmp_out;
  double cmp_fbeta = 1.0;
  cmp->add_option("--models", cmp_models, "model JSONs; first is the baseline")
      ->required()
      ->expected(2, -1);
  cmp->add_option("--data", cmp_data, "dataset CSV")->required();
  cmp->add_option("--out", cmp_out, "table path (default: stdout)");
  cmp->add_option("--fbeta", cmp_fbeta, "beta for the F-measure column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (gen->parsed()) {
      spec.generator = rankopt::generator_from_string(gen_kind);
      rankopt::save_csv_dataset(rankopt::generate(spec), gen_out);
      return kExitOk;
    }
    if (tr->parsed()) {
      if (!train_args.config_path.empty()) {
        rankopt::RunConfig file_cfg =
            rankopt::load_run_config(train_args.config_path);
        // Command-line flags override the config file.
        if (!obj_opt->count()) train_args.cfg.objective = file_cfg.objective;
        if (!anchors_opt->count()) train_args.cfg.anchors = file_cfg.anchors;
        if (!eps_opt->count()) {
          train_args.cfg.epsilon_cap = file_cfg.epsilon_cap;
        }
        if (!range_opt->count()) {
          train_args.cfg.precision_range = file_cfg.precision_range;
        }
        train_args.cfg.target = file_cfg.target;
        if (!steps_opt->count()) {
          train_args.cfg.train.steps = file_cfg.train.steps;
        }
        if (!batch_opt->count()) {
          train_args.cfg.train.batch_size = file_cfg.train.batch_size;
        }
        if (!lrp_opt->count()) {
          train_args.cfg.train.lr_primal = file_cfg.train.lr_primal;
        }
        if (!lrd_opt->count()) {
          train_args.cfg.train.lr_dual = file_cfg.train.lr_dual;
        }
        if (!decay_opt->count()) {
          train_args.cfg.train.lr_decay = file_cfg.train.lr_decay;
        }
        if (!l2_opt->count()) {
          train_args.cfg.train.l2_reg = file_cfg.train.l2_reg;
        }
        if (!cap_opt->count()) {
          train_args.cfg.train.lambda_cap = file_cfg.train.lambda_cap;
        }
        if (!seed_opt->count()) {
          train_args.cfg.train.seed = file_cfg.train.seed;
        }
        if (!eval_opt->count()) {
          train_args.cfg.train.eval_every = file_cfg.train.eval_every;
        }
      }
      if (alpha_opt->count()) train_args.cfg.target = tr_alpha;
      if (beta_opt->count()) train_args.cfg.target = tr_beta;
      if (range_opt->count()) {
        train_args.cfg.precision_range = {tr_range[0], tr_range[1]};
      }
      if (decay_opt->count()) {
        if (tr_decay == "constant") {
          train_args.cfg.train.lr_decay = rankopt::LrDecay::kConstant;
        } else if (tr_decay == "inv_sqrt") {
          train_args.cfg.train.lr_decay = rankopt::LrDecay::kInvSqrt;
        } else {
          throw std::invalid_argument(
              "--lr-decay must be constant or inv_sqrt");
        }
      }
      if (cap_opt->count()) {
        train_args.cfg.train.lambda_cap =
            tr_lambda_cap > 0.0 ? std::optional<double>(tr_lambda_cap)
                                : std::nullopt;
      }
      if (train_args.method != "sgd" && train_args.method != "lp") {
        throw std::invalid_argument("--method must be sgd or lp");
      }
      return run_train(train_args);
    }
    if (ev->parsed()) {
      return run_evaluate(ev_model, ev_data, ev_out, ev_fbeta, ev_alpha,
                          ev_beta, ev_pr, ev_roc);
    }
    if (cmp->parsed()) {
      return run_compare(cmp_models, cmp_data, cmp_out, cmp_fbeta);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitRuntime;
  }
  return kExitOk;
}
