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

#include "rankopt/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

namespace rankopt {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view token, std::size_t line_no) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": cannot parse number '" +
                                std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  return out;
}

json scorer_to_json(const ThresholdedScorer& scorer) {
  return json{{"weights", scorer.weights},
              {"bias", scorer.bias},
              {"thresholds", scorer.thresholds}};
}

json report_to_json_impl(const MetricsReport& r, bool with_curve) {
  json j{{"tp", r.counts.tp},
         {"fp", r.counts.fp},
         {"fn", r.counts.fn},
         {"tn", r.counts.tn},
         {"precision", r.precision},
         {"recall", r.recall},
         {"f_beta", r.f_beta},
         {"accuracy", r.accuracy},
         {"average_precision", r.average_precision},
         {"auc_roc", r.auc_roc}};
  if (with_curve) {
    json curve = json::array();
    for (const PrPoint& p : r.pr_curve) {
      curve.push_back(json{{"threshold", p.threshold},
                           {"recall", p.recall},
                           {"precision", p.precision}});
    }
    j["pr_curve"] = std::move(curve);
  }
  return j;
}

}  // namespace

LabeledDataset load_csv_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dataset: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument(path + ": empty file, expected a header row");
  }
  const auto header = split_csv(line);
  if (header.empty() || trim(header.back()) != "label") {
    throw std::invalid_argument(
        path + ": header must end with a 'label' column, got '" +
        std::string(header.empty() ? "" : trim(header.back())) + "'");
  }
  const std::size_t dim = header.size() - 1;
  if (dim == 0) {
    throw std::invalid_argument(path + ": no feature columns before 'label'");
  }

  std::vector<LabeledExample> examples;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != dim + 1) {
      throw std::invalid_argument(
          path + ": line " + std::to_string(line_no) + " has " +
          std::to_string(fields.size()) + " fields, expected " +
          std::to_string(dim + 1));
    }
    LabeledExample ex;
    ex.features.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      ex.features.push_back(parse_double(fields[j], line_no));
    }
    const double raw_label = parse_double(fields[dim], line_no);
    if (raw_label == 1.0) {
      ex.label = 1;
    } else if (raw_label == 0.0 || raw_label == -1.0) {
      ex.label = -1;
    } else {
      throw std::invalid_argument(path + ": line " + std::to_string(line_no) +
                                  ": label must be 0/1 or -1/+1, got " +
                                  std::string(trim(fields[dim])));
    }
    examples.push_back(std::move(ex));
  }
  return LabeledDataset(std::move(examples));
}

void save_csv_dataset(const LabeledDataset& data, const std::string& path) {
  std::ofstream out = open_output(path);
  for (std::size_t j = 0; j < data.dim(); ++j) {
    out << 'f' << j << ',';
  }
  out << "label\n";
  for (const LabeledExample& ex : data.examples()) {
    for (double v : ex.features) {
      out << format_double(v) << ',';
    }
    out << ex.label << '\n';
  }
}

ThresholdedScorer load_model_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open model: " + path);
  }
  json j;
  in >> j;
  ThresholdedScorer scorer;
  scorer.weights = j.at("weights").get<std::vector<double>>();
  scorer.bias = j.at("bias").get<double>();
  scorer.thresholds = j.at("thresholds").get<std::vector<double>>();
  if (scorer.thresholds.empty()) {
    throw std::invalid_argument(path + ": model needs at least one threshold");
  }
  return scorer;
}

void save_model_json(const ThresholdedScorer& scorer,
                     const std::string& path) {
  std::ofstream out = open_output(path);
  out << scorer_to_json(scorer).dump(2) << '\n';
}

std::string metrics_report_to_json(const MetricsReport& report) {
  return report_to_json_impl(report, /*with_curve=*/true).dump(2);
}

void save_metrics_report(const MetricsReport& report,
                         const std::string& path) {
  std::ofstream out = open_output(path);
  out << metrics_report_to_json(report) << '\n';
}

void save_trace_jsonl(const TrainTrace& trace, const std::string& path) {
  std::ofstream out = open_output(path);
  for (const TraceEntry& e : trace.entries) {
    json j{{"step", e.step},
           {"lagrangian", e.lagrangian},
           {"duals", e.duals},
           {"psi", e.psi},
           {"scorer", scorer_to_json(e.scorer)},
           {"eval", report_to_json_impl(e.eval, /*with_curve=*/false)},
           {"lambda_cap_hit", e.lambda_cap_hit}};
    out << j.dump() << '\n';
  }
}

void save_pr_curve_csv(const std::vector<PrPoint>& curve,
                       const std::string& path) {
  std::ofstream out = open_output(path);
  out << "threshold,recall,precision\n";
  for (const PrPoint& p : curve) {
    out << format_double(p.threshold) << ',' << format_double(p.recall) << ','
        << format_double(p.precision) << '\n';
  }
}

void save_roc_curve_csv(const std::vector<RocPoint>& curve,
                        const std::string& path) {
  std::ofstream out = open_output(path);
  out << "threshold,fpr,tpr\n";
  for (const RocPoint& p : curve) {
    out << format_double(p.threshold) << ',' << format_double(p.fpr) << ','
        << format_double(p.tpr) << '\n';
  }
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config: " + path);
  }
  json j;
  in >> j;
  if (!j.is_object()) {
    throw std::invalid_argument(path + ": config must be a JSON object");
  }
  RunConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "objective") {
      cfg.objective = value.get<std::string>();
    } else if (key == "target") {
      cfg.target = value.get<double>();
    } else if (key == "anchors") {
      cfg.anchors = value.get<std::size_t>();
    } else if (key == "epsilon_cap") {
      cfg.epsilon_cap = value.get<double>();
    } else if (key == "precision_range") {
      const auto range = value.get<std::vector<double>>();
      if (range.size() != 2) {
        throw std::invalid_argument(path +
                                    ": precision_range must be [lo, hi]");
      }
      cfg.precision_range = {range[0], range[1]};
    } else if (key == "lr_primal") {
      cfg.train.lr_primal = value.get<double>();
    } else if (key == "lr_dual") {
      cfg.train.lr_dual = value.get<double>();
    } else if (key == "lr_decay") {
      const auto decay = value.get<std::string>();
      if (decay == "constant") {
        cfg.train.lr_decay = LrDecay::kConstant;
      } else if (decay == "inv_sqrt") {
        cfg.train.lr_decay = LrDecay::kInvSqrt;
      } else {
        throw std::invalid_argument(path + ": lr_decay must be 'constant' or "
                                           "'inv_sqrt', got '" +
                                    decay + "'");
      }
    } else if (key == "l2_reg") {
      cfg.train.l2_reg = value.get<double>();
    } else if (key == "lambda_cap") {
      if (value.is_null()) {
        cfg.train.lambda_cap = std::nullopt;
      } else {
        cfg.train.lambda_cap = value.get<double>();
      }
    } else if (key == "steps") {
      cfg.train.steps = value.get<std::int64_t>();
    } else if (key == "batch_size") {
      cfg.train.batch_size = value.get<std::size_t>();
    } else if (key == "seed") {
      cfg.train.seed = value.get<std::uint64_t>();
    } else if (key == "eval_every") {
      cfg.train.eval_every = value.get<std::int64_t>();
    } else {
      throw std::invalid_argument(path + ": unknown config key '" + key + "'");
    }
  }
  return cfg;
}

ObjectiveSpec objective_from_config(const RunConfig& cfg,
                                    const LabeledDataset& data) {
  ObjectiveSpec spec;
  if (cfg.objective == "hinge") {
    spec = make_hinge();
  } else if (cfg.objective == "rap") {
    spec = make_recall_at_precision(cfg.target);
  } else if (cfg.objective == "par") {
    spec = make_precision_at_recall(cfg.target);
  } else if (cfg.objective == "fbeta") {
    spec = make_fbeta(cfg.target > 0.0 ? cfg.target : 1.0);
  } else if (cfg.objective == "aucpr") {
    spec = make_aucpr(cfg.anchors, data.prior(), cfg.epsilon_cap,
                      cfg.precision_range);
  } else if (cfg.objective == "aucroc") {
    spec = make_aucroc(cfg.anchors, cfg.epsilon_cap, cfg.precision_range);
  } else {
    throw std::invalid_argument("unknown objective '" + cfg.objective +
                                "' (expected hinge, rap, par, fbeta, aucpr "
                                "or aucroc)");
  }
  validate(spec, data);
  return spec;
}

}  // namespace rankopt
