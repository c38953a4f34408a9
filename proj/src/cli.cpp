// Copyright 2026 The ranksmooth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ranksmooth/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ranksmooth/btl.hpp"
#include "ranksmooth/comparison.hpp"
#include "ranksmooth/error.hpp"
#include "ranksmooth/experiments.hpp"
#include "ranksmooth/io.hpp"
#include "ranksmooth/kernels.hpp"
#include "ranksmooth/learner.hpp"
#include "ranksmooth/loss.hpp"
#include "ranksmooth/rank_centrality.hpp"

#ifndef RANKSMOOTH_VERSION
#define RANKSMOOTH_VERSION "0.0.0"
#endif

namespace ranksmooth::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

// Written next to the outputs of every run.
struct RunManifest {
  std::string subcommand;
  json parameters = json::object();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::uint64_t seed = 0;
  json extra = json::object();

  void write(const fs::path& path, double duration_seconds) const {
    json doc;
    doc["subcommand"] = subcommand;
    doc["parameters"] = parameters;
    doc["inputs"] = inputs;
    doc["outputs"] = outputs;
    doc["seed"] = seed;
    doc["tool_version"] = RANKSMOOTH_VERSION;
    doc["kernels"] = std::string(kernels::isa_name(kernels::active_isa()));
    doc["duration_seconds"] = duration_seconds;
    for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
    io::write_text_atomic(path, doc.dump(2) + "\n");
  }
};

fs::path sibling(const fs::path& path, const std::string& suffix) {
  fs::path out = path;
  out.replace_extension();
  out += suffix;
  return out;
}

// "0.1,0.2" or "lo:hi:step" (inclusive), mixed freely.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> values;
  for (auto field : io::split_fields(text)) {
    field = io::trim(field);
    if (field.empty()) continue;
    if (field.find(':') != std::string_view::npos) {
      auto parts = io::split_fields(field, ':');
      double lo = 0, hi = 0, step = 0;
      if (parts.size() != 3 || !io::parse_double(parts[0], lo) || !io::parse_double(parts[1], hi) ||
          !io::parse_double(parts[2], step) || !(step > 0.0) || hi < lo) {
        throw CLI::ValidationError("grid", "bad range '" + std::string(field) + "' (want lo:hi:step)");
      }
      const auto points = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
      auto range = linspace(lo, lo + step * static_cast<double>(points - 1), points);
      values.insert(values.end(), range.begin(), range.end());
      continue;
    }
    double v = 0;
    if (!io::parse_double(field, v)) {
      throw CLI::ValidationError("grid", "not a number: '" + std::string(field) + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw CLI::ValidationError("grid", "empty list");
  return values;
}

std::vector<std::uint64_t> parse_counts(const std::string& text) {
  std::vector<std::uint64_t> values;
  for (auto field : io::split_fields(text)) {
    std::uint64_t v = 0;
    if (!io::parse_uint(field, v) || v == 0) {
      throw CLI::ValidationError("trials", "not a positive integer: '" + std::string(field) + "'");
    }
    values.push_back(v);
  }
  return values;
}

struct GenerateArgs {
  std::size_t n_items = 500;
  double ratio = 0.15;
  std::uint64_t trials = 5;
  std::uint64_t seed = 0;
  PowerLawConfig power_law;
  std::string out;
  std::string weights_out;
};

struct AggregateArgs {
  std::string in;
  std::string out;
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  double laplace = 0.0;
  double beta = 1.0;
  std::string pairs_out;
};

struct TrainArgs {
  std::string in;
  std::string out;
  std::string test_out;
  double alpha = 0.5;
  double beta = 0.95;
  TrainConfig config;
  double train_fraction = 0.95;
  double laplace = 0.0;
  double tol = 1e-10;
  std::size_t max_iter = 100000;
};

struct EvalArgs {
  std::string scores;
  std::string in;
  std::string out;
};

struct SweepArgs {
  std::string mode = "error";
  std::size_t n_items = 500;
  std::string ratios = "0.15";
  std::string trials;
  std::string alphas;
  std::string betas;
  std::size_t repeats = 10;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string format = "both";
  double laplace = 0.0;
  double train_fraction = 0.95;
  bool fixed_split = false;
  TrainConfig config;
};

int run_generate(const GenerateArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  SimulationConfig sim{a.n_items, a.ratio, a.trials, a.seed};
  const auto data = simulate(a.power_law, sim);
  const fs::path out(a.out);
  const fs::path weights_out = a.weights_out.empty() ? sibling(out, ".weights.csv") : fs::path(a.weights_out);
  save_dataset(out, data.study.dataset);
  save_weights(weights_out, data.study.dataset.labels(), data.weights);

  RunManifest m;
  m.subcommand = "generate";
  m.seed = a.seed;
  m.parameters = {{"n_items", a.n_items},          {"ratio", a.ratio},
                  {"trials", a.trials},            {"seed", a.seed},
                  {"gamma", a.power_law.gamma},    {"omega_min", a.power_law.omega_min},
                  {"omega_max", a.power_law.omega_max}};
  m.outputs = {out.string(), weights_out.string()};
  m.extra["pairs"] = data.study.dataset.pair_count();
  m.extra["attempts"] = data.study.attempts;
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  m.write(sibling(out, ".manifest.json"), dt.count());
  std::cout << "wrote " << data.study.dataset.pair_count() << " pairs over "
            << data.study.dataset.item_count() << " items to " << out.string() << "\n";
  return 0;
}

int run_aggregate(const AggregateArgs& a, bool emit_pairs) {
  const auto start = std::chrono::steady_clock::now();
  const auto dataset = load_dataset(a.in);
  const auto dist = rank_centrality(dataset, a.laplace, {a.tol, a.max_iter});

  std::vector<std::size_t> order(dataset.item_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return dist.pi[x] > dist.pi[y]; });
  const fs::path out(a.out);
  io::write_file_atomic(out, [&](std::ostream& os) {
    os << "item,pi,rank\n";
    for (std::size_t r = 0; r < order.size(); ++r) {
      os << dataset.label(order[r]) << ',' << io::format_double(dist.pi[order[r]]) << ','
         << r + 1 << '\n';
    }
  });

  RunManifest m;
  m.subcommand = "aggregate";
  m.parameters = {{"tol", a.tol}, {"max_iter", a.max_iter}, {"laplace", a.laplace}};
  m.inputs = {a.in};
  m.outputs = {out.string()};
  if (emit_pairs) {
    const fs::path pairs_out = a.pairs_out.empty() ? sibling(out, ".global.csv") : fs::path(a.pairs_out);
    io::write_file_atomic(pairs_out, [&](std::ostream& os) {
      os << "item_i,item_j,p_local,p_global\n";
      for (const auto& p : dataset.pairs()) {
        os << dataset.label(p.i) << ',' << dataset.label(p.j) << ','
           << io::format_double(static_cast<double>(p.wins_i) / static_cast<double>(p.total()))
           << ',' << io::format_double(global_probability(dist, a.beta, p.i, p.j)) << '\n';
      }
    });
    m.parameters["beta"] = a.beta;
    m.outputs.push_back(pairs_out.string());
  }
  m.extra["iterations"] = dist.iterations;
  m.extra["residual"] = dist.residual;
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  m.write(sibling(out, ".manifest.json"), dt.count());
  std::cout << "aggregated " << dataset.item_count() << " items in " << dist.iterations
            << " iterations (residual " << io::format_double(dist.residual) << ")\n";
  return 0;
}

int run_train(const TrainArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const auto dataset = load_dataset(a.in);
  const BlendParams params(a.alpha, a.beta);
  a.config.validate();
  const auto halves = split(dataset, a.train_fraction, a.config.seed);
  const auto pi = rank_centrality(halves.train, a.laplace, {a.tol, a.max_iter});
  const auto report = train_with_history(halves.train, pi, params, a.config);
  const double final_loss = report.epoch_loss.empty() ? report.initial_loss : report.epoch_loss.back();

  std::string accuracy_text = "undefined";
  json accuracy = nullptr;
  bool all_tied = std::all_of(halves.test.pairs().begin(), halves.test.pairs().end(),
                              [](const PairCounts& p) { return majority_label(p) == Majority::kTie; });
  if (!all_tied) {
    const double acc = evaluate_accuracy(report.scores, halves.test);
    accuracy_text = io::format_double(acc);
    accuracy = acc;
  }

  const fs::path out(a.out);
  save_scores(out, dataset, report.scores);
  RunManifest m;
  m.subcommand = "train";
  m.seed = a.config.seed;
  m.parameters = {{"alpha", a.alpha},
                  {"beta", a.beta},
                  {"lr", a.config.learning_rate},
                  {"momentum", a.config.momentum},
                  {"decay", a.config.lr_decay_per_epoch},
                  {"batch_size", a.config.batch_size},
                  {"epochs", a.config.epochs},
                  {"seed", a.config.seed},
                  {"train_fraction", a.train_fraction},
                  {"laplace", a.laplace},
                  {"tol", a.tol},
                  {"max_iter", a.max_iter}};
  m.inputs = {a.in};
  m.outputs = {out.string()};
  if (!a.test_out.empty()) {
    save_dataset(a.test_out, halves.test);
    m.outputs.push_back(a.test_out);
  }
  m.extra["final_loss"] = final_loss;
  m.extra["test_accuracy"] = accuracy;
  m.extra["epoch_loss"] = report.epoch_loss;
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  m.write(sibling(out, ".manifest.json"), dt.count());
  std::cout << "final_loss=" << io::format_double(final_loss) << " test_accuracy=" << accuracy_text
            << " train_pairs=" << halves.train.pair_count()
            << " test_pairs=" << halves.test.pair_count() << "\n";
  return 0;
}

int run_eval(const EvalArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const auto dataset = load_dataset(a.in);
  const auto scores = load_scores(a.scores, dataset);
  const double acc = evaluate_accuracy(scores, dataset);
  std::size_t counted = 0;
  for (const auto& p : dataset.pairs()) counted += majority_label(p) != Majority::kTie;
  if (!a.out.empty()) {
    const fs::path out(a.out);
    io::write_file_atomic(out, [&](std::ostream& os) {
      os << "metric,value\naccuracy," << io::format_double(acc) << "\ncounted_pairs," << counted
         << "\n";
    });
    RunManifest m;
    m.subcommand = "eval";
    m.inputs = {a.in, a.scores};
    m.outputs = {out.string()};
    m.extra["accuracy"] = acc;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    m.write(sibling(out, ".manifest.json"), dt.count());
  }
  std::cout << "accuracy=" << io::format_double(acc) << " counted_pairs=" << counted << "\n";
  return 0;
}

int run_sweep(const SweepArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const bool accuracy = a.mode == "accuracy";
  SweepSpec spec;
  spec.n_items = a.n_items;
  spec.pair_ratios = parse_grid(a.ratios);
  spec.trials_per_pair = parse_counts(!a.trials.empty() ? a.trials : (accuracy ? "5" : "3,5,10,20,50,100"));
  spec.alphas = parse_grid(!a.alphas.empty() ? a.alphas : (accuracy ? "0:1:0.1" : "0:1:0.05"));
  spec.betas = parse_grid(!a.betas.empty() ? a.betas : (accuracy ? "0.8,0.9,0.95,1.0,1.05" : "1"));
  spec.n_repeats = a.repeats;
  spec.base_seed = a.seed;
  spec.laplace = a.laplace;
  spec.train_fraction = a.train_fraction;
  spec.resample_per_repeat = !a.fixed_split;
  spec.validate();

  const auto result = accuracy ? accuracy_sweep(spec, a.config) : error_sweep(spec);
  const EmitFormat format = a.format == "csv" ? EmitFormat::kCsv
                            : a.format == "svg" ? EmitFormat::kSvg
                                                : EmitFormat::kBoth;
  const fs::path out_dir(a.out_dir);
  std::vector<fs::path> written;
  if (!result.rows.empty()) written = emit_results(result, out_dir, format);
  fs::create_directories(out_dir);

  RunManifest m;
  m.subcommand = "sweep";
  m.seed = a.seed;
  m.parameters = {{"mode", a.mode},
                  {"n_items", spec.n_items},
                  {"ratios", spec.pair_ratios},
                  {"trials", spec.trials_per_pair},
                  {"alphas", spec.alphas},
                  {"betas", spec.betas},
                  {"repeats", spec.n_repeats},
                  {"seed", spec.base_seed},
                  {"laplace", spec.laplace},
                  {"format", a.format}};
  if (accuracy) {
    m.parameters["train_fraction"] = spec.train_fraction;
    m.parameters["fixed_split"] = a.fixed_split;
    m.parameters["lr"] = a.config.learning_rate;
    m.parameters["momentum"] = a.config.momentum;
    m.parameters["decay"] = a.config.lr_decay_per_epoch;
    m.parameters["batch_size"] = a.config.batch_size;
    m.parameters["epochs"] = a.config.epochs;
  }
  for (const auto& p : written) m.outputs.push_back(p.string());

  // Completed cells are the (r, n_t, repeat) groups that produced rows.
  json completed = json::array();
  std::vector<std::tuple<double, std::uint64_t, std::size_t>> seen;
  for (const auto& row : result.rows) {
    auto key = std::make_tuple(row.r, row.n_t, row.repeat);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      completed.push_back({{"r", row.r}, {"n_t", row.n_t}, {"repeat", row.repeat}});
    }
  }
  json failures = json::array();
  for (const auto& f : result.failures) {
    failures.push_back({{"r", f.r}, {"n_t", f.n_t}, {"repeat", f.repeat}, {"error", f.message}});
  }
  m.extra["completed_cells"] = completed;
  m.extra["failed_cells"] = failures;
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  m.write(out_dir / "manifest.json", dt.count());

  for (const auto& o : result.optima) {
    std::cout << (o.axis == Axis::kAlpha ? "best alpha" : "best beta") << " r=" << o.r
              << " n_t=" << o.n_t << (o.axis == Axis::kAlpha ? " beta=" : " alpha=") << o.fixed
              << ": " << o.best_x << " (" << metric_name(result.metric) << " "
              << io::format_double(o.best_mean) << ")\n";
  }
  if (!result.failures.empty()) {
    std::cerr << "error: " << result.failures.size() << " sweep cell(s) failed; first: "
              << result.failures.front().message << "\n";
    return 1;
  }
  return 0;
}

void add_train_flags(CLI::App* cmd, TrainConfig& config) {
  cmd->add_option("--lr", config.learning_rate, "Initial learning rate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--momentum", config.momentum, "Heavy-ball momentum")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 0.999999999));
  cmd->add_option("--decay", config.lr_decay_per_epoch, "Learning-rate multiplier per epoch")
      ->capture_default_str()
      ->check(CLI::Range(1e-12, 1.0));
  cmd->add_option("--batch-size", config.batch_size, "Pairs per mini-batch")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--epochs", config.epochs, "Training epochs")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Rank-smoothed pairwise preference learning", "ranksmooth"};
  app.set_version_flag("--version", RANKSMOOTH_VERSION);
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Simulate a BTL comparison study");
  generate->add_option("--n-items", gen.n_items, "Number of items")->capture_default_str()->check(CLI::Range(2, 1 << 30));
  generate->add_option("--ratio", gen.ratio, "Fraction of all pairs compared")->capture_default_str()->check(CLI::Range(1e-12, 1.0));
  generate->add_option("--trials", gen.trials, "Votes per compared pair")->capture_default_str()->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--gamma", gen.power_law.gamma, "Power-law exponent of the weights")->capture_default_str();
  generate->add_option("--omega-min", gen.power_law.omega_min, "Smallest weight")->capture_default_str()->check(CLI::PositiveNumber);
  generate->add_option("--omega-max", gen.power_law.omega_max, "Largest weight")->capture_default_str()->check(CLI::PositiveNumber);
  generate->add_option("--out", gen.out, "Comparison CSV to write")->required();
  generate->add_option("--weights-out", gen.weights_out, "Ground-truth weights CSV (default <out>.weights.csv)");

  AggregateArgs agg;
  auto* aggregate = app.add_subcommand("aggregate", "Rank items by Rank Centrality");
  aggregate->add_option("--in", agg.in, "Comparison CSV")->required()->check(CLI::ExistingFile);
  aggregate->add_option("--out", agg.out, "item,pi,rank CSV to write")->required();
  aggregate->add_option("--tol", agg.tol, "L1 convergence tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  aggregate->add_option("--max-iter", agg.max_iter, "Power-iteration limit")->capture_default_str()->check(CLI::PositiveNumber);
  aggregate->add_option("--laplace", agg.laplace, "Pseudo-count added to every win count")->capture_default_str()->check(CLI::NonNegativeNumber);
  auto* beta_opt = aggregate->add_option("--beta", agg.beta, "Also write beta-smoothed pairwise global probabilities")->check(CLI::NonNegativeNumber);
  aggregate->add_option("--pairs-out", agg.pairs_out, "Pairwise probabilities CSV (default <out>.global.csv)");

  TrainArgs tr;
  auto* train_cmd = app.add_subcommand("train", "Train per-item scores on the rank-smoothed loss");
  train_cmd->add_option("--in", tr.in, "Comparison CSV")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--out", tr.out, "item,score CSV to write")->required();
  train_cmd->add_option("--test-out", tr.test_out, "Write the held-out pairs as comparison CSV");
  train_cmd->add_option("--alpha", tr.alpha, "Weight of the local loss")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  train_cmd->add_option("--beta", tr.beta, "Smoothing exponent of the global probabilities")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_train_flags(train_cmd, tr.config);
  train_cmd->add_option("--seed", tr.config.seed, "Seed for the split and batch order")->capture_default_str();
  train_cmd->add_option("--train-fraction", tr.train_fraction, "Share of pairs used for training")->capture_default_str()->check(CLI::Range(1e-12, 1.0 - 1e-12));
  train_cmd->add_option("--laplace", tr.laplace, "Pseudo-count for Rank Centrality")->capture_default_str()->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--tol", tr.tol, "Rank Centrality tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  train_cmd->add_option("--max-iter", tr.max_iter, "Rank Centrality iteration limit")->capture_default_str()->check(CLI::PositiveNumber);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Majority-vote accuracy of a score table");
  eval->add_option("--scores", ev.scores, "item,score CSV")->required()->check(CLI::ExistingFile);
  eval->add_option("--in", ev.in, "Comparison CSV to evaluate on")->required()->check(CLI::ExistingFile);
  eval->add_option("--out", ev.out, "Write metric,value CSV");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Synthetic (alpha, beta) sweeps");
  sweep->add_option("--mode", sw.mode, "error or accuracy")->capture_default_str()->check(CLI::IsMember({"error", "accuracy"}));
  sweep->add_option("--n-items", sw.n_items, "Number of items")->capture_default_str()->check(CLI::Range(2, 1 << 30));
  sweep->add_option("--ratios", sw.ratios, "Pair ratios r (list or lo:hi:step)")->capture_default_str();
  sweep->add_option("--trials", sw.trials, "Votes per pair n_t (default 3,5,10,20,50,100; accuracy: 5)");
  sweep->add_option("--alphas", sw.alphas, "Alpha grid (default 0:1:0.05; accuracy: 0:1:0.1)");
  sweep->add_option("--betas", sw.betas, "Beta grid (default 1; accuracy: 0.8,0.9,0.95,1.0,1.05)");
  sweep->add_option("--repeats", sw.repeats, "Repeats per cell")->capture_default_str()->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sw.seed, "Base seed")->capture_default_str();
  sweep->add_option("--out-dir", sw.out_dir, "Output directory")->required();
  sweep->add_option("--format", sw.format, "csv, svg or both")->capture_default_str()->check(CLI::IsMember({"csv", "svg", "both"}));
  sweep->add_option("--laplace", sw.laplace, "Pseudo-count for Rank Centrality")->capture_default_str()->check(CLI::NonNegativeNumber);
  sweep->add_option("--train-fraction", sw.train_fraction, "Accuracy mode: share of pairs used for training")->capture_default_str()->check(CLI::Range(1e-12, 1.0 - 1e-12));
  sweep->add_flag("--fixed-split", sw.fixed_split, "Accuracy mode: reuse one dataset and split for all repeats; only the training seed varies");
  add_train_flags(sweep, sw.config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*aggregate) return run_aggregate(agg, beta_opt->count() > 0);
    if (*train_cmd) return run_train(tr);
    if (*eval) return run_eval(ev);
    if (*sweep) return run_sweep(sw);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ranksmooth::cli
