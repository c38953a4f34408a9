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

// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails. Each criterion states its pinned
// configuration and tolerance next to the check.

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ranksmooth/btl.hpp"
#include "ranksmooth/comparison.hpp"
#include "ranksmooth/experiments.hpp"
#include "ranksmooth/io.hpp"
#include "ranksmooth/learner.hpp"
#include "ranksmooth/loss.hpp"
#include "ranksmooth/rank_centrality.hpp"
#include "ranksmooth/seed.hpp"
#include "test_util.hpp"

using namespace ranksmooth;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { notes.push_back("info " + what); }
};

std::string num(double v, int precision = 6) {
  std::ostringstream out;
  out << std::setprecision(precision) << v;
  return out.str();
}

ComparisonDataset simulated(std::size_t n, double ratio, std::uint64_t n_t, std::uint64_t seed) {
  const auto w = sample_weights(PowerLawConfig{}, n, derive_seed(seed, {1}));
  return simulate_study(w, ratio, n_t, derive_seed(seed, {2}), derive_seed(seed, {3})).dataset;
}

std::vector<double> random_simplex(std::size_t n, Rng& rng) {
  std::vector<double> pi(n);
  double total = 0.0;
  for (double& p : pi) total += (p = 0.01 + uniform01(rng));
  for (double& p : pi) p /= total;
  return pi;
}

// ---------------------------------------------------------------------------

Outcome exact_reductions() {
  Outcome out;
  Rng rng(101);
  double worst_rel = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto ds = simulated(30, 0.3, 1 + rng() % 20, 1000 + trial);
    const auto pi = random_simplex(ds.item_count(), rng);
    std::vector<double> scores(ds.item_count());
    for (double& s : scores) s = 6 * uniform01(rng) - 3;
    const auto targets = make_targets(ds, pi, BlendParams(1.0, 0.5 + uniform01(rng)));
    const double combined = combined_loss(ds, targets, scores, 1.0);
    const double pairwise = pairwise_loss(ds, scores);
    worst_rel = std::max(worst_rel, std::fabs(combined - pairwise) / std::fabs(pairwise));
  }
  out.require(worst_rel <= 1e-12, "alpha=1 combined loss vs pairwise loss, worst relative gap " +
                                      num(worst_rel) + " <= 1e-12 over 100 instances");

  bool half = true, direct = true;
  for (int trial = 0; trial < 20; ++trial) {
    const auto ds = simulated(40, 0.3, 5, 2000 + trial);
    const auto pi = rank_centrality(ds);
    for (const auto& p : ds.pairs()) {
      half = half && global_probability(pi, 0.0, p.i, p.j) == 0.5;
      direct = direct && global_probability(pi, 1.0, p.i, p.j) == pi.pi[p.i] / (pi.pi[p.i] + pi.pi[p.j]);
    }
  }
  std::vector<double> extreme{1e-300, 1.0 - 1e-300};
  half = half && global_probability(extreme, 0.0, 0, 1) == 0.5;
  out.require(half, "beta=0 gives p_global exactly 0.5 on every pair");
  out.require(direct, "beta=1 gives p_global exactly pi_i/(pi_i+pi_j) on every pair");
  return out;
}

Outcome gradient_correctness() {
  Outcome out;
  Rng rng(202);
  const double h = 1e-5;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto ds = simulated(12, 0.5, 1 + rng() % 10, 3000 + trial);
    const auto pi = random_simplex(ds.item_count(), rng);
    const double alpha = uniform01(rng);
    const auto targets = make_targets(ds, pi, BlendParams(alpha, 0.5 + uniform01(rng)));
    std::vector<double> scores(ds.item_count());
    for (double& s : scores) s = 4 * uniform01(rng) - 2;

    std::vector<BatchEntry> batch;
    for (std::size_t k = 0; k < ds.pair_count(); ++k) {
      batch.push_back({ds.pair(k).i, ds.pair(k).j, targets[k].q_star});
    }
    auto grad = batch_gradient(batch, scores);
    for (double& g : grad) g *= static_cast<double>(batch.size());

    double diff = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      auto up = scores, down = scores;
      up[i] += h;
      down[i] -= h;
      const double fd = (combined_loss(ds, targets, up, alpha) - combined_loss(ds, targets, down, alpha)) / (2 * h);
      diff += (fd - grad[i]) * (fd - grad[i]);
      norm += grad[i] * grad[i];
    }
    worst = std::max(worst, std::sqrt(diff / norm));
  }
  out.require(worst < 1e-5, "batch gradient vs central differences (h=1e-5), worst relative error " +
                                num(worst) + " < 1e-5 over 100 instances");
  return out;
}

Outcome rank_centrality_fidelity() {
  Outcome out;
  double linf_sum = 0.0, tau_sum = 0.0, linf_max = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto w = sample_weights(PowerLawConfig{}, 20, derive_seed(seed, {1}));
    const auto pairs = sample_pair_set(20, 1.0, derive_seed(seed, {2}));
    const auto ds = simulate_comparisons(w, pairs, 1000, derive_seed(seed, {3}));
    const auto pi = rank_centrality(ds);
    double total = 0.0;
    for (double x : w.weights) total += x;
    double linf = 0.0;
    for (std::size_t i = 0; i < 20; ++i) linf = std::max(linf, std::fabs(pi.pi[i] - w.weights[i] / total));
    linf_sum += linf;
    linf_max = std::max(linf_max, linf);
    tau_sum += kendall_tau(pi.pi, w.weights);
  }
  const double linf_mean = linf_sum / 10, tau_mean = tau_sum / 10;
  out.require(linf_mean <= 0.02, "N=20 complete, n_t=1000: mean L_inf(pi - w/sum w) = " + num(linf_mean) +
                                     " <= 0.02 (worst seed " + num(linf_max) + ")");
  out.require(tau_mean >= 0.95, "mean Kendall tau(pi, w) = " + num(tau_mean) + " >= 0.95");

  auto two = ComparisonDataset::with_items({"a", "b"});
  two.add(0, 1, 3, 1);
  const auto pi = rank_centrality(two);
  const double err = std::max(std::fabs(pi.pi[0] - 0.75), std::fabs(pi.pi[1] - 0.25));
  out.require(err <= 1e-9, "two items with counts (3,1): pi = (" + num(pi.pi[0], 12) + ", " +
                               num(pi.pi[1], 12) + "), error " + num(err) + " <= 1e-9");
  return out;
}

SweepSpec trend_sweep_spec() {
  SweepSpec spec;
  spec.n_items = 200;
  spec.pair_ratios = {0.15};
  spec.trials_per_pair = {3, 100};
  spec.alphas = linspace(0.0, 1.0, 21);
  spec.betas = {1.0};
  spec.n_repeats = 10;
  spec.base_seed = 0;
  return spec;
}

constexpr double kGridStep = 0.05;

void describe_curve(Outcome& out, const SweepResult& result, Axis axis, double r, std::uint64_t n_t,
                    double fixed) {
  std::ostringstream line;
  line << (axis == Axis::kAlpha ? "alpha" : "beta") << " curve r=" << r << " n_t=" << n_t << ":";
  for (const auto& s : result.summaries) {
    if (s.r != r || s.n_t != n_t) continue;
    if ((axis == Axis::kAlpha ? s.beta : s.alpha) != fixed) continue;
    line << ' ' << (axis == Axis::kAlpha ? s.alpha : s.beta) << '=' << num(s.mean, 4);
  }
  out.info(line.str());
}

Outcome trials_shift_alpha() {
  Outcome out;
  const auto result = error_sweep(trend_sweep_spec());
  out.require(result.failures.empty(), "all sweep cells completed");
  const auto* low = result.find_optimum(Axis::kAlpha, 0.15, 3, 1.0);
  const auto* high = result.find_optimum(Axis::kAlpha, 0.15, 100, 1.0);
  if (!low || !high) {
    out.require(false, "optima present");
    return out;
  }
  out.require(high->best_x >= low->best_x - kGridStep,
              "argmin alpha(n_t=100) = " + num(high->best_x) + " >= argmin alpha(n_t=3) = " +
                  num(low->best_x) + " within one grid step");
  out.require(low->best_x < 1.0, "argmin alpha(n_t=3) = " + num(low->best_x) + " < 1");
  if (low->best_x == 0.0) out.info("argmin alpha(n_t=3) sits on the alpha=0 boundary");
  describe_curve(out, result, Axis::kAlpha, 0.15, 3, 1.0);
  describe_curve(out, result, Axis::kAlpha, 0.15, 100, 1.0);
  return out;
}

Outcome trials_shift_beta() {
  Outcome out;
  auto spec = trend_sweep_spec();
  spec.alphas = {0.2};
  spec.betas = linspace(0.5, 1.2, 15);
  const auto result = error_sweep(spec);
  out.require(result.failures.empty(), "all sweep cells completed");
  const auto* low = result.find_optimum(Axis::kBeta, 0.15, 3, 0.2);
  const auto* high = result.find_optimum(Axis::kBeta, 0.15, 100, 0.2);
  if (!low || !high) {
    out.require(false, "optima present");
    return out;
  }
  out.require(std::fabs(high->best_x - 1.0) <= std::fabs(low->best_x - 1.0) + kGridStep,
              "|argmin beta(n_t=100) - 1| = " + num(std::fabs(high->best_x - 1.0)) +
                  " <= |argmin beta(n_t=3) - 1| = " + num(std::fabs(low->best_x - 1.0)) +
                  " within one grid step");
  describe_curve(out, result, Axis::kBeta, 0.15, 3, 0.2);
  describe_curve(out, result, Axis::kBeta, 0.15, 100, 0.2);
  return out;
}

Outcome ratio_shift_alpha() {
  Outcome out;
  auto spec = trend_sweep_spec();
  spec.pair_ratios = {0.15, 0.95};
  spec.trials_per_pair = {5};
  const auto result = error_sweep(spec);
  out.require(result.failures.empty(), "all sweep cells completed");
  const auto* sparse = result.find_optimum(Axis::kAlpha, 0.15, 5, 1.0);
  const auto* dense = result.find_optimum(Axis::kAlpha, 0.95, 5, 1.0);
  if (!sparse || !dense) {
    out.require(false, "optima present");
    return out;
  }
  out.require(dense->best_x <= sparse->best_x + kGridStep,
              "argmin alpha(r=0.95) = " + num(dense->best_x) + " <= argmin alpha(r=0.15) = " +
                  num(sparse->best_x) + " within one grid step");
  describe_curve(out, result, Axis::kAlpha, 0.15, 5, 1.0);
  describe_curve(out, result, Axis::kAlpha, 0.95, 5, 1.0);
  return out;
}

struct AccuracyCurve {
  std::vector<double> alphas, means, errors;
};

AccuracyCurve accuracy_curve(const SweepResult& result, double beta) {
  AccuracyCurve curve;
  for (const auto& s : result.summaries) {
    if (s.beta != beta) continue;
    curve.alphas.push_back(s.alpha);
    curve.means.push_back(s.mean);
    curve.errors.push_back(s.std_error);
  }
  return curve;
}

Outcome accuracy_analogue() {
  Outcome out;
  SweepSpec spec;
  spec.n_items = 500;
  spec.pair_ratios = {0.15};
  spec.trials_per_pair = {5};
  spec.alphas = linspace(0.0, 1.0, 11);
  spec.betas = {0.8, 0.9, 0.95, 1.0, 1.05};
  spec.n_repeats = 10;
  spec.train_fraction = 0.95;
  const auto result = accuracy_sweep(spec, TrainConfig{});
  out.require(result.failures.empty(), "all sweep cells completed");

  // Pinned curve: beta = 1. The remaining betas are reported for reference.
  for (double beta : spec.betas) {
    const auto c = accuracy_curve(result, beta);
    std::ostringstream line;
    line << "beta=" << beta << ":";
    for (std::size_t k = 0; k < c.alphas.size(); ++k) line << ' ' << c.alphas[k] << '=' << num(c.means[k], 5);
    line << " (stderr at alpha=1: " << num(c.errors.back(), 3) << ")";
    out.info(line.str());
  }
  const auto c = accuracy_curve(result, 1.0);
  if (c.alphas.size() != spec.alphas.size() || c.alphas.front() != 0.0 || c.alphas.back() != 1.0) {
    out.require(false, "complete beta=1 curve");
    return out;
  }
  bool strict_min = true;
  for (std::size_t k = 1; k < c.means.size(); ++k) strict_min = strict_min && c.means[0] < c.means[k];
  out.require(strict_min, "beta=1: mean accuracy at alpha=0 (" + num(c.means[0]) +
                              ") is strictly below every other alpha");
  const double bar = c.means.back() - c.errors.back();
  double best_interior = -1.0, best_alpha = 0.0;
  for (std::size_t k = 1; k + 1 < c.means.size(); ++k) {
    if (c.means[k] > best_interior) best_interior = c.means[k], best_alpha = c.alphas[k];
  }
  out.require(best_interior >= bar, "beta=1: best interior alpha " + num(best_alpha) + " has mean " +
                                        num(best_interior) + " >= acc(alpha=1) - 1 SE = " + num(bar));
  return out;
}

Outcome statistical_soundness() {
  Outcome out;
  // Unbiasedness of the empirical probability.
  {
    const std::size_t replicates = 10000;
    bool ok = true;
    double worst = 0.0;
    Rng rng(303);
    for (double p : {0.1, 0.3, 0.5, 0.8}) {
      for (std::uint64_t n_t : {1, 5, 10}) {
        double total = 0.0;
        for (std::size_t m = 0; m < replicates; ++m) {
          std::uint64_t wins = 0;
          for (std::uint64_t t = 0; t < n_t; ++t) wins += uniform01(rng) < p ? 1 : 0;
          auto ds = ComparisonDataset::with_items({"a", "b"});
          ds.add(0, 1, wins, n_t - wins);
          total += ds.empirical_probability(0, 1);
        }
        const double tol = 4 * std::sqrt(p * (1 - p) / static_cast<double>(n_t * replicates));
        const double dev = std::fabs(total / replicates - p);
        ok = ok && dev <= tol;
        worst = std::max(worst, dev / tol);
      }
    }
    out.require(ok, "p_local mean over 10^4 replicates within 4 sqrt(p(1-p)/(n_t M)) of p "
                    "(worst deviation " + num(worst, 3) + " of the tolerance)");
  }
  // Power-law sampler against its closed-form CDF.
  {
    const std::size_t n = 100000;
    const double critical = 1.628 / std::sqrt(static_cast<double>(n));
    for (double gamma : {0.0, 2.0}) {
      PowerLawConfig cfg;
      cfg.gamma = gamma;
      auto w = sample_weights(cfg, n, 404 + static_cast<std::uint64_t>(gamma)).weights;
      std::sort(w.begin(), w.end());
      const double a = std::pow(cfg.omega_min, gamma + 1), b = std::pow(cfg.omega_max, gamma + 1);
      double d = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double f = (std::pow(w[k], gamma + 1) - a) / (b - a);
        d = std::max({d, f - static_cast<double>(k) / n, static_cast<double>(k + 1) / n - f});
      }
      out.require(d <= critical, "KS gamma=" + num(gamma) + ": D = " + num(d, 4) +
                                     " <= " + num(critical, 4) + " (level 0.01, n=10^5)");
    }
  }
  // Binomial mean of simulated counts.
  {
    const std::size_t replicates = 10000;
    const std::uint64_t n_t = 7;
    const auto w = sample_weights(PowerLawConfig{}, 8, 505);
    const auto pairs = sample_pair_set(8, 1.0, 506);
    std::vector<double> sum(pairs.size(), 0.0);
    for (std::size_t m = 0; m < replicates; ++m) {
      const auto ds = simulate_comparisons(w, pairs, n_t, derive_seed(507, {m}));
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& pc = ds.pair(*ds.find_pair(pairs[k].first, pairs[k].second));
        sum[k] += static_cast<double>(pc.i == pairs[k].first ? pc.wins_i : pc.wins_j) / n_t;
      }
    }
    bool ok = true;
    double worst = 0.0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const double p = true_probability(w, pairs[k].first, pairs[k].second);
      const double se = std::sqrt(p * (1 - p) / static_cast<double>(n_t * replicates));
      const double dev = std::fabs(sum[k] / replicates - p) / se;
      worst = std::max(worst, dev);
      ok = ok && dev <= 4.0;
    }
    out.require(ok, "mean n_ij/n_t over 10^4 seeds within 4 SE of p_ij on 28 pairs (worst " +
                        num(worst, 3) + " SE)");
  }
  return out;
}

struct CliRun {
  int code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args, const std::filesystem::path& cwd) {
  const std::string cmd =
      "cd '" + cwd.string() + "' && '" + std::string(RANKSMOOTH_CLI_PATH) + "' " + args + " 2>&1";
  CliRun run;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return run;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) run.output.append(buf, n);
  const int status = ::pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

Outcome plumbing() {
  Outcome out;
  // CSV round trips.
  {
    testing::TempDir dir;
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto ds = simulated(60, 0.2, 1 + seed * 3, 600 + seed);
      save_dataset(dir / "d.csv", ds);
      const auto loaded = load_dataset(dir / "d.csv");
      save_dataset(dir / "d2.csv", loaded);
      ok = ok && load_dataset(dir / "d2.csv") == loaded;
      save_dataset(dir / "d3.csv", load_dataset(dir / "d2.csv"));
      ok = ok && io::read_text(dir / "d2.csv") == io::read_text(dir / "d3.csv");
      ok = ok && loaded.pair_count() == ds.pair_count();
      for (const auto& p : ds.pairs()) {
        const auto i = loaded.find_item(ds.label(p.i));
        const auto j = loaded.find_item(ds.label(p.j));
        ok = ok && i && j && loaded.find_pair(*i, *j) &&
             loaded.empirical_probability(*i, *j) == ds.empirical_probability(p.i, p.j);
      }

      Rng rng(seed);
      ScoreTable table;
      for (std::size_t i = 0; i < ds.item_count(); ++i) table.scores.push_back(std::ldexp(uniform01(rng) - 0.5, static_cast<int>(rng() % 40) - 20));
      save_scores(dir / "s.csv", ds, table);
      ok = ok && load_scores(dir / "s.csv", ds).scores == table.scores;
    }
    SweepSpec spec;
    spec.n_items = 30;
    spec.pair_ratios = {0.4};
    spec.trials_per_pair = {5};
    spec.alphas = linspace(0.0, 1.0, 3);
    spec.n_repeats = 2;
    const auto result = error_sweep(spec);
    std::stringstream rows;
    write_rows_csv(rows, result);
    ok = ok && parse_rows_csv(rows) == result.rows;
    out.require(ok, "comparison, score and sweep CSVs round-trip to identical values");
  }
  // Deterministic reruns through the CLI.
  {
    testing::TempDir a, b;
    const std::vector<std::string> steps{
        "generate --n-items 40 --ratio 0.4 --trials 5 --seed 11 --out d.csv",
        "aggregate --in d.csv --out pi.csv --beta 0.95",
        "train --in d.csv --out s.csv --test-out t.csv --seed 3",
        "eval --scores s.csv --in t.csv --out e.csv",
        "sweep --n-items 30 --ratios 0.4 --trials 5,10 --alphas 0:1:0.5 --betas 0.9,1 --repeats 2 "
        "--out-dir sweep --format both"};
    bool ran = true;
    for (const auto* dir : {&a, &b}) {
      for (const auto& step : steps) ran = ran && run_cli(step, dir->path()).code == 0;
    }
    bool same = ran;
    std::size_t compared = 0;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(a.path())) {
      if (!entry.is_regular_file()) continue;
      if (entry.path().filename().string().find("manifest") != std::string::npos) continue;
      const auto rel = std::filesystem::relative(entry.path(), a.path());
      same = same && io::read_text(entry.path()) == io::read_text(b.path() / rel);
      ++compared;
    }
    out.require(same && compared >= 10, "two identical CLI pipelines give byte-identical outputs (" +
                                            std::to_string(compared) + " files, manifests excluded)");
  }
  // Kill during an atomic write.
  {
    testing::TempDir dir;
    const auto existing = dir / "existing.csv";
    const auto fresh = dir / "fresh.csv";
    testing::write_file(existing, "original\n");
    bool ok = true;
    for (const auto* target : {&existing, &fresh}) {
      const pid_t child = ::fork();
      if (child < 0) {
        ok = false;
        break;
      }
      if (child == 0) {
        io::write_file_atomic(*target, [](std::ostream& s) {
          for (int k = 0; k < 1000; ++k) {
            s << "partial " << k << '\n' << std::flush;
            std::this_thread::sleep_for(std::chrono::milliseconds(5));
          }
        });
        ::_exit(0);
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(150));
      ::kill(child, SIGKILL);
      int status = 0;
      ::waitpid(child, &status, 0);
      ok = ok && WIFSIGNALED(status);
    }
    ok = ok && io::read_text(existing) == "original\n" && !std::filesystem::exists(fresh);
    out.require(ok, "a writer killed mid-write leaves the old file intact and creates no partial file");
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact reductions", exact_reductions},
      {2, "gradient correctness", gradient_correctness},
      {3, "rank centrality fidelity", rank_centrality_fidelity},
      {4, "optimal alpha grows with trials per pair", trials_shift_alpha},
      {5, "optimal beta approaches 1 with trials per pair", trials_shift_beta},
      {6, "optimal alpha shrinks with pair ratio", ratio_shift_alpha},
      {7, "held-out accuracy versus alpha", accuracy_analogue},
      {8, "statistical soundness", statistical_soundness},
      {9, "plumbing", plumbing},
  };
  int failed = 0;
  std::vector<std::string> summary;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " ("
         << std::fixed << std::setprecision(1) << secs << " s)";
    std::cout << line.str() << '\n';
    for (const auto& note : outcome.notes) std::cout << "        " << note << '\n';
    std::cout << std::flush;
    summary.push_back(line.str());
    if (!outcome.pass) ++failed;
  }
  std::cout << "\nsummary\n";
  for (const auto& s : summary) std::cout << "  " << s << '\n';
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
