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

#include "ranksmooth/experiments.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ranksmooth/error.hpp"
#include "ranksmooth/io.hpp"
#include "ranksmooth/kernels.hpp"
#include "ranksmooth/loss.hpp"
#include "ranksmooth/parallel.hpp"
#include "ranksmooth/seed.hpp"
#include "ranksmooth/svg_chart.hpp"

namespace ranksmooth {

namespace {

enum Stream : std::uint64_t {
  kWeightsStream = 1,
  kPairsStream = 2,
  kOutcomesStream = 3,
  kSplitStream = 4,
  kTrainStream = 5,
};

constexpr int kMaxSplitAttempts = 100;

struct Task {
  std::size_t r_index;
  std::size_t nt_index;
  std::size_t repeat;
};

struct TaskOutput {
  std::vector<SweepRow> rows;
  std::optional<std::string> failure;
};

std::vector<Task> make_tasks(const SweepSpec& spec) {
  std::vector<Task> tasks;
  for (std::size_t ri = 0; ri < spec.pair_ratios.size(); ++ri) {
    for (std::size_t ti = 0; ti < spec.trials_per_pair.size(); ++ti) {
      for (std::size_t rep = 0; rep < spec.n_repeats; ++rep) tasks.push_back({ri, ti, rep});
    }
  }
  return tasks;
}

SimulatedStudy simulate_cell(const SweepSpec& spec, double r, std::uint64_t n_t,
                             std::size_t repeat, BtlWeights& weights) {
  const std::uint64_t base = spec.base_seed;
  weights = sample_weights(spec.power_law, spec.n_items,
                           derive_seed(base, {kWeightsStream, repeat}));
  return simulate_study(weights, r, n_t, derive_seed(base, {kPairsStream, key_of(r), repeat}),
                        derive_seed(base, {kOutcomesStream, key_of(r), n_t, repeat}));
}

SweepResult run_tasks(const SweepSpec& spec, Metric metric,
                      const std::function<std::vector<SweepRow>(const Task&)>& run) {
  const auto tasks = make_tasks(spec);
  std::vector<TaskOutput> outputs(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t k) {
    try {
      outputs[k].rows = run(tasks[k]);
    } catch (const std::exception& e) {
      outputs[k].failure = e.what();
    }
  });
  SweepResult result;
  result.metric = metric;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const Task& t = tasks[k];
    if (outputs[k].failure) {
      result.failures.push_back({spec.pair_ratios[t.r_index], spec.trials_per_pair[t.nt_index],
                                 t.repeat, *outputs[k].failure});
      continue;
    }
    result.rows.insert(result.rows.end(), outputs[k].rows.begin(), outputs[k].rows.end());
  }
  summarize(result);
  return result;
}

// A blended target of exactly 0 where the true probability is positive
// (alpha = 1 on a unanimous pair) makes the divergence infinite; the grid
// point is recorded as +inf rather than failing the cell.
double kl_error_or_inf(std::span<const double> p_true, std::span<const double> q_star) {
  for (std::size_t k = 0; k < p_true.size(); ++k) {
    if (q_star[k] <= 0.0 && p_true[k] > 0.0) return std::numeric_limits<double>::infinity();
  }
  return generalized_kl_error(p_true, q_star);
}

bool better(Metric metric, double candidate, double incumbent) {
  return metric == Metric::kKlError ? candidate < incumbent : candidate > incumbent;
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  if (points == 0) return {};
  if (points == 1) return {lo};
  std::vector<double> out(points);
  for (std::size_t k = 0; k < points; ++k) {
    out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
  }
  // Grid values are usually decimal; snap away the accumulated noise.
  for (double& v : out) v = std::round(v * 1e12) / 1e12;
  return out;
}

void SweepSpec::validate() const {
  if (n_items < 2) throw std::invalid_argument("sweep needs at least 2 items");
  if (pair_ratios.empty() || trials_per_pair.empty() || alphas.empty() || betas.empty()) {
    throw std::invalid_argument("sweep grids must be nonempty");
  }
  if (n_repeats == 0) throw std::invalid_argument("sweep needs at least one repeat");
  for (double r : pair_ratios) {
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("pair ratio must lie in (0, 1]");
  }
  for (auto t : trials_per_pair) {
    if (t == 0) throw std::invalid_argument("trials per pair must be at least 1");
  }
  for (double a : alphas) BlendParams(a, 1.0);
  for (double b : betas) BlendParams(0.0, b);
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw std::invalid_argument("train fraction must lie in (0, 1)");
  }
}

std::string metric_name(Metric metric) {
  return metric == Metric::kKlError ? "error" : "accuracy";
}

const CellSummary* SweepResult::find_summary(double r, std::uint64_t n_t, double alpha,
                                             double beta) const {
  for (const auto& s : summaries) {
    if (s.r == r && s.n_t == n_t && s.alpha == alpha && s.beta == beta) return &s;
  }
  return nullptr;
}

const CurveOptimum* SweepResult::find_optimum(Axis axis, double r, std::uint64_t n_t,
                                              double fixed) const {
  for (const auto& o : optima) {
    if (o.axis == axis && o.r == r && o.n_t == n_t && o.fixed == fixed) return &o;
  }
  return nullptr;
}

void summarize(SweepResult& result) {
  using Key = std::tuple<double, std::uint64_t, double, double>;  // r, n_t, beta, alpha
  std::map<Key, std::vector<double>> cells;
  for (const auto& row : result.rows) {
    cells[{row.r, row.n_t, row.beta, row.alpha}].push_back(row.value);
  }
  result.summaries.clear();
  for (const auto& [key, values] : cells) {
    CellSummary s;
    std::tie(s.r, s.n_t, s.beta, s.alpha) = key;
    s.count = values.size();
    double total = 0.0;
    for (double v : values) total += v;
    s.mean = total / static_cast<double>(s.count);
    if (!std::isfinite(s.mean)) {
      s.stddev = s.std_error = std::numeric_limits<double>::infinity();
    } else if (s.count > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - s.mean) * (v - s.mean);
      s.stddev = std::sqrt(ss / static_cast<double>(s.count - 1));
      s.std_error = s.stddev / std::sqrt(static_cast<double>(s.count));
    }
    result.summaries.push_back(s);
  }

  result.optima.clear();
  for (Axis axis : {Axis::kAlpha, Axis::kBeta}) {
    // (r, n_t, fixed) -> (x, mean) along the curve, x ascending.
    std::map<std::tuple<double, std::uint64_t, double>, std::vector<std::pair<double, double>>>
        curves;
    for (const auto& s : result.summaries) {
      const double fixed = axis == Axis::kAlpha ? s.beta : s.alpha;
      const double x = axis == Axis::kAlpha ? s.alpha : s.beta;
      curves[{s.r, s.n_t, fixed}].emplace_back(x, s.mean);
    }
    for (auto& [key, points] : curves) {
      if (points.size() < 2) continue;
      std::sort(points.begin(), points.end());
      std::size_t best = 0;
      for (std::size_t k = 1; k < points.size(); ++k) {
        if (better(result.metric, points[k].second, points[best].second)) best = k;
      }
      CurveOptimum o;
      o.axis = axis;
      std::tie(o.r, o.n_t, o.fixed) = key;
      o.best_x = points[best].first;
      o.best_mean = points[best].second;
      result.optima.push_back(o);
    }
  }
}

SweepResult error_sweep(const SweepSpec& spec) {
  spec.validate();
  return run_tasks(spec, Metric::kKlError, [&](const Task& t) {
    const double r = spec.pair_ratios[t.r_index];
    const std::uint64_t n_t = spec.trials_per_pair[t.nt_index];
    BtlWeights weights;
    const auto study = simulate_cell(spec, r, n_t, t.repeat, weights);
    const ComparisonDataset& ds = study.dataset;
    const auto pi = rank_centrality(ds, spec.laplace, spec.stationary);

    const std::size_t m = ds.pair_count();
    std::vector<double> p_true(m), p_local(m), p_global(m), q_star(m);
    for (std::size_t k = 0; k < m; ++k) {
      const PairCounts& p = ds.pair(k);
      p_true[k] = true_probability(weights, p.i, p.j);
      p_local[k] = static_cast<double>(p.wins_i) / static_cast<double>(p.total());
    }
    std::vector<SweepRow> rows;
    rows.reserve(spec.alphas.size() * spec.betas.size());
    for (double beta : spec.betas) {
      for (std::size_t k = 0; k < m; ++k) {
        const PairCounts& p = ds.pair(k);
        p_global[k] = global_probability(pi, beta, p.i, p.j);
      }
      for (double alpha : spec.alphas) {
        kernels::blend(alpha, p_local, p_global, q_star);
        rows.push_back({r, n_t, alpha, beta, t.repeat, kl_error_or_inf(p_true, q_star)});
      }
    }
    return rows;
  });
}

SweepResult accuracy_sweep(const SweepSpec& spec, const TrainConfig& train_config) {
  spec.validate();
  train_config.validate();
  return run_tasks(spec, Metric::kAccuracy, [&](const Task& t) {
    const double r = spec.pair_ratios[t.r_index];
    const std::uint64_t n_t = spec.trials_per_pair[t.nt_index];
    const std::uint64_t base = spec.base_seed;
    const std::size_t data_repeat = spec.resample_per_repeat ? t.repeat : 0;
    BtlWeights weights;
    const auto study = simulate_cell(spec, r, n_t, data_repeat, weights);

    // Re-split until the training half alone yields an irreducible chain.
    const std::uint64_t split_seed = derive_seed(base, {kSplitStream, key_of(r), n_t, data_repeat});
    std::optional<DatasetSplit> halves;
    for (int attempt = 0; attempt < kMaxSplitAttempts && !halves; ++attempt) {
      auto candidate = split(study.dataset, spec.train_fraction, split_seed + attempt);
      if (connectivity_report(candidate.train, spec.laplace).irreducible()) {
        halves = std::move(candidate);
      }
    }
    if (!halves) throw Error("no split with an irreducible training chain");
    const auto pi = rank_centrality(halves->train, spec.laplace, spec.stationary);

    std::vector<SweepRow> rows;
    for (double beta : spec.betas) {
      for (double alpha : spec.alphas) {
        TrainConfig config = train_config;
        config.seed =
            derive_seed(base, {kTrainStream, key_of(r), n_t, key_of(alpha), key_of(beta), t.repeat});
        const auto scores = train(halves->train, pi, BlendParams(alpha, beta), config);
        rows.push_back({r, n_t, alpha, beta, t.repeat, evaluate_accuracy(scores, halves->test)});
      }
    }
    return rows;
  });
}

void write_rows_csv(std::ostream& out, const SweepResult& result) {
  out << "r,n_t,alpha,beta,repeat," << metric_name(result.metric) << '\n';
  for (const auto& row : result.rows) {
    out << io::format_double(row.r) << ',' << row.n_t << ',' << io::format_double(row.alpha)
        << ',' << io::format_double(row.beta) << ',' << row.repeat << ','
        << io::format_double(row.value) << '\n';
  }
}

std::vector<SweepRow> parse_rows_csv(std::istream& in, const std::string& source) {
  std::vector<SweepRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto view = io::trim(line);
    if (view.empty()) continue;
    if (!have_header) {
      if (view != "r,n_t,alpha,beta,repeat,error" && view != "r,n_t,alpha,beta,repeat,accuracy") {
        throw ParseError(source, line_no, "unexpected sweep header");
      }
      have_header = true;
      continue;
    }
    const auto f = io::split_fields(view);
    SweepRow row;
    std::uint64_t repeat = 0;
    if (f.size() != 6 || !io::parse_double(f[0], row.r) || !io::parse_uint(f[1], row.n_t) ||
        !io::parse_double(f[2], row.alpha) || !io::parse_double(f[3], row.beta) ||
        !io::parse_uint(f[4], repeat) || !io::parse_double(f[5], row.value)) {
      throw ParseError(source, line_no, "malformed sweep row");
    }
    row.repeat = repeat;
    rows.push_back(row);
  }
  if (!have_header) throw ParseError(source, line_no, "missing header");
  return rows;
}

std::vector<std::filesystem::path> emit_results(const SweepResult& result,
                                                const std::filesystem::path& out_dir,
                                                EmitFormat format) {
  if (result.rows.empty()) throw Error("no sweep rows to emit");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  if (format != EmitFormat::kSvg) {
    const auto rows_path = out_dir / "rows.csv";
    io::write_file_atomic(rows_path, [&](std::ostream& out) { write_rows_csv(out, result); });
    written.push_back(rows_path);

    const auto summary_path = out_dir / "summary.csv";
    io::write_file_atomic(summary_path, [&](std::ostream& out) {
      out << "r,n_t,alpha,beta,mean,stddev,stderr,count\n";
      for (const auto& s : result.summaries) {
        out << io::format_double(s.r) << ',' << s.n_t << ',' << io::format_double(s.alpha) << ','
            << io::format_double(s.beta) << ',' << io::format_double(s.mean) << ','
            << io::format_double(s.stddev) << ',' << io::format_double(s.std_error) << ','
            << s.count << '\n';
      }
    });
    written.push_back(summary_path);

    const auto optima_path = out_dir / "optima.csv";
    io::write_file_atomic(optima_path, [&](std::ostream& out) {
      out << "axis,r,n_t,fixed,best,best_mean\n";
      for (const auto& o : result.optima) {
        out << (o.axis == Axis::kAlpha ? "alpha" : "beta") << ',' << io::format_double(o.r)
            << ',' << o.n_t << ',' << io::format_double(o.fixed) << ','
            << io::format_double(o.best_x) << ',' << io::format_double(o.best_mean) << '\n';
      }
    });
    written.push_back(optima_path);
  }

  if (format != EmitFormat::kCsv) {
    std::vector<double> ratios, fixed_alpha, fixed_beta;
    std::vector<std::uint64_t> trials;
    for (const auto& s : result.summaries) {
      ratios.push_back(s.r);
      trials.push_back(s.n_t);
    }
    std::sort(ratios.begin(), ratios.end());
    ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());
    std::sort(trials.begin(), trials.end());
    trials.erase(std::unique(trials.begin(), trials.end()), trials.end());
    const bool vary_r = ratios.size() > 1;
    const bool vary_nt = trials.size() > 1;
    auto series_name = [&](double r, std::uint64_t n_t) {
      if (vary_r && !vary_nt) return "r=" + io::format_double(r);
      if (vary_nt && !vary_r) return "n_t=" + std::to_string(n_t);
      return "r=" + io::format_double(r) + ", n_t=" + std::to_string(n_t);
    };

    for (Axis axis : {Axis::kAlpha, Axis::kBeta}) {
      std::vector<double> fixed_values;
      for (const auto& o : result.optima) {
        if (o.axis == axis) fixed_values.push_back(o.fixed);
      }
      std::sort(fixed_values.begin(), fixed_values.end());
      fixed_values.erase(std::unique(fixed_values.begin(), fixed_values.end()), fixed_values.end());
      const std::string x_name = axis == Axis::kAlpha ? "alpha" : "beta";
      const std::string fixed_name = axis == Axis::kAlpha ? "beta" : "alpha";
      for (double fixed : fixed_values) {
        svg::LineChart chart;
        chart.title = (result.metric == Metric::kKlError ? "Generalized KL error" : "Test accuracy") +
                      std::string(" vs ") + x_name + " (" + fixed_name + " = " +
                      io::format_double(fixed) + ")";
        chart.x_label = x_name;
        chart.y_label = result.metric == Metric::kKlError ? "mean error" : "mean accuracy";
        for (double r : ratios) {
          for (std::uint64_t n_t : trials) {
            const CurveOptimum* opt = result.find_optimum(axis, r, n_t, fixed);
            if (opt == nullptr) continue;
            svg::Series series;
            series.name = series_name(r, n_t);
            std::vector<std::pair<double, double>> points;
            for (const auto& s : result.summaries) {
              if (s.r != r || s.n_t != n_t) continue;
              if ((axis == Axis::kAlpha ? s.beta : s.alpha) != fixed) continue;
              points.emplace_back(axis == Axis::kAlpha ? s.alpha : s.beta, s.mean);
            }
            std::sort(points.begin(), points.end());
            for (std::size_t k = 0; k < points.size(); ++k) {
              series.xs.push_back(points[k].first);
              series.ys.push_back(points[k].second);
              if (points[k].first == opt->best_x) series.marker = k;
            }
            chart.series.push_back(std::move(series));
          }
        }
        const auto path = out_dir / (x_name + "_curves_" + fixed_name + "_" + io::format_double(fixed) + ".svg");
        io::write_text_atomic(path, svg::render(chart));
        written.push_back(path);
      }
    }
  }
  return written;
}

double kendall_tau(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("kendall_tau: length mismatch");
  const std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("kendall_tau needs at least 2 elements");
  long long concordant = 0;
  long long discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = (a[i] - a[j]) * (b[i] - b[j]);
      if (s > 0) ++concordant;
      if (s < 0) ++discordant;
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return static_cast<double>(concordant - discordant) / pairs;
}

}  // namespace ranksmooth
