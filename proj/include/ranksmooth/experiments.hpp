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

#pragma once

// Synthetic parameter sweeps over (alpha, beta): generalized-KL error of the
// blended targets against the true BTL probabilities, and held-out
// majority-vote accuracy of trained score tables.
//
// Seeds are derived with derive_seed (see seed.hpp) so every cell can be
// recomputed in isolation:
//
//   weights   derive_seed(base, {1, repeat})
//   pairs     derive_seed(base, {2, bits(r), repeat})
//   outcomes  derive_seed(base, {3, bits(r), n_t, repeat})
//   split     derive_seed(base, {4, bits(r), n_t, repeat})
//   training  derive_seed(base, {5, bits(r), n_t, bits(alpha), bits(beta), repeat})
//
// so curves for different n_t share weights and pair sets, and curves for
// different r share weights. With resample_per_repeat off, the first four
// streams use repeat 0 for every repeat.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ranksmooth/btl.hpp"
#include "ranksmooth/learner.hpp"
#include "ranksmooth/rank_centrality.hpp"

namespace ranksmooth {

std::vector<double> linspace(double lo, double hi, std::size_t points);

struct SweepSpec {
  std::size_t n_items = 500;
  std::vector<double> pair_ratios{0.15};
  std::vector<std::uint64_t> trials_per_pair{3, 5, 10, 20, 50, 100};
  std::vector<double> alphas = linspace(0.0, 1.0, 21);
  std::vector<double> betas{1.0};
  std::size_t n_repeats = 10;
  std::uint64_t base_seed = 0;
  PowerLawConfig power_law;
  double laplace = 0.0;
  double train_fraction = 0.95;
  // Accuracy sweeps only: when false, every repeat reuses the data and split
  // of repeat 0 and only the training seed changes.
  bool resample_per_repeat = true;
  StationaryOptions stationary;

  void validate() const;
};

enum class Metric { kKlError, kAccuracy };

std::string metric_name(Metric metric);

struct SweepRow {
  double r = 0.0;
  std::uint64_t n_t = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t repeat = 0;
  double value = 0.0;

  bool operator==(const SweepRow&) const = default;
};

struct CellSummary {
  double r = 0.0;
  std::uint64_t n_t = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation over repeats
  double std_error = 0.0;
  std::size_t count = 0;
};

enum class Axis { kAlpha, kBeta };

// Best grid point of one curve: the argmin of the mean error, or the argmax
// of the mean accuracy, along `axis` with the other parameter fixed.
// Ties go to the smallest x.
struct CurveOptimum {
  Axis axis = Axis::kAlpha;
  double r = 0.0;
  std::uint64_t n_t = 0;
  double fixed = 0.0;
  double best_x = 0.0;
  double best_mean = 0.0;
};

struct CellFailure {
  double r = 0.0;
  std::uint64_t n_t = 0;
  std::size_t repeat = 0;
  std::string message;
};

struct SweepResult {
  Metric metric = Metric::kKlError;
  std::vector<SweepRow> rows;
  std::vector<CellSummary> summaries;
  std::vector<CurveOptimum> optima;
  std::vector<CellFailure> failures;

  const CellSummary* find_summary(double r, std::uint64_t n_t, double alpha, double beta) const;
  const CurveOptimum* find_optimum(Axis axis, double r, std::uint64_t n_t, double fixed) const;
};

// Recomputes summaries and optima from rows.
void summarize(SweepResult& result);

SweepResult error_sweep(const SweepSpec& spec);
SweepResult accuracy_sweep(const SweepSpec& spec, const TrainConfig& train_config);

enum class EmitFormat { kCsv, kSvg, kBoth };

// Writes rows.csv, summary.csv and optima.csv and/or one SVG chart per
// fixed parameter value. Returns the files written.
std::vector<std::filesystem::path> emit_results(const SweepResult& result,
                                                const std::filesystem::path& out_dir,
                                                EmitFormat format);

void write_rows_csv(std::ostream& out, const SweepResult& result);
std::vector<SweepRow> parse_rows_csv(std::istream& in, const std::string& source = "<stream>");

// Kendall rank correlation (tau-a) of two equally long vectors.
double kendall_tau(std::span<const double> a, std::span<const double> b);

}  // namespace ranksmooth
