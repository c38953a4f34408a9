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

#include "ranksmooth/btl.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ranksmooth/error.hpp"
#include "ranksmooth/io.hpp"
#include "ranksmooth/seed.hpp"

namespace ranksmooth {

BtlWeights sample_weights(const PowerLawConfig& config, std::size_t n, std::uint64_t seed) {
  if (!(config.omega_min > 0.0 && config.omega_min < config.omega_max) ||
      !std::isfinite(config.omega_max)) {
    throw std::invalid_argument("power law needs 0 < omega_min < omega_max < inf");
  }
  if (config.gamma == -1.0) {
    throw std::invalid_argument("power law exponent -1 is not supported");
  }
  const double e = config.gamma + 1.0;
  const double lo = std::pow(config.omega_min, e);
  const double hi = std::pow(config.omega_max, e);
  Rng rng(seed);
  BtlWeights out;
  out.weights.resize(n);
  for (double& w : out.weights) {
    const double u = uniform01(rng);
    w = std::pow(u * (hi - lo) + lo, 1.0 / e);
    // Rounding in pow can step just outside the support.
    w = std::min(std::max(w, config.omega_min), config.omega_max);
  }
  return out;
}

double true_probability(const BtlWeights& weights, ItemIndex i, ItemIndex j) {
  const double wi = weights.weights.at(i);
  const double wj = weights.weights.at(j);
  return wi / (wi + wj);
}

std::size_t pair_sample_size(std::size_t n_items, double ratio) {
  const double total = static_cast<double>(n_items) * static_cast<double>(n_items - 1) / 2.0;
  return static_cast<std::size_t>(std::llround(ratio * total));
}

std::vector<ItemPair> sample_pair_set(std::size_t n_items, double ratio, std::uint64_t seed) {
  if (n_items < 2) throw std::invalid_argument("need at least 2 items");
  if (!(ratio > 0.0 && ratio <= 1.0)) throw std::invalid_argument("pair ratio must lie in (0, 1]");
  const std::size_t total = n_items * (n_items - 1) / 2;
  std::size_t needed = pair_sample_size(n_items, ratio);
  if (needed == 0) {
    throw std::invalid_argument("pair ratio selects no pairs for " +
                                std::to_string(n_items) + " items");
  }
  // Selection sampling: each remaining candidate is taken with probability
  // needed / remaining, which yields a uniform subset of exact size.
  Rng rng(seed);
  std::vector<ItemPair> out;
  out.reserve(needed);
  std::size_t remaining = total;
  for (ItemIndex i = 0; i < n_items && needed > 0; ++i) {
    for (ItemIndex j = i + 1; j < n_items && needed > 0; ++j, --remaining) {
      if (static_cast<double>(remaining) * uniform01(rng) < static_cast<double>(needed)) {
        out.emplace_back(i, j);
        --needed;
      }
    }
  }
  return out;
}

std::vector<std::string> item_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("item" + std::to_string(i));
  return labels;
}

ComparisonDataset simulate_comparisons(const BtlWeights& weights,
                                       std::span<const ItemPair> pairs,
                                       std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials per pair must be at least 1");
  ComparisonDataset dataset = ComparisonDataset::with_items(item_labels(weights.size()));
  Rng rng(seed);
  for (const auto& [i, j] : pairs) {
    const double p = true_probability(weights, i, j);
    std::uint64_t wins_i = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      if (uniform01(rng) < p) ++wins_i;
    }
    dataset.add(i, j, wins_i, trials - wins_i);
  }
  return dataset;
}

SimulatedStudy simulate_study(const BtlWeights& weights, double ratio, std::uint64_t trials,
                              std::uint64_t pair_seed, std::uint64_t outcome_seed,
                              int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const auto pairs = sample_pair_set(weights.size(), ratio, pair_seed + attempt);
    auto dataset = simulate_comparisons(weights, pairs, trials, outcome_seed + attempt);
    if (connectivity_report(dataset).irreducible()) {
      return {std::move(dataset), attempt + 1};
    }
  }
  throw Error("no irreducible comparison graph after " + std::to_string(max_attempts) +
              " attempts (N=" + std::to_string(weights.size()) +
              ", r=" + io::format_double(ratio) + ", n_t=" + std::to_string(trials) + ")");
}

SimulatedData simulate(const PowerLawConfig& power_law, const SimulationConfig& config) {
  SimulatedData out;
  out.weights = sample_weights(power_law, config.n_items, derive_seed(config.seed, {1}));
  out.study = simulate_study(out.weights, config.pair_ratio, config.trials_per_pair,
                             derive_seed(config.seed, {2}), derive_seed(config.seed, {3}));
  return out;
}

void save_weights(const std::filesystem::path& path, std::span<const std::string> labels,
                  const BtlWeights& weights) {
  if (labels.size() != weights.size()) throw std::invalid_argument("label/weight size mismatch");
  io::write_file_atomic(path, [&](std::ostream& out) {
    out << "item,weight\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      out << labels[i] << ',' << io::format_double(weights.weights[i]) << '\n';
    }
  });
}

}  // namespace ranksmooth
