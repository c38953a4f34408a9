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

// Bradley-Terry-Luce ground truth and simulated comparison studies.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "ranksmooth/comparison.hpp"

namespace ranksmooth {

struct BtlWeights {
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
};

// Density proportional to w^gamma on [omega_min, omega_max].
struct PowerLawConfig {
  double gamma = 2.0;
  double omega_min = 0.1;
  double omega_max = 1.0;
};

struct SimulationConfig {
  std::size_t n_items = 500;
  double pair_ratio = 0.15;
  std::uint64_t trials_per_pair = 5;
  std::uint64_t seed = 0;
};

using ItemPair = std::pair<ItemIndex, ItemIndex>;

// Inverse-CDF draws. Throws std::invalid_argument for gamma == -1 or bad
// bounds.
BtlWeights sample_weights(const PowerLawConfig& config, std::size_t n, std::uint64_t seed);

// w_i / (w_i + w_j)
double true_probability(const BtlWeights& weights, ItemIndex i, ItemIndex j);

// round(ratio * N(N-1)/2)
std::size_t pair_sample_size(std::size_t n_items, double ratio);

// Uniform subset of the unordered pairs, without replacement, each with
// i < j, in lexicographic order. Throws std::invalid_argument when the
// requested size rounds to zero.
std::vector<ItemPair> sample_pair_set(std::size_t n_items, double ratio, std::uint64_t seed);

// For each pair, n_t Bernoulli(p_ij) votes. Items are labelled item_labels().
ComparisonDataset simulate_comparisons(const BtlWeights& weights,
                                       std::span<const ItemPair> pairs,
                                       std::uint64_t trials, std::uint64_t seed);

std::vector<std::string> item_labels(std::size_t n);

struct SimulatedStudy {
  ComparisonDataset dataset;
  // Resampling attempts used; attempt k draws with pair_seed + k and
  // outcome_seed + k.
  int attempts = 1;
};

// Samples pairs and outcomes until the walk graph (laplace 0) is
// irreducible, at most max_attempts times; throws Error after that.
SimulatedStudy simulate_study(const BtlWeights& weights, double ratio,
                              std::uint64_t trials, std::uint64_t pair_seed,
                              std::uint64_t outcome_seed, int max_attempts = 100);

struct SimulatedData {
  BtlWeights weights;
  SimulatedStudy study;
};

// Full pipeline for one seed. Stream seeds: weights derive_seed(seed, {1}),
// pairs derive_seed(seed, {2}), outcomes derive_seed(seed, {3}).
SimulatedData simulate(const PowerLawConfig& power_law, const SimulationConfig& config);

// Sidecar `item,weight` CSV.
void save_weights(const std::filesystem::path& path, std::span<const std::string> labels,
                  const BtlWeights& weights);

}  // namespace ranksmooth
