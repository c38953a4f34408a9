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

// Per-item score table trained by mini-batch gradient descent with heavy-ball
// momentum on the rank-smoothed pairwise loss.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "ranksmooth/comparison.hpp"
#include "ranksmooth/loss.hpp"
#include "ranksmooth/rank_centrality.hpp"

namespace ranksmooth {

// Scores are logits; only differences are meaningful.
struct ScoreTable {
  std::vector<double> scores;

  std::size_t size() const { return scores.size(); }
  double operator[](std::size_t i) const { return scores[i]; }
};

struct TrainConfig {
  double learning_rate = 0.001;
  double momentum = 0.9;
  double lr_decay_per_epoch = 0.9;
  std::size_t batch_size = 128;
  std::size_t epochs = 10;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct BatchEntry {
  ItemIndex i = 0;
  ItemIndex j = 0;
  double q_star = 0.5;
};

// Gradient of the batch-mean loss: each pair adds (q_ij - q*_ij) to item i
// and subtracts it from item j; the sum is divided by the batch size.
std::vector<double> batch_gradient(std::span<const BatchEntry> batch,
                                   std::span<const double> scores);

struct TrainReport {
  ScoreTable scores;
  double initial_loss = 0.0;
  // Combined loss over the full training set after each epoch.
  std::vector<double> epoch_loss;
};

TrainReport train_with_history(const ComparisonDataset& train_set,
                               const StationaryDistribution& pi, const BlendParams& params,
                               const TrainConfig& config);

ScoreTable train(const ComparisonDataset& train_set, const StationaryDistribution& pi,
                 const BlendParams& params, const TrainConfig& config);

// Majority-vote accuracy. Pairs with tied votes are skipped; a pair whose
// scores are exactly equal earns half credit. Throws Error if every pair is
// tied.
double evaluate_accuracy(std::span<const double> scores, const ComparisonDataset& test_set);

inline double evaluate_accuracy(const ScoreTable& table, const ComparisonDataset& test_set) {
  return evaluate_accuracy(table.scores, test_set);
}

// `item,score` CSV.
void save_scores(const std::filesystem::path& path, const ComparisonDataset& dataset,
                 const ScoreTable& table);
// Scores re-indexed to `dataset`'s items. Rows for other items are ignored;
// throws ParseError if an item of `dataset` has no score.
ScoreTable load_scores(const std::filesystem::path& path, const ComparisonDataset& dataset);

}  // namespace ranksmooth
