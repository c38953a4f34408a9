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

#include "ranksmooth/learner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "ranksmooth/error.hpp"
#include "ranksmooth/io.hpp"
#include "ranksmooth/seed.hpp"

namespace ranksmooth {

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw std::invalid_argument("learning rate must be positive");
  }
  if (!(momentum >= 0.0 && momentum < 1.0)) {
    throw std::invalid_argument("momentum must lie in [0, 1)");
  }
  if (!(lr_decay_per_epoch > 0.0 && lr_decay_per_epoch <= 1.0)) {
    throw std::invalid_argument("learning-rate decay must lie in (0, 1]");
  }
  if (batch_size == 0) throw std::invalid_argument("batch size must be at least 1");
}

std::vector<double> batch_gradient(std::span<const BatchEntry> batch,
                                   std::span<const double> scores) {
  std::vector<double> grad(scores.size(), 0.0);
  if (batch.empty()) return grad;
  for (const auto& e : batch) {
    const double r = predicted_probability(scores[e.i], scores[e.j]) - e.q_star;
    grad[e.i] += r;
    grad[e.j] -= r;
  }
  const double inv = 1.0 / static_cast<double>(batch.size());
  for (double& g : grad) g *= inv;
  return grad;
}

TrainReport train_with_history(const ComparisonDataset& train_set,
                               const StationaryDistribution& pi, const BlendParams& params,
                               const TrainConfig& config) {
  config.validate();
  const std::size_t n = train_set.item_count();
  const auto targets = make_targets(train_set, pi.pi, params);

  std::vector<BatchEntry> entries(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const PairCounts& p = train_set.pair(k);
    entries[k] = {p.i, p.j, targets[k].q_star};
  }

  TrainReport report;
  report.scores.scores.assign(n, 0.0);
  std::vector<double>& scores = report.scores.scores;
  std::vector<double> velocity(n, 0.0);
  report.initial_loss = combined_loss(train_set, targets, scores, params.alpha());

  Rng rng(config.seed);
  double lr = config.learning_rate;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(entries.begin(), entries.end(), rng);
    const std::span<const BatchEntry> all(entries);
    for (std::size_t start = 0; start < all.size(); start += config.batch_size) {
      const auto batch = all.subspan(start, std::min(config.batch_size, all.size() - start));
      const auto grad = batch_gradient(batch, scores);
      for (std::size_t i = 0; i < n; ++i) {
        velocity[i] = config.momentum * velocity[i] - lr * grad[i];
        scores[i] += velocity[i];
      }
    }
    lr *= config.lr_decay_per_epoch;
    report.epoch_loss.push_back(combined_loss(train_set, targets, scores, params.alpha()));
  }
  return report;
}

ScoreTable train(const ComparisonDataset& train_set, const StationaryDistribution& pi,
                 const BlendParams& params, const TrainConfig& config) {
  return train_with_history(train_set, pi, params, config).scores;
}

double evaluate_accuracy(std::span<const double> scores, const ComparisonDataset& test_set) {
  if (scores.size() != test_set.item_count()) {
    throw std::invalid_argument("score table size does not match item count");
  }
  double credit = 0.0;
  std::size_t counted = 0;
  for (const auto& p : test_set.pairs()) {
    const Majority m = majority_label(p);
    if (m == Majority::kTie) continue;
    ++counted;
    const double si = scores[p.i];
    const double sj = scores[p.j];
    if (si == sj) {
      credit += 0.5;
    } else if ((si > sj) == (m == Majority::kPreferI)) {
      credit += 1.0;
    }
  }
  if (counted == 0) throw Error("every test pair has tied votes; accuracy is undefined");
  return credit / static_cast<double>(counted);
}

void save_scores(const std::filesystem::path& path, const ComparisonDataset& dataset,
                 const ScoreTable& table) {
  if (table.size() != dataset.item_count()) {
    throw std::invalid_argument("score table size does not match item count");
  }
  io::write_file_atomic(path, [&](std::ostream& out) {
    out << "item,score\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
      out << dataset.label(i) << ',' << io::format_double(table.scores[i]) << '\n';
    }
  });
}

ScoreTable load_scores(const std::filesystem::path& path, const ComparisonDataset& dataset) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  const std::string source = path.string();
  ScoreTable table;
  table.scores.assign(dataset.item_count(), 0.0);
  std::vector<bool> seen(dataset.item_count(), false);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto view = io::trim(line);
    if (view.empty()) continue;
    if (!have_header) {
      if (view != "item,score") throw ParseError(source, line_no, "expected header 'item,score'");
      have_header = true;
      continue;
    }
    const auto fields = io::split_fields(view);
    double value = 0.0;
    if (fields.size() != 2 || !io::parse_double(fields[1], value) || !std::isfinite(value)) {
      throw ParseError(source, line_no, "expected 'item,score' with a finite score");
    }
    const auto idx = dataset.find_item(fields[0]);
    if (!idx) continue;  // items absent from the evaluation set are irrelevant
    table.scores[*idx] = value;
    seen[*idx] = true;
  }
  if (!have_header) throw ParseError(source, line_no, "missing header");
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw ParseError(source, line_no, "no score for item '" + dataset.label(i) + "'");
  }
  return table;
}

}  // namespace ranksmooth
