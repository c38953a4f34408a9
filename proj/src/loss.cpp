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

#include "ranksmooth/loss.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ranksmooth/kernels.hpp"
#include "ranksmooth/rank_centrality.hpp"

namespace ranksmooth {

BlendParams::BlendParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be finite and >= 0, got " + std::to_string(beta));
  }
}

double predicted_probability(double s_i, double s_j) {
  const double d = s_i - s_j;
  if (d >= 0.0) return 1.0 / (1.0 + std::exp(-d));
  const double e = std::exp(d);
  return e / (1.0 + e);
}

double clamp_probability(double q) {
  if (q < kProbabilityFloor) return kProbabilityFloor;
  if (q > 1.0 - kProbabilityFloor) return 1.0 - kProbabilityFloor;
  return q;
}

double cross_entropy(double p, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error("cross entropy needs 0 < q < 1, got " + std::to_string(q));
  }
  double loss = 0.0;
  if (p != 0.0) loss -= p * std::log(q);
  if (p != 1.0) loss -= (1.0 - p) * std::log1p(-q);
  return loss;
}

double blended_target(double p_local, double p_global, double alpha) {
  return alpha * p_local + (1.0 - alpha) * p_global;
}

std::vector<PairTarget> make_targets(const ComparisonDataset& dataset,
                                     std::span<const double> pi, const BlendParams& params) {
  if (pi.size() != dataset.item_count()) {
    throw std::invalid_argument("stationary distribution size does not match item count");
  }
  const std::size_t n = dataset.pair_count();
  std::vector<double> local(n), global(n), blended(n);
  for (std::size_t k = 0; k < n; ++k) {
    const PairCounts& p = dataset.pair(k);
    local[k] = static_cast<double>(p.wins_i) / static_cast<double>(p.total());
    global[k] = global_probability(pi, params.beta(), p.i, p.j);
  }
  kernels::blend(params.alpha(), local, global, blended);
  std::vector<PairTarget> targets(n);
  for (std::size_t k = 0; k < n; ++k) targets[k] = {local[k], global[k], blended[k]};
  return targets;
}

double pairwise_loss(const ComparisonDataset& dataset, std::span<const double> scores) {
  double total = 0.0;
  for (const auto& p : dataset.pairs()) {
    const double q = clamp_probability(predicted_probability(scores[p.i], scores[p.j]));
    const double p_local = static_cast<double>(p.wins_i) / static_cast<double>(p.total());
    total += cross_entropy(p_local, q);
  }
  return total;
}

double combined_loss(const ComparisonDataset& dataset, std::span<const PairTarget> targets,
                     std::span<const double> scores, double alpha) {
  if (targets.size() != dataset.pair_count()) {
    throw std::invalid_argument("missing targets: " + std::to_string(targets.size()) +
                                " for " + std::to_string(dataset.pair_count()) + " pairs");
  }
  if (scores.size() != dataset.item_count()) {
    throw std::invalid_argument("score table size does not match item count");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const PairCounts& p = dataset.pair(k);
    const double q = clamp_probability(predicted_probability(scores[p.i], scores[p.j]));
    total += alpha * cross_entropy(targets[k].p_local, q) +
             (1.0 - alpha) * cross_entropy(targets[k].p_global, q);
  }
  return total;
}

double generalized_kl_error(std::span<const double> p_true, std::span<const double> q_star) {
  if (p_true.size() != q_star.size()) {
    throw std::invalid_argument("probability vectors differ in length");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < p_true.size(); ++k) {
    const double p = p_true[k];
    const double q = q_star[k];
    if (p == 0.0) {
      total += q;
      continue;
    }
    if (!(q > 0.0)) {
      throw std::domain_error("generalized KL is infinite: q = 0 where p = " +
                              std::to_string(p));
    }
    total += p * std::log(p / q) - p + q;
  }
  return total;
}

}  // namespace ranksmooth
