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

// Preference probabilities from scores, cross-entropy losses against local,
// global and blended targets, and the generalized KL error metric.

#include <span>
#include <vector>

#include "ranksmooth/comparison.hpp"

namespace ranksmooth {

// Predicted probabilities are clamped to [kProbabilityFloor, 1 - floor]
// before taking logs.
inline constexpr double kProbabilityFloor = 1e-12;

class BlendParams {
 public:
  // Throws std::invalid_argument unless 0 <= alpha <= 1 and beta >= 0.
  BlendParams(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

struct PairTarget {
  double p_local = 0.5;
  double p_global = 0.5;
  double q_star = 0.5;
};

// Logistic of s_i - s_j.
double predicted_probability(double s_i, double s_j);

double clamp_probability(double q);

// -p log q - (1 - p) log(1 - q). Throws std::domain_error unless 0 < q < 1.
double cross_entropy(double p, double q);

double blended_target(double p_local, double p_global, double alpha);

// One target per pair of `dataset`, in pairs() order, oriented as (i, j).
// p_global uses the beta-smoothed stationary distribution `pi`.
std::vector<PairTarget> make_targets(const ComparisonDataset& dataset,
                                     std::span<const double> pi, const BlendParams& params);

// Sum over pairs of C(p_local, q): the plain pairwise loss.
double pairwise_loss(const ComparisonDataset& dataset, std::span<const double> scores);

// Sum over pairs of alpha * C(p_local, q) + (1 - alpha) * C(p_global, q).
// Throws std::invalid_argument if targets do not cover every pair.
double combined_loss(const ComparisonDataset& dataset, std::span<const PairTarget> targets,
                     std::span<const double> scores, double alpha);

// Sum of p log(p / q) - p + q, with the p = 0 term equal to q. Throws
// std::domain_error when some q is 0 while p > 0.
double generalized_kl_error(std::span<const double> p_true, std::span<const double> q_star);

}  // namespace ranksmooth
