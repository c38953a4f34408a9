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

// Rank Centrality: a random walk over compared items that moves from an item
// toward the items that beat it. Its stationary distribution estimates the
// normalized BTL weights, and beta-smoothed ratios of it give global
// pairwise preference probabilities.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ranksmooth/comparison.hpp"

namespace ranksmooth {

// Above this many items the transition matrix is kept in sparse rows.
inline constexpr std::size_t kDenseTransitionLimit = 5000;

class TransitionMatrix {
 public:
  enum class Storage { kDense, kSparse };

  std::size_t size() const { return n_; }
  std::size_t max_degree() const { return d_max_; }
  Storage storage() const { return storage_; }

  double at(ItemIndex i, ItemIndex j) const;
  double row_sum(ItemIndex i) const;

  // out = pi^T * P
  void left_multiply(std::span<const double> pi, std::span<double> out) const;

  // Builds either representation regardless of size (tests compare them).
  static TransitionMatrix build(const ComparisonDataset& dataset, double laplace,
                                Storage storage);

 private:
  std::size_t n_ = 0;
  std::size_t d_max_ = 0;
  Storage storage_ = Storage::kDense;
  std::vector<double> dense_;  // row-major n x n
  // Sparse: off-diagonal entries in CSR, diagonal separately.
  std::vector<std::size_t> row_start_;
  std::vector<ItemIndex> cols_;
  std::vector<double> values_;
  std::vector<double> diagonal_;
};

// Off-diagonal P_ij = (1/d_max) * (n_ji + laplace) / (n_ij + n_ji + 2 laplace)
// for compared pairs, with d_max the largest number of compared partners of
// any item; the diagonal takes the remaining mass of each row.
TransitionMatrix build_transition(const ComparisonDataset& dataset, double laplace = 0.0);

struct StationaryDistribution {
  std::vector<double> pi;
  double residual = 0.0;  // L1 change of the last iteration
  std::size_t iterations = 0;
};

struct StationaryOptions {
  double tol = 1e-10;
  std::size_t max_iter = 100000;
};

// Power iteration from the uniform vector. Throws ReducibleChainError if the
// chain has more than one strongly connected component and
// ConvergenceError if the L1 change is still >= tol after max_iter steps.
StationaryDistribution stationary_distribution(const TransitionMatrix& matrix,
                                               const StationaryOptions& options = {});

// Checks irreducibility on the dataset before building and iterating.
StationaryDistribution rank_centrality(const ComparisonDataset& dataset, double laplace = 0.0,
                                       const StationaryOptions& options = {});

// pi_i^beta / (pi_i^beta + pi_j^beta)
double global_probability(std::span<const double> pi, double beta, ItemIndex i, ItemIndex j);

inline double global_probability(const StationaryDistribution& dist, double beta, ItemIndex i,
                                 ItemIndex j) {
  return global_probability(dist.pi, beta, i, j);
}

}  // namespace ranksmooth
