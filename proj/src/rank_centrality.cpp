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

#include "ranksmooth/rank_centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ranksmooth/error.hpp"
#include "ranksmooth/io.hpp"
#include "ranksmooth/kernels.hpp"

namespace ranksmooth {

double TransitionMatrix::at(ItemIndex i, ItemIndex j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("transition index out of range");
  if (storage_ == Storage::kDense) return dense_[i * n_ + j];
  if (i == j) return diagonal_[i];
  const auto begin = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[i]);
  const auto end = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[i + 1]);
  auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return 0.0;
  return values_[static_cast<std::size_t>(it - cols_.begin())];
}

double TransitionMatrix::row_sum(ItemIndex i) const {
  if (storage_ == Storage::kDense) {
    return kernels::sum(std::span<const double>(dense_).subspan(i * n_, n_));
  }
  double s = diagonal_[i];
  for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) s += values_[k];
  return s;
}

void TransitionMatrix::left_multiply(std::span<const double> pi, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  if (storage_ == Storage::kDense) {
    const std::span<const double> rows(dense_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (pi[i] == 0.0) continue;
      kernels::axpy(pi[i], rows.subspan(i * n_, n_), out);
    }
    return;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    const double w = pi[i];
    out[i] += w * diagonal_[i];
    for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) {
      out[cols_[k]] += w * values_[k];
    }
  }
}

TransitionMatrix TransitionMatrix::build(const ComparisonDataset& dataset, double laplace,
                                         Storage storage) {
  if (!(laplace >= 0.0) || !std::isfinite(laplace)) {
    throw std::invalid_argument("laplace must be a finite value >= 0");
  }
  if (dataset.item_count() == 0 || dataset.pair_count() == 0) {
    throw Error("cannot build a transition matrix from an empty dataset");
  }
  TransitionMatrix m;
  m.n_ = dataset.item_count();
  m.storage_ = storage;
  const auto degrees = dataset.degrees();
  m.d_max_ = *std::max_element(degrees.begin(), degrees.end());
  const double inv_d = 1.0 / static_cast<double>(m.d_max_);

  // Move probability from i to j: share of j's wins over i.
  struct Entry {
    ItemIndex from;
    ItemIndex to;
    double value;
  };
  std::vector<Entry> entries;
  entries.reserve(2 * dataset.pair_count());
  for (const auto& p : dataset.pairs()) {
    const double wi = static_cast<double>(p.wins_i) + laplace;
    const double wj = static_cast<double>(p.wins_j) + laplace;
    const double total = wi + wj;
    if (total <= 0.0) continue;
    entries.push_back({p.i, p.j, inv_d * (wj / total)});
    entries.push_back({p.j, p.i, inv_d * (wi / total)});
  }

  const std::size_t n = m.n_;
  if (storage == Storage::kDense) {
    m.dense_.assign(n * n, 0.0);
    for (const auto& e : entries) m.dense_[e.from * n + e.to] = e.value;
    for (std::size_t i = 0; i < n; ++i) {
      double off = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) off += m.dense_[i * n + j];
      }
      m.dense_[i * n + i] = 1.0 - off;
    }
    return m;
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  m.row_start_.assign(n + 1, 0);
  m.cols_.reserve(entries.size());
  m.values_.reserve(entries.size());
  m.diagonal_.assign(n, 1.0);
  for (const auto& e : entries) {
    ++m.row_start_[e.from + 1];
    m.cols_.push_back(e.to);
    m.values_.push_back(e.value);
  }
  std::partial_sum(m.row_start_.begin(), m.row_start_.end(), m.row_start_.begin());
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t k = m.row_start_[i]; k < m.row_start_[i + 1]; ++k) off += m.values_[k];
    m.diagonal_[i] = 1.0 - off;
  }
  return m;
}

TransitionMatrix build_transition(const ComparisonDataset& dataset, double laplace) {
  const auto storage = dataset.item_count() <= kDenseTransitionLimit
                           ? TransitionMatrix::Storage::kDense
                           : TransitionMatrix::Storage::kSparse;
  return TransitionMatrix::build(dataset, laplace, storage);
}

namespace {

// Positive-entry graph of the matrix itself.
std::vector<std::vector<ItemIndex>> matrix_components(const TransitionMatrix& matrix) {
  const std::size_t n = matrix.size();
  // Reuse the dataset SCC routine: encode i -> j as "j beat i once".
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  ComparisonDataset graph = ComparisonDataset::with_items(std::move(labels));
  for (ItemIndex i = 0; i < n; ++i) {
    for (ItemIndex j = i + 1; j < n; ++j) {
      const bool forward = matrix.at(i, j) > 0.0;
      const bool backward = matrix.at(j, i) > 0.0;
      if (forward || backward) graph.add(i, j, backward ? 1 : 0, forward ? 1 : 0);
    }
  }
  return connectivity_report(graph).components;
}

std::string describe_components(const std::vector<std::vector<ItemIndex>>& components,
                                const ComparisonDataset* dataset) {
  std::ostringstream out;
  out << "transition chain is reducible: " << components.size()
      << " strongly connected components";
  const std::size_t shown = std::min<std::size_t>(components.size(), 5);
  for (std::size_t c = 0; c < shown; ++c) {
    out << (c == 0 ? ": " : "; ") << "{";
    const auto& comp = components[c];
    const std::size_t members = std::min<std::size_t>(comp.size(), 6);
    for (std::size_t k = 0; k < members; ++k) {
      if (k) out << ", ";
      if (dataset != nullptr) {
        out << dataset->label(comp[k]);
      } else {
        out << comp[k];
      }
    }
    if (comp.size() > members) out << ", ... (" << comp.size() << " items)";
    out << "}";
  }
  if (components.size() > shown) out << "; ...";
  return out.str();
}

StationaryDistribution power_iterate(const TransitionMatrix& matrix,
                                     const StationaryOptions& options) {
  const std::size_t n = matrix.size();
  StationaryDistribution result;
  std::vector<double> pi(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n, 0.0);
  for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
    matrix.left_multiply(pi, next);
    const double total = kernels::sum(next);
    kernels::scale(1.0 / total, next);
    const double change = kernels::l1_distance(next, pi);
    pi.swap(next);
    result.iterations = iter;
    result.residual = change;
    if (change < options.tol) {
      result.pi = std::move(pi);
      return result;
    }
  }
  throw ConvergenceError("power iteration did not reach L1 change " +
                         io::format_double(options.tol) + " within " +
                         std::to_string(options.max_iter) + " iterations (last change " +
                         io::format_double(result.residual) + ")");
}

void check_options(const StationaryOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (options.max_iter == 0) throw std::invalid_argument("max_iter must be positive");
}

}  // namespace

StationaryDistribution stationary_distribution(const TransitionMatrix& matrix,
                                               const StationaryOptions& options) {
  check_options(options);
  auto components = matrix_components(matrix);
  if (components.size() != 1) {
    auto what = describe_components(components, nullptr);
    throw ReducibleChainError(what, std::move(components));
  }
  return power_iterate(matrix, options);
}

StationaryDistribution rank_centrality(const ComparisonDataset& dataset, double laplace,
                                       const StationaryOptions& options) {
  check_options(options);
  auto report = connectivity_report(dataset, laplace);
  if (!report.irreducible()) {
    auto what = describe_components(report.components, &dataset);
    throw ReducibleChainError(what, std::move(report.components));
  }
  return power_iterate(build_transition(dataset, laplace), options);
}

double global_probability(std::span<const double> pi, double beta, ItemIndex i, ItemIndex j) {
  const double pi_i = pi[i];
  const double pi_j = pi[j];
  if (beta == 1.0) return pi_i / (pi_i + pi_j);
  const double a = std::pow(pi_i, beta);
  const double b = std::pow(pi_j, beta);
  const double denom = a + b;
  if (denom > 0.0 && std::isfinite(denom)) return a / denom;
  // Both powers under- or overflowed; the log form is still well defined.
  return 1.0 / (1.0 + std::exp(beta * (std::log(pi_j) - std::log(pi_i))));
}

}  // namespace ranksmooth
