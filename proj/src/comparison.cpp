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

#include "ranksmooth/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "ranksmooth/error.hpp"
#include "ranksmooth/io.hpp"
#include "ranksmooth/seed.hpp"

namespace ranksmooth {

namespace {
constexpr std::string_view kHeader = "item_i,item_j,wins_i,wins_j";
}  // namespace

Majority majority_label(const PairCounts& counts) {
  if (counts.wins_i > counts.wins_j) return Majority::kPreferI;
  if (counts.wins_j > counts.wins_i) return Majority::kPreferJ;
  return Majority::kTie;
}

ComparisonDataset ComparisonDataset::with_items(std::vector<std::string> labels) {
  ComparisonDataset dataset;
  for (const auto& label : labels) {
    if (dataset.find_item(label)) {
      throw std::invalid_argument("duplicate item label: " + label);
    }
    dataset.intern(label);
  }
  return dataset;
}

ItemIndex ComparisonDataset::intern(std::string_view label) {
  auto it = index_.find(std::string(label));
  if (it != index_.end()) return it->second;
  const ItemIndex idx = labels_.size();
  labels_.emplace_back(label);
  index_.emplace(labels_.back(), idx);
  return idx;
}

void ComparisonDataset::add(ItemIndex a, ItemIndex b, std::uint64_t wins_a,
                            std::uint64_t wins_b) {
  if (a == b) throw std::invalid_argument("self-comparison of item " + std::to_string(a));
  if (a >= labels_.size() || b >= labels_.size()) {
    throw std::invalid_argument("item index out of range");
  }
  if (a > b) {
    std::swap(a, b);
    std::swap(wins_a, wins_b);
  }
  const std::uint64_t k = key(a, b);
  auto it = pair_index_.find(k);
  if (it == pair_index_.end()) {
    pair_index_.emplace(k, pairs_.size());
    pairs_.push_back({a, b, wins_a, wins_b});
  } else {
    PairCounts& p = pairs_[it->second];
    p.wins_i += wins_a;
    p.wins_j += wins_b;
  }
}

void ComparisonDataset::add(std::string_view a, std::string_view b, std::uint64_t wins_a,
                            std::uint64_t wins_b) {
  if (a == b) throw std::invalid_argument("self-comparison of item " + std::string(a));
  const ItemIndex ia = intern(a);
  const ItemIndex ib = intern(b);
  add(ia, ib, wins_a, wins_b);
}

std::optional<ItemIndex> ComparisonDataset::find_item(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ComparisonDataset::find_pair(ItemIndex a, ItemIndex b) const {
  if (a > b) std::swap(a, b);
  auto it = pair_index_.find(key(a, b));
  if (it == pair_index_.end()) return std::nullopt;
  return it->second;
}

double ComparisonDataset::empirical_probability(ItemIndex a, ItemIndex b) const {
  auto pos = find_pair(a, b);
  if (!pos) {
    throw std::out_of_range("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") was not compared");
  }
  const PairCounts& p = pairs_[*pos];
  const double total = static_cast<double>(p.total());
  if (a == p.i) return static_cast<double>(p.wins_i) / total;
  // 1 - p_ij would not be exact in floating point; divide directly.
  return static_cast<double>(p.wins_j) / total;
}

std::vector<std::size_t> ComparisonDataset::degrees() const {
  std::vector<std::size_t> deg(labels_.size(), 0);
  for (const auto& p : pairs_) {
    ++deg[p.i];
    ++deg[p.j];
  }
  return deg;
}

ComparisonDataset ComparisonDataset::subset(
    std::span<const std::size_t> pair_positions) const {
  ComparisonDataset out;
  out.labels_ = labels_;
  out.index_ = index_;
  out.pairs_.reserve(pair_positions.size());
  for (std::size_t pos : pair_positions) {
    const PairCounts& p = pairs_.at(pos);
    out.add(p.i, p.j, p.wins_i, p.wins_j);
  }
  return out;
}

ComparisonDataset parse_dataset(std::istream& in, const std::string& source) {
  ComparisonDataset dataset;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = io::trim(line);
    if (view.empty()) continue;
    if (!have_header) {
      if (view != kHeader) {
        throw ParseError(source, line_no,
                         "expected header '" + std::string(kHeader) + "'");
      }
      have_header = true;
      continue;
    }
    auto fields = io::split_fields(view);
    if (fields.size() != 4) {
      throw ParseError(source, line_no,
                       "expected 4 fields, got " + std::to_string(fields.size()));
    }
    const std::string_view a = fields[0];
    const std::string_view b = fields[1];
    if (a.empty() || b.empty()) throw ParseError(source, line_no, "empty item label");
    if (a == b) throw ParseError(source, line_no, "self-comparison of '" + std::string(a) + "'");
    std::uint64_t wins_a = 0;
    std::uint64_t wins_b = 0;
    if (!io::parse_uint(fields[2], wins_a) || !io::parse_uint(fields[3], wins_b)) {
      throw ParseError(source, line_no, "wins must be non-negative integers");
    }
    if (wins_a + wins_b == 0) throw ParseError(source, line_no, "pair has zero votes");
    dataset.add(a, b, wins_a, wins_b);
  }
  if (!have_header) throw ParseError(source, line_no, "missing header");
  if (dataset.item_count() < 2 || dataset.pair_count() == 0) {
    throw Error(source + ": empty dataset (need at least 2 items and 1 pair)");
  }
  return dataset;
}

ComparisonDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_dataset(in, path.string());
}

void write_dataset(std::ostream& out, const ComparisonDataset& dataset) {
  out << kHeader << '\n';
  for (const auto& p : dataset.pairs()) {
    out << dataset.label(p.i) << ',' << dataset.label(p.j) << ',' << p.wins_i << ','
        << p.wins_j << '\n';
  }
}

void save_dataset(const std::filesystem::path& path, const ComparisonDataset& dataset) {
  io::write_file_atomic(path, [&](std::ostream& out) { write_dataset(out, dataset); });
}

DatasetSplit split(const ComparisonDataset& dataset, double train_fraction,
                   std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw std::invalid_argument("train fraction must lie in (0, 1)");
  }
  const std::size_t n = dataset.pair_count();
  const auto n_train =
      static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
  if (n_train == 0 || n_train >= n) {
    throw std::invalid_argument("train fraction " + io::format_double(train_fraction) +
                                " leaves an empty split of " + std::to_string(n) +
                                " pairs");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::span<const std::size_t> all(order);
  return {dataset.subset(all.first(n_train)), dataset.subset(all.subspan(n_train))};
}

ConnectivityReport connectivity_report(const ComparisonDataset& dataset, double laplace) {
  const std::size_t n = dataset.item_count();
  std::vector<std::vector<ItemIndex>> adj(n);
  for (const auto& p : dataset.pairs()) {
    // The walk leaves i toward j in proportion to j's wins over i.
    if (static_cast<double>(p.wins_j) + laplace > 0.0) adj[p.i].push_back(p.j);
    if (static_cast<double>(p.wins_i) + laplace > 0.0) adj[p.j].push_back(p.i);
  }

  // Iterative Tarjan.
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<ItemIndex> stack;
  std::vector<std::pair<ItemIndex, std::size_t>> call;
  std::size_t counter = 0;
  ConnectivityReport report;
  report.component_of.assign(n, 0);

  for (ItemIndex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (next < adj[v].size()) {
        const ItemIndex w = adj[v][next++];
        if (index[w] == kUnvisited) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<ItemIndex> component;
        ItemIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        report.components.push_back(std::move(component));
      }
      const ItemIndex finished = v;
      call.pop_back();
      if (!call.empty()) {
        ItemIndex parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }

  std::sort(report.components.begin(), report.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    for (ItemIndex v : report.components[c]) report.component_of[v] = c;
  }
  return report;
}

}  // namespace ranksmooth
