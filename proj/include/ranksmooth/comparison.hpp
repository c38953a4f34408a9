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

// Pairwise comparison outcomes: items, aggregated win counts per compared
// pair, empirical preference probabilities, CSV ingestion and splitting.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ranksmooth {

using ItemIndex = std::size_t;

// Aggregated votes for one unordered pair, stored with i < j. wins_i counts
// the times i was preferred over j.
struct PairCounts {
  ItemIndex i = 0;
  ItemIndex j = 0;
  std::uint64_t wins_i = 0;
  std::uint64_t wins_j = 0;

  std::uint64_t total() const { return wins_i + wins_j; }
  bool operator==(const PairCounts&) const = default;
};

enum class Majority { kPreferI, kPreferJ, kTie };

Majority majority_label(const PairCounts& counts);

class ComparisonDataset {
 public:
  ComparisonDataset() = default;

  // Dataset over a fixed item list with no pairs yet.
  static ComparisonDataset with_items(std::vector<std::string> labels);

  // Returns the dense index of `label`, assigning the next one if new.
  ItemIndex intern(std::string_view label);

  // Adds votes for (a, b). Repeated pairs, in either orientation, are merged
  // by summing counts. Throws std::invalid_argument for a == b or an index
  // out of range.
  void add(ItemIndex a, ItemIndex b, std::uint64_t wins_a, std::uint64_t wins_b);
  void add(std::string_view a, std::string_view b, std::uint64_t wins_a,
           std::uint64_t wins_b);

  std::size_t item_count() const { return labels_.size(); }
  std::size_t pair_count() const { return pairs_.size(); }

  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(ItemIndex i) const { return labels_.at(i); }
  std::optional<ItemIndex> find_item(std::string_view label) const;

  std::span<const PairCounts> pairs() const { return pairs_; }
  const PairCounts& pair(std::size_t k) const { return pairs_.at(k); }

  // Position of the pair {a, b} in pairs(), if compared.
  std::optional<std::size_t> find_pair(ItemIndex a, ItemIndex b) const;

  // n_ab / (n_ab + n_ba). Throws std::out_of_range for an uncompared pair.
  double empirical_probability(ItemIndex a, ItemIndex b) const;

  // Number of distinct compared partners per item.
  std::vector<std::size_t> degrees() const;

  // Same items, only the pairs at the given positions (in that order).
  ComparisonDataset subset(std::span<const std::size_t> pair_positions) const;

  bool operator==(const ComparisonDataset& other) const {
    return labels_ == other.labels_ && pairs_ == other.pairs_;
  }

 private:
  static std::uint64_t key(ItemIndex i, ItemIndex j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, ItemIndex> index_;
  std::vector<PairCounts> pairs_;
  std::unordered_map<std::uint64_t, std::size_t> pair_index_;
};

// CSV with header `item_i,item_j,wins_i,wins_j`. Labels are interned in
// first-appearance order. Throws ParseError on malformed rows, negative or
// non-integer counts, self-comparisons and zero-vote rows; Error when the
// result has fewer than two items or no pairs.
ComparisonDataset load_dataset(const std::filesystem::path& path);
ComparisonDataset parse_dataset(std::istream& in, const std::string& source = "<stream>");

void write_dataset(std::ostream& out, const ComparisonDataset& dataset);
void save_dataset(const std::filesystem::path& path, const ComparisonDataset& dataset);

struct DatasetSplit {
  ComparisonDataset train;
  ComparisonDataset test;
};

// Random partition of the pairs: train receives round(train_fraction * |P|)
// of them. Both halves keep the full item list. Throws std::invalid_argument
// if either half would be empty.
DatasetSplit split(const ComparisonDataset& dataset, double train_fraction,
                   std::uint64_t seed);

// Strongly connected components of the walk graph, where i -> j whenever the
// transition probability from i to j is positive, i.e. j won at least once
// against i (or laplace > 0 adds a pseudo-count).
struct ConnectivityReport {
  std::vector<std::vector<ItemIndex>> components;
  std::vector<std::size_t> component_of;

  bool irreducible() const { return components.size() == 1; }
};

ConnectivityReport connectivity_report(const ComparisonDataset& dataset,
                                       double laplace = 0.0);

}  // namespace ranksmooth
