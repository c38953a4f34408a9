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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <sstream>

#include "ranksmooth/btl.hpp"
#include "ranksmooth/comparison.hpp"
#include "ranksmooth/error.hpp"
#include "ranksmooth/seed.hpp"
#include "test_util.hpp"

using namespace ranksmooth;

namespace {

ComparisonDataset parse(const std::string& text) {
  std::istringstream in(text);
  return parse_dataset(in, "test.csv");
}

const std::string kHeader = "item_i,item_j,wins_i,wins_j\n";

}  // namespace

TEST_CASE("load interns labels in first-appearance order") {
  const auto ds = parse(kHeader + "a,b,3,2\na,c,5,0\n");
  CHECK(ds.item_count() == 3);
  CHECK(ds.pair_count() == 2);
  CHECK(ds.label(0) == "a");
  CHECK(ds.label(1) == "b");
  CHECK(ds.label(2) == "c");
  CHECK(ds.pair(0) == PairCounts{0, 1, 3, 2});
  CHECK(ds.pair(1) == PairCounts{0, 2, 5, 0});
}

TEST_CASE("duplicate pairs merge across orientations") {
  const auto ds = parse(kHeader + "a,b,3,2\nb,a,1,1\n");
  REQUIRE(ds.pair_count() == 1);
  CHECK(ds.pair(0) == PairCounts{0, 1, 4, 3});
}

TEST_CASE("reversed first row is stored canonically") {
  const auto ds = parse(kHeader + "b,a,1,4\n");
  // b is interned first, so b = 0 and a = 1.
  CHECK(ds.pair(0) == PairCounts{0, 1, 1, 4});
  CHECK(ds.empirical_probability(*ds.find_item("a"), *ds.find_item("b")) == doctest::Approx(0.8));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse(kHeader + "a,a,1,0\n"), ParseError);
  CHECK_THROWS_AS(parse(kHeader + "a,b,-1,2\n"), ParseError);
  CHECK_THROWS_AS(parse(kHeader + "a,b,1.5,2\n"), ParseError);
  CHECK_THROWS_AS(parse(kHeader + "a,b,1\n"), ParseError);
  CHECK_THROWS_AS(parse(kHeader + "a,b,1,2,3\n"), ParseError);
  CHECK_THROWS_AS(parse(kHeader + ",b,1,2\n"), ParseError);
  CHECK_THROWS_AS(parse(kHeader + "a,b,0,0\n"), ParseError);
  CHECK_THROWS_AS(parse("a,b,1,2\n"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse(kHeader), Error);

  try {
    parse(kHeader + "a,b,1,2\nc,d,x,1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("empirical probability") {
  const auto ds = parse(kHeader + "a,b,3,2\nc,d,4,4\ne,f,5,0\n");
  CHECK(ds.empirical_probability(0, 1) == 0.6);
  CHECK(ds.empirical_probability(1, 0) == 0.4);
  CHECK(ds.empirical_probability(2, 3) == 0.5);
  CHECK(ds.empirical_probability(4, 5) == 1.0);
  CHECK(ds.empirical_probability(5, 4) == 0.0);
  CHECK_THROWS_AS(ds.empirical_probability(0, 2), std::out_of_range);
}

TEST_CASE("ties give one half for any count") {
  for (std::uint64_t k = 1; k <= 50; ++k) {
    auto ds = ComparisonDataset::with_items({"x", "y"});
    ds.add(0, 1, k, k);
    CHECK(ds.empirical_probability(0, 1) == 0.5);
  }
}

TEST_CASE("empirical probabilities are exactly antisymmetric") {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t total = 1 + rng() % 500;
    const std::uint64_t wins = rng() % (total + 1);
    auto ds = ComparisonDataset::with_items({"x", "y"});
    ds.add(0, 1, wins, total - wins);
    CHECK(ds.empirical_probability(0, 1) + ds.empirical_probability(1, 0) == 1.0);
  }
}

TEST_CASE("majority label") {
  CHECK(majority_label({0, 1, 3, 2}) == Majority::kPreferI);
  CHECK(majority_label({0, 1, 2, 2}) == Majority::kTie);
  CHECK(majority_label({0, 1, 0, 5}) == Majority::kPreferJ);
}

TEST_CASE("save then load is idempotent") {
  testing::TempDir dir;
  const auto data = simulate(PowerLawConfig{}, {40, 0.3, 4, 17});
  const auto& original = data.study.dataset;
  const auto first = dir / "first.csv";
  save_dataset(first, original);
  const auto reloaded = load_dataset(first);
  const auto second = dir / "second.csv";
  save_dataset(second, reloaded);
  const auto again = load_dataset(second);
  CHECK(again == reloaded);
  CHECK(reloaded.pair_count() == original.pair_count());
  // Labels may be re-interned in file order, but every pair survives.
  for (const auto& p : original.pairs()) {
    const auto i = reloaded.find_item(original.label(p.i));
    const auto j = reloaded.find_item(original.label(p.j));
    REQUIRE(i);
    REQUIRE(j);
    CHECK(reloaded.empirical_probability(*i, *j) == original.empirical_probability(p.i, p.j));
  }
}

TEST_CASE("split partitions pairs deterministically") {
  auto ds = ComparisonDataset::with_items(item_labels(30));
  Rng rng(3);
  std::size_t added = 0;
  for (ItemIndex i = 0; i < 30 && added < 100; ++i) {
    for (ItemIndex j = i + 1; j < 30 && added < 100; ++j, ++added) ds.add(i, j, 1 + rng() % 3, rng() % 3);
  }
  REQUIRE(ds.pair_count() == 100);

  const auto a = split(ds, 0.95, 42);
  CHECK(a.train.pair_count() == 95);
  CHECK(a.test.pair_count() == 5);
  CHECK(a.train.item_count() == 30);
  CHECK(a.test.item_count() == 30);

  std::set<std::pair<ItemIndex, ItemIndex>> seen;
  for (const auto* half : {&a.train, &a.test}) {
    for (const auto& p : half->pairs()) {
      CHECK(seen.insert({p.i, p.j}).second);
      const auto orig = ds.find_pair(p.i, p.j);
      REQUIRE(orig);
      CHECK(ds.pair(*orig) == p);
    }
  }
  CHECK(seen.size() == 100);

  const auto b = split(ds, 0.95, 42);
  CHECK(a.train == b.train);
  CHECK(a.test == b.test);
  const auto c = split(ds, 0.95, 43);
  CHECK_FALSE(c.test == a.test);
}

TEST_CASE("split edge cases") {
  auto ds = ComparisonDataset::with_items({"a", "b", "c"});
  ds.add(0, 1, 1, 0);
  ds.add(1, 2, 1, 0);
  const auto s = split(ds, 0.5, 1);
  CHECK(s.train.pair_count() == 1);
  CHECK(s.test.pair_count() == 1);
  CHECK_THROWS_AS(split(ds, 0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(split(ds, 0.9, 1), std::invalid_argument);
  CHECK_THROWS_AS(split(ds, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(split(ds, 0.0, 1), std::invalid_argument);
}

TEST_CASE("connectivity report") {
  SUBCASE("complete graph with positive counts is one component") {
    auto ds = ComparisonDataset::with_items(item_labels(6));
    for (ItemIndex i = 0; i < 6; ++i)
      for (ItemIndex j = i + 1; j < 6; ++j) ds.add(i, j, 2, 1);
    CHECK(connectivity_report(ds).irreducible());
  }
  SUBCASE("two disjoint cliques") {
    auto ds = ComparisonDataset::with_items(item_labels(6));
    for (ItemIndex i = 0; i < 3; ++i)
      for (ItemIndex j = i + 1; j < 3; ++j) ds.add(i, j, 1, 1);
    for (ItemIndex i = 3; i < 6; ++i)
      for (ItemIndex j = i + 1; j < 6; ++j) ds.add(i, j, 1, 1);
    const auto report = connectivity_report(ds);
    CHECK(report.components.size() >= 2);
    CHECK(report.component_of[0] != report.component_of[3]);
  }
  SUBCASE("unanimous 3-cycle is strongly connected") {
    auto ds = parse(kHeader + "a,b,5,0\nb,c,5,0\nc,a,5,0\n");
    const auto report = connectivity_report(ds);
    CHECK(report.components.size() == 1);
  }
  SUBCASE("a unanimous chain is not, until a pseudo-count is added") {
    auto ds = parse(kHeader + "a,b,5,0\nb,c,5,0\n");
    const auto report = connectivity_report(ds);
    CHECK(report.components.size() == 3);
    CHECK(connectivity_report(ds, 0.5).irreducible());
  }
  SUBCASE("items with no comparisons are their own component") {
    auto ds = ComparisonDataset::with_items({"a", "b", "lonely"});
    ds.add(0, 1, 1, 1);
    CHECK(connectivity_report(ds).components.size() == 2);
  }
}

TEST_CASE("Monte Carlo: empirical probability is unbiased") {
  const std::uint64_t n_t = 7;
  const std::size_t replicates = 20000;
  for (double p : {0.1, 0.35, 0.5, 0.8}) {
    Rng rng(derive_seed(99, {key_of(p)}));
    double sum = 0.0;
    for (std::size_t m = 0; m < replicates; ++m) {
      std::uint64_t wins = 0;
      for (std::uint64_t t = 0; t < n_t; ++t) wins += uniform01(rng) < p;
      auto ds = ComparisonDataset::with_items({"x", "y"});
      ds.add(0, 1, wins, n_t - wins);
      sum += ds.empirical_probability(0, 1);
    }
    const double mean = sum / replicates;
    const double bound = 4.0 * std::sqrt(p * (1 - p) / (n_t * static_cast<double>(replicates)));
    CHECK(std::fabs(mean - p) <= bound);
  }
}
