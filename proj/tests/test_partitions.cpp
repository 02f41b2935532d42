#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "meander/errors.hpp"
#include "meander/partitions.hpp"

using namespace meander;

namespace {

PairPartition pp(std::vector<std::pair<int, int>> pairs) { return PairPartition::from_pairs(std::move(pairs)); }

// Non-crossing matchings of {lo..hi}: lo pairs with some k leaving both sides even.
void nc_oracle(int lo, int hi, std::vector<std::pair<int, int>>& acc, std::vector<std::vector<std::pair<int, int>>>& out) {
  if (lo > hi) {
    out.push_back(acc);
    return;
  }
  for (int k = lo + 1; k <= hi; k += 2) {
    acc.emplace_back(lo, k);
    std::vector<std::vector<std::pair<int, int>>> inner;
    std::vector<std::pair<int, int>> tmp;
    nc_oracle(lo + 1, k - 1, tmp, inner);
    for (auto& in : inner) {
      auto base = acc;
      base.insert(base.end(), in.begin(), in.end());
      nc_oracle(k + 1, hi, base, out);
    }
    acc.pop_back();
  }
}

// Connected components of the graph whose edges are the pairs of both matchings.
int bfs_components(const PairPartition& a, const PairPartition& b) {
  const int m = a.ground_size();
  std::vector<std::vector<int>> adj(m + 1);
  for (const auto* p : {&a, &b}) {
    for (auto [x, y] : p->pairs()) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
  }
  std::vector<bool> seen(m + 1, false);
  int comps = 0;
  for (int s = 1; s <= m; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<int> todo;
    todo.push(s);
    seen[s] = true;
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          todo.push(w);
        }
      }
    }
  }
  return comps;
}

int crossings_oracle(const PairPartition& pi) {
  int c = 0;
  const auto& ps = pi.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (ps[i].first < ps[j].first && ps[j].first < ps[i].second && ps[i].second < ps[j].second) ++c;
    }
  }
  return c;
}

SetPartition random_partition(std::mt19937& rng, int m) {
  std::vector<int> labels(m);
  std::uniform_int_distribution<int> dist(0, m / 2);
  for (int& l : labels) l = dist(rng);
  return SetPartition::from_labels(labels);
}

Permutation random_permutation(std::mt19937& rng, int m) {
  std::vector<int> images(m);
  for (int i = 0; i < m; ++i) images[i] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

const PairPartition kSample = pp({{1, 9}, {2, 7}, {3, 10}, {4, 5}, {6, 8}});

}  // namespace

TEST(PairPartitions, CanonicalizesOnConstruction) {
  auto a = pp({{9, 1}, {5, 4}, {2, 7}, {8, 6}, {3, 10}});
  EXPECT_EQ(a, kSample);
  EXPECT_EQ(a.pairs().front(), std::make_pair(1, 9));
  EXPECT_EQ(a.partner(10), 3);
}

TEST(PairPartitions, RejectsNonMatchings) {
  EXPECT_THROW(pp({{1, 2}, {2, 3}}), DomainError);
  EXPECT_THROW(pp({{1, 3}}), DomainError);
}

TEST(PairPartitions, EnumerationCountsAndOrder) {
  auto one = enumerate_pair_partitions(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], pp({{1, 2}}));
  for (int n = 1; n <= 7; ++n) {
    long long count = 0;
    std::set<std::vector<std::pair<int, int>>> seen;
    for_each_pair_partition(n, [&](const PairPartition& pi) {
      ++count;
      if (n <= 5) seen.insert(pi.pairs());
    });
    EXPECT_EQ(count, double_factorial_odd(n)) << n;
    if (n <= 5) EXPECT_EQ(static_cast<long long>(seen.size()), count);
  }
  auto five = enumerate_pair_partitions(5);
  EXPECT_EQ(std::count(five.begin(), five.end(), kSample), 1);
  // Smallest unpaired element is matched with larger partners in increasing order.
  auto two = enumerate_pair_partitions(2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0], pp({{1, 2}, {3, 4}}));
  EXPECT_EQ(two[1], pp({{1, 3}, {2, 4}}));
  EXPECT_EQ(two[2], pp({{1, 4}, {2, 3}}));
}

TEST(PairPartitions, CapIsEnforced) {
  EXPECT_THROW(enumerate_pair_partitions(9), SizeLimitError);
  EXPECT_THROW(enumerate_pair_partitions(3, 4), SizeLimitError);
  EXPECT_THROW(enumerate_noncrossing(9), SizeLimitError);
}

TEST(PairPartitions, NoncrossingMatchesIndependentGenerator) {
  auto two = enumerate_noncrossing(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], pp({{1, 2}, {3, 4}}));
  EXPECT_EQ(two[1], pp({{1, 4}, {2, 3}}));
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::vector<std::pair<int, int>>> oracle;
    std::vector<std::pair<int, int>> acc;
    nc_oracle(1, 2 * n, acc, oracle);
    std::set<PairPartition> expected;
    for (auto& pairs : oracle) expected.insert(pp(pairs));
    auto got = enumerate_noncrossing(n);
    EXPECT_EQ(static_cast<long long>(got.size()), catalan(n));
    EXPECT_EQ(std::set<PairPartition>(got.begin(), got.end()), expected);
  }
  EXPECT_EQ(enumerate_noncrossing(5).size(), 42u);
}

TEST(Crossings, Examples) {
  EXPECT_EQ(crossings(pp({{1, 2}, {3, 4}})), 0);
  EXPECT_EQ(crossings(kSample), 3);
  EXPECT_EQ(crossings(pp({{1, 3}, {2, 9}, {4, 6}, {5, 8}, {7, 10}})), 4);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(crossings(rainbow(2 * n)), 0);
}

TEST(Crossings, AgreesWithOracleAndReversal) {
  for (int n = 1; n <= 5; ++n) {
    for_each_pair_partition(n, [&](const PairPartition& pi) {
      EXPECT_EQ(crossings(pi), crossings_oracle(pi));
      std::vector<std::pair<int, int>> rev;
      for (auto [a, b] : pi.pairs()) rev.emplace_back(2 * n + 1 - b, 2 * n + 1 - a);
      EXPECT_EQ(crossings(pp(rev)), crossings(pi));
    });
  }
  for (int n = 1; n <= 6; ++n) {
    auto list = enumerate_noncrossing(n);
    std::set<PairPartition> ncs(list.begin(), list.end());
    for_each_pair_partition(n, [&](const PairPartition& pi) { EXPECT_EQ(crossings(pi) == 0, ncs.count(pi) == 1); });
  }
}

TEST(Join, Examples) {
  auto rho = SetPartition::from_pair_partition(rainbow(8));
  auto sigma = SetPartition::from_pair_partition(pp({{1, 8}, {2, 3}, {4, 7}, {5, 6}}));
  auto j = join(rho, sigma);
  EXPECT_EQ(j, SetPartition::from_blocks(8, {{1, 8}, {2, 3, 4, 5, 6, 7}}));
  EXPECT_EQ(block_count(j), 2);
  auto a = SetPartition::from_pair_partition(pp({{1, 2}, {3, 4}}));
  auto b = SetPartition::from_pair_partition(pp({{2, 3}, {1, 4}}));
  EXPECT_EQ(join(a, b).block_count(), 1);
  EXPECT_EQ(join(a, a), a);
  EXPECT_THROW(join(a, rho), DimensionError);
}

TEST(Join, BlockCountMatchesGraphComponents) {
  for (int n = 1; n <= 4; ++n) {
    auto all = enumerate_pair_partitions(n);
    for (const auto& a : all) {
      for (const auto& b : all) EXPECT_EQ(join_block_count(a, b), bfs_components(a, b));
    }
  }
}

TEST(Join, LatticeLaws) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + trial % 12;
    auto p = random_partition(rng, m);
    auto q = random_partition(rng, m);
    auto r = random_partition(rng, m);
    EXPECT_EQ(join(p, q), join(q, p));
    EXPECT_EQ(join(join(p, q), r), join(p, join(q, r)));
    EXPECT_EQ(join(p, p), p);
    EXPECT_TRUE(p.refines(join(p, q)));
    auto s = random_permutation(rng, m);
    EXPECT_EQ(act(s, join(p, q)), join(act(s, p), act(s, q)));
  }
}

TEST(BlockCount, Basics) {
  EXPECT_EQ(block_count(SetPartition::from_blocks(1, {{1}})), 1);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(block_count(SetPartition::from_pair_partition(rainbow(2 * n))), n);
}

TEST(Rainbow, ShapesAndParity) {
  EXPECT_EQ(rainbow(2), pp({{1, 2}}));
  EXPECT_EQ(rainbow(8), pp({{1, 8}, {2, 7}, {3, 6}, {4, 5}}));
  EXPECT_THROW(rainbow(7), ParityError);
  EXPECT_EQ(interval_pairs(4), pp({{1, 2}, {3, 4}}));
  EXPECT_EQ(interval_pairs(10).n(), 5);
  EXPECT_THROW(interval_pairs(5), ParityError);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(act(labels_to_heights(n), rainbow(2 * n)), interval_pairs(2 * n));
}

TEST(LabelsToHeights, Values) {
  EXPECT_EQ(labels_to_heights(1), Permutation::identity(2));
  EXPECT_EQ(labels_to_heights(5).images(), (std::vector<int>{1, 3, 5, 7, 9, 10, 8, 6, 4, 2}));
  for (int n = 1; n <= 8; ++n) {
    auto imgs = labels_to_heights(n).images();
    std::sort(imgs.begin(), imgs.end());
    for (int k = 0; k < 2 * n; ++k) EXPECT_EQ(imgs[k], k + 1);
  }
}

TEST(SidePatternPermutation, Examples) {
  using S = Side;
  std::vector<Side> alt;
  for (int i = 0; i < 10; ++i) alt.push_back(i % 2 == 0 ? S::left : S::right);
  EXPECT_EQ(side_pattern_permutation(alt), labels_to_heights(5));
  std::vector<Side> chi{S::right, S::left, S::left, S::right, S::left, S::left, S::right, S::right, S::left, S::left};
  EXPECT_EQ(side_pattern_permutation(chi).images(), (std::vector<int>{2, 3, 5, 6, 9, 10, 8, 7, 4, 1}));
  EXPECT_EQ(side_pattern_permutation(std::vector<Side>(6, S::left)), Permutation::identity(6));
}

TEST(Act, Examples) {
  EXPECT_EQ(act(labels_to_heights(5), kSample), pp({{1, 4}, {2, 5}, {3, 8}, {6, 10}, {7, 9}}));
  EXPECT_EQ(act(Permutation::identity(10), kSample), kSample);
  EXPECT_THROW(act(Permutation::identity(4), kSample), DimensionError);
}

TEST(Kernel, LevelSets) {
  EXPECT_EQ(kernel(IndexTuple::make(3, {2, 2, 2})).block_count(), 1);
  EXPECT_EQ(kernel(IndexTuple::make(4, {1, 2, 3, 4})).block_count(), 4);
  EXPECT_EQ(kernel(IndexTuple::make(2, {1, 2, 1, 2})), SetPartition::from_blocks(4, {{1, 3}, {2, 4}}));
  EXPECT_THROW(IndexTuple::make(2, {1, 3}), RangeError);
}

TEST(Json, RoundTrip) {
  nlohmann::json j = kSample;
  EXPECT_EQ(j.dump(), "[[1,9],[2,7],[3,10],[4,5],[6,8]]");
  EXPECT_EQ(pair_partition_from_json(j), kSample);
  nlohmann::json s = SetPartition::from_blocks(3, {{1, 3}, {2}});
  EXPECT_EQ(s.dump(), "[[1,3],[2]]");
}
