#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <functional>
#include <set>

#include "jordantype/partition.hpp"
#include "jordantype/random.hpp"

using namespace jt;

namespace {

// Ferrers diagram as a set of cells, transposed cell by cell.
Partition transpose_cells(const Partition& p) {
  std::map<int, int> column_heights;
  for (int r = 0; r < p.size(); ++r)
    for (int c = 0; c < p[r]; ++c) ++column_heights[c];
  std::vector<int> parts;
  for (auto [c, h] : column_heights) parts.push_back(h);
  return Partition::from_unsorted(parts);
}

bool is_ar_group(const std::vector<int>& g) {
  return *std::max_element(g.begin(), g.end()) - *std::min_element(g.begin(), g.end()) <= 1;
}

// Minimum number of almost-rectangular groups, over every assignment of
// parts to groups.
int min_ar_cover(const Partition& p) {
  const int n = p.size();
  int best = n;
  std::vector<int> label(n, 0);
  // Restricted growth strings enumerate set partitions.
  std::function<void(int, int)> rec = [&](int i, int groups) {
    if (groups >= best) return;
    if (i == n) {
      std::vector<std::vector<int>> gs(groups);
      for (int k = 0; k < n; ++k) gs[label[k]].push_back(p[k]);
      for (const auto& g : gs)
        if (!is_ar_group(g)) return;
      best = groups;
      return;
    }
    for (int g = 0; g <= groups; ++g) {
      label[i] = g;
      rec(i + 1, std::max(groups, g + 1));
    }
  };
  rec(0, 0);
  return best;
}

HilbertFunction random_hilbert(Rng& rng) {
  int len = static_cast<int>(rng.uniform_int(1, 8));
  HilbertFunction h{1};
  for (int i = 1; i < len; ++i) h.push_back(static_cast<int>(rng.uniform_int(1, 6)));
  return h;
}

bool unimodal(const HilbertFunction& h) {
  std::size_t i = 0;
  while (i + 1 < h.size() && h[i] <= h[i + 1]) ++i;
  while (i + 1 < h.size() && h[i] >= h[i + 1]) ++i;
  return i + 1 >= h.size();
}

}  // namespace

TEST(Partition, ParseAndRender) {
  EXPECT_EQ(Partition::parse("(5,3^5,2)"), Partition({5, 3, 3, 3, 3, 3, 2}));
  EXPECT_EQ(Partition::parse("()"), Partition());
  EXPECT_EQ(Partition({5, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1}).str(true),
            "(5,3^5,2^6,1^8)");
  EXPECT_EQ(Partition({7, 2}).str(), "(7,2)");
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({2, 0}), Error);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate({3, 3, 3, 2, 1, 1}), Partition({6, 4, 3}));
  EXPECT_EQ(conjugate(Partition()), Partition());
  EXPECT_EQ(conjugate({7, 2}), Partition({2, 2, 1, 1, 1, 1, 1}));
}

TEST(Partition, ConjugateMatchesCellTranspose) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(conjugate(p), transpose_cells(p));
      EXPECT_EQ(conjugate(conjugate(p)), p);
    }
}

TEST(Partition, PartitionCounts) {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(static_cast<int>(partitions_of(n).size()), counts[n]);
}

TEST(Partition, Dominance) {
  EXPECT_EQ(dominance_cmp({2, 2, 1, 1}, {3, 2, 1}), Dominance::Less);
  EXPECT_EQ(dominance_cmp({3, 3, 3}, {4, 2, 2, 1}), Dominance::Incomparable);
  EXPECT_EQ(dominance_cmp({5, 1}, {5, 1}), Dominance::Equal);
  EXPECT_EQ(dominance_cmp({3, 2, 1}, {2, 2, 1, 1}), Dominance::Greater);
  try {
    dominance_cmp({3}, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WeightMismatch);
  }
}

TEST(Partition, DominanceReversedByConjugation) {
  for (int n = 1; n <= 12; ++n) {
    auto ps = partitions_of(n);
    for (const auto& p : ps)
      for (const auto& q : ps) {
        auto d = dominance_cmp(p, q);
        auto dc = dominance_cmp(conjugate(p), conjugate(q));
        EXPECT_EQ(d == Dominance::Less, dc == Dominance::Greater);
        EXPECT_EQ(d == Dominance::Incomparable, dc == Dominance::Incomparable);
      }
  }
}

TEST(Partition, HilbertBounds) {
  EXPECT_EQ(p_of_h({1, 3, 2, 3, 3, 1}), Partition({6, 4, 3}));
  EXPECT_EQ(p_of_h({1, 3, 1, 3, 3, 2}), Partition({6, 4, 3}));
  EXPECT_EQ(p_of_h({1}), Partition({1}));
  EXPECT_EQ(sf_p_of_h({1, 3, 2, 3, 3, 1}), Partition({6, 4, 2, 1}));
  EXPECT_EQ(sf_p_of_h({1, 3, 1, 3, 3, 2}), Partition({6, 3, 2, 1, 1}));
  EXPECT_EQ(sf_p_of_h({1, 2, 2, 1}), Partition({4, 2}));
}

TEST(Partition, DegreeTypeOfHilbert) {
  EXPECT_EQ(degree_type_of_h({1, 3, 2, 3, 3, 1}), JordanDegreeType({{6, 0}, {4, 1}, {1, 1}, {2, 3}}));
  EXPECT_EQ(degree_type_of_h({1, 3, 1, 3, 3, 2}),
            JordanDegreeType({{6, 0}, {1, 1}, {1, 1}, {3, 3}, {2, 3}}));
  EXPECT_EQ(degree_type_of_h({1}), JordanDegreeType({{1, 0}}));
  EXPECT_EQ(degree_type_of_h({1, 3, 2, 3, 3, 1}).str(), "(6_0,4_1,1_1,2_3)");
  EXPECT_EQ(JordanDegreeType::parse("(6_0,5_1)"), JordanDegreeType({{5, 1}, {6, 0}}));
}

TEST(Partition, HilbertBoundProperties) {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto h = random_hilbert(rng);
    auto sf = sf_p_of_h(h);
    auto d = dominance_cmp(sf, p_of_h(h));
    EXPECT_TRUE(d == Dominance::Less || d == Dominance::Equal);
    if (unimodal(h)) EXPECT_EQ(d, Dominance::Equal) << hilbert_str(h);
    auto dt = degree_type_of_h(h);
    EXPECT_EQ(dt.partition(), sf);
    HilbertFunction beads(h.size(), 0);
    for (const auto& e : dt.entries())
      for (int i = 0; i < e.length; ++i) ++beads[e.degree + i];
    EXPECT_EQ(beads, h);
  }
}

TEST(Partition, AlmostRectangular) {
  EXPECT_EQ(almost_rectangular(7, 2), Partition({4, 3}));
  EXPECT_EQ(almost_rectangular(7, 4), Partition({2, 2, 2, 1}));
  EXPECT_EQ(almost_rectangular(9, 1), Partition({9}));
  EXPECT_THROW(almost_rectangular(2, 3), Error);
  for (int n = 1; n <= 15; ++n)
    for (int k = 1; k <= n; ++k) {
      auto p = almost_rectangular(n, k);
      EXPECT_EQ(p.weight(), n);
      EXPECT_EQ(p.size(), k);
      EXPECT_LE(p[0] - p[k - 1], 1);
    }
}

TEST(Partition, PowerPartition) {
  EXPECT_EQ(power_partition({7, 5}, 2), Partition({4, 3, 3, 2}));
  EXPECT_EQ(power_partition({7}, 3), Partition({3, 2, 2}));
  EXPECT_EQ(power_partition({3}, 1), Partition({3}));
  EXPECT_EQ(power_partition({2}, 5), Partition({1, 1}));
}

TEST(Partition, Stable) {
  EXPECT_TRUE(is_stable({5, 3}));
  EXPECT_FALSE(is_stable({2, 2}));
  EXPECT_TRUE(is_stable({8}));
  EXPECT_FALSE(is_stable({4, 3}));
}

TEST(Partition, ArCoverNumber) {
  EXPECT_EQ(ar_cover_number({2, 2}), 1);
  EXPECT_EQ(ar_cover_number({3, 1}), 2);
  EXPECT_EQ(ar_cover_number({5, 4, 2, 1}), 2);
  EXPECT_THROW(ar_cover_number(Partition()), Error);
}

TEST(Partition, ArCoverMatchesExhaustiveMinimum) {
  for (int n = 1; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      int r = ar_cover_number(p);
      EXPECT_EQ(r, min_ar_cover(p)) << p.str();
      EXPECT_EQ(r == 1, is_almost_rectangular(p));
    }
}

TEST(Partition, DominanceSum) {
  EXPECT_EQ(dominance_sum({4, 2}, {3, 2}), Partition({7, 4}));
  EXPECT_EQ(dominance_sum({3, 1}, Partition()), Partition({3, 1}));
  EXPECT_EQ(dominance_sum({1, 1}, {1, 1}), Partition({2, 2}));
}

TEST(Partition, CollapseClosure) {
  auto r = collapse_closure(JordanDegreeType({{4, 0}, {2, 4}, {2, 1}, {3, 3}}));
  EXPECT_EQ(r.closure, JordanDegreeType({{6, 0}, {5, 1}}));
  EXPECT_EQ(r.strategy, CollapseStrategy::Exhaustive);
  EXPECT_EQ(collapse_closure(JordanDegreeType({{3, 0}, {2, 5}})).closure,
            JordanDegreeType({{3, 0}, {2, 5}}));
  EXPECT_EQ(collapse_closure(JordanDegreeType({{1, 0}, {1, 1}, {1, 2}})).closure,
            JordanDegreeType({{3, 0}}));
}

TEST(Partition, CollapsePreservesWeight) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<DegreeString> entries;
    int count = static_cast<int>(rng.uniform_int(1, 16));
    for (int i = 0; i < count; ++i)
      entries.push_back({static_cast<int>(rng.uniform_int(1, 4)), static_cast<int>(rng.uniform_int(0, 6))});
    JordanDegreeType d(entries);
    auto r = collapse_closure(d);
    EXPECT_EQ(r.closure.weight(), d.weight());
    EXPECT_LE(r.closure.entries().size(), d.entries().size());
    EXPECT_EQ(r.strategy, count <= kCollapseExhaustiveLimit ? CollapseStrategy::Exhaustive
                                                            : CollapseStrategy::Greedy);
    auto cmp = dominance_cmp(d.partition(), r.closure.partition());
    EXPECT_TRUE(cmp == Dominance::Less || cmp == Dominance::Equal);
  }
}
