#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "lrdraw/lr_opt.hpp"
#include "lrdraw/worst_case.hpp"

using namespace lrdraw;

TEST(Ruler, Examples) {
  EXPECT_EQ(ruler_sequence(1), std::vector<int>{1});
  EXPECT_EQ(ruler_sequence(2), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(ruler_sequence(4), (std::vector<int>{1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1}));
}

TEST(Ruler, TwoAdicValuation) {
  for (int l = 1; l <= 12; ++l) {
    auto s = ruler_sequence(l);
    ASSERT_EQ(static_cast<int>(s.size()), (1 << l) - 1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
      int m = 2 * (i + 1), e = 0;
      while (m % 2 == 0) m /= 2, ++e;
      ASSERT_EQ(s[i], e);
    }
  }
}

TEST(Pi, Examples) {
  EXPECT_EQ(pi_sequence(1), std::vector<std::int64_t>{1});
  EXPECT_EQ(pi_sequence(4),
            (std::vector<std::int64_t>{1, 3, 1, 7, 1, 3, 1, 15, 1, 3, 1, 7, 1, 3, 1}));
}

TEST(Pi, PowerIdentity) {
  for (int l = 1; l <= 12; ++l) {
    auto s = ruler_sequence(l);
    auto p = pi_sequence(l);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t i = 0; i < s.size(); ++i) ASSERT_EQ(p[i], (std::int64_t{1} << s[i]) - 1);
  }
}

TEST(Pi, EveryWindowHasLargeElement) {
  for (int l = 1; l <= 10; ++l) {
    auto p = pi_sequence(l);
    const int len = static_cast<int>(p.size());
    for (int x = 1; x <= len; ++x)
      for (int i = 0; i + x <= len; ++i) {
        std::int64_t m = 0;
        for (int j = i; j < i + x; ++j) m = std::max(m, p[j]);
        ASSERT_GE(m, x) << "level " << l << " window " << i << "+" << x;
      }
  }
}

TEST(LowerBoundTree, Sizes) {
  EXPECT_EQ(lower_bound_tree(1).size(), 1);
  EXPECT_EQ(lower_bound_tree(2).size(), 7);
  EXPECT_EQ(lower_bound_tree(3).size(), 39);
  EXPECT_EQ(lower_bound_tree(4).size(), 207);
  for (int h = 1; h <= 6; ++h) EXPECT_EQ(lower_bound_tree(h).size(), lower_bound_tree_size(h));
}

TEST(LowerBoundTree, Sandwich) {
  for (int h = 1; h <= 5; ++h) {
    EXPECT_GE(min_width(rep_sequence(lower_bound_tree(h))), (1 << h) - 1) << h;
    EXPECT_TRUE(node_count_bound_check(h)) << h;
  }
}

TEST(LowerBoundTree, PathShape) {
  // u_1 -> v_1 (right) -> u_2 (left) -> ... alternates for 2^h - 1 nodes
  for (int h = 2; h <= 4; ++h) {
    Tree t = lower_bound_tree(h);
    int v = t.root(), count = 1;
    for (int i = 0; i < (1 << h) - 2; ++i) {
      v = i % 2 == 0 ? t.right(v) : t.left(v);
      ASSERT_NE(v, kNone);
      ++count;
    }
    EXPECT_EQ(count, (1 << h) - 1);
  }
}

TEST(ExactBound, AgainstFloatingPoint) {
  for (int h = 1; h <= 12; ++h) {
    double b = std::pow(3 + std::sqrt(5.0), h);
    auto lo = static_cast<std::int64_t>(std::floor(b * (1 - 1e-12)));
    auto hi = static_cast<std::int64_t>(std::ceil(b * (1 + 1e-12)));
    EXPECT_TRUE(within_three_plus_sqrt5_pow(lo, h));
    EXPECT_FALSE(within_three_plus_sqrt5_pow(hi + 1, h));
  }
  EXPECT_TRUE(within_three_plus_sqrt5_pow(5, 1));
  EXPECT_FALSE(within_three_plus_sqrt5_pow(6, 1));  // 3 + sqrt5 ~ 5.236
}

TEST(Embedded, SizeAndContainsLowerBound) {
  for (int e : {8, 10, 12}) {
    Tree t = embedded_lower_bound_tree(1 << e, 3);
    EXPECT_EQ(t.size(), 1 << e);
  }
  EXPECT_EQ(embedded_lower_bound_tree(5, 0).size(), 5);
  // a T_4 copy fits in 1024 / 4, so the width is at least 15
  EXPECT_GE(min_width(rep_sequence(embedded_lower_bound_tree(1024, 0))), 15);
}

TEST(Dominates, Examples) {
  EXPECT_TRUE(dominates(3, {1, 0}, 3, {1, 0}));
  EXPECT_TRUE(dominates(3, {1, 0}, 3, {0}));
  EXPECT_FALSE(dominates(3, {0}, 3, {1, 0}));
  EXPECT_FALSE(dominates(4, {5, 0}, 3, {0}));
}

namespace {
std::vector<int> random_seq(SplitMix64& rng) {
  int len = 1 + static_cast<int>(rng.below(4));
  std::vector<int> s(len);
  int v = 0;
  for (int i = len - 1; i >= 0; --i) {
    s[i] = i == len - 1 ? 0 : v + 1 + static_cast<int>(rng.below(2));
    v = s[i];
  }
  return s;
}
}  // namespace

TEST(Dominates, Preorder) {
  SplitMix64 rng(11);
  for (int it = 0; it < 20000; ++it) {
    int na = 1 + rng.below(4), nb = 1 + rng.below(4), nc = 1 + rng.below(4);
    auto a = random_seq(rng), b = random_seq(rng), c = random_seq(rng);
    ASSERT_TRUE(dominates(na, a, na, a));
    if (dominates(na, a, nb, b) && dominates(nb, b, nc, c)) ASSERT_TRUE(dominates(na, a, nc, c));
  }
}

TEST(Dominates, ImpliesWidthDomination) {
  std::vector<std::pair<int, RepSeq>> pool;
  for (int s = 0; s < 300; ++s) {
    Tree t = random_tree(1 + s % 40, s);
    pool.emplace_back(t.size(), rep_sequence(t));
  }
  for (auto& [na, a] : pool)
    for (auto& [nb, b] : pool)
      if (dominates(na, a.values, nb, b.values)) ASSERT_GE(min_width(a), min_width(b));
}

TEST(Frontier, SmallSizes) {
  Frontier f;
  EXPECT_EQ(f.max_n(), 1);
  ASSERT_EQ(f.bucket(1).size(), 1u);
  EXPECT_EQ(f.arena()[f.bucket(1)[0]].seq, std::vector<int>{0});
  f.extend_to(3);
  bool has10 = false;
  for (int id : f.bucket(3)) has10 |= f.arena()[id].seq == std::vector<int>{1, 0};
  EXPECT_TRUE(has10);
  f.extend_to(7);
  EXPECT_EQ(f.max_width_at(7), 3);
}

TEST(Frontier, Antichain) {
  Frontier f;
  f.extend_to(30);
  auto alive = f.alive();
  for (int a : alive)
    for (int b : alive) {
      if (a == b) continue;
      const auto& A = f.arena()[a];
      const auto& B = f.arena()[b];
      ASSERT_FALSE(dominates(A.n, A.seq, B.n, B.seq)) << a << " " << b;
    }
}

TEST(Frontier, WitnessesRealizeEntries) {
  Frontier f;
  f.extend_to(30);
  for (int id : f.alive()) {
    Tree w = f.witness(id);
    const auto& e = f.arena()[id];
    ASSERT_EQ(w.size(), e.n);
    ASSERT_EQ(rep_sequence(w).values, e.seq);
    ASSERT_EQ(min_width(rep_sequence(w)), e.width);
  }
}

TEST(Frontier, ExhaustiveOracleUpToEleven) {
  Frontier f;
  f.extend_to(11);
  auto alive = f.alive();
  for (int n = 1; n <= 11; ++n) {
    int maxw = 0;
    for (const Tree& t : all_trees(n)) {
      RepSeq q = rep_sequence(t);
      maxw = std::max(maxw, min_width(q));
      bool covered = false;
      for (int id : alive) {
        const auto& e = f.arena()[id];
        if (dominates(e.n, e.seq, n, q.values)) {
          covered = true;
          break;
        }
      }
      ASSERT_TRUE(covered) << serialize_tree(t);
    }
    int fw = 0;
    for (int m = 1; m <= n; ++m) fw = std::max(fw, f.max_width_at(m));
    EXPECT_EQ(fw, maxw) << n;
  }
}

TEST(Frontier, CheckpointRoundTrip) {
  Frontier f;
  f.extend_to(25);
  std::stringstream ss;
  f.save(ss);
  Frontier g = Frontier::load(ss);
  EXPECT_EQ(g.max_n(), 25);
  EXPECT_EQ(g.size(), f.size());
  EXPECT_EQ(g.min_nodes_table(), f.min_nodes_table());
  g.extend_to(35);
  f.extend_to(35);
  EXPECT_EQ(g.min_nodes_table(), f.min_nodes_table());
}

TEST(Frontier, IncrementalCheckpoint) {
  Frontier f;
  std::stringstream ss;
  f.save(ss);
  while (f.max_n() < 20) {
    auto st = f.extend();
    f.append_bucket(ss, st.n);
  }
  Frontier g = Frontier::load(ss);
  EXPECT_EQ(g.max_n(), 20);
  EXPECT_EQ(g.size(), f.size());
}

TEST(Frontier, RejectsCorruptCheckpoint) {
  std::stringstream ss("1\t0\t(..)\n# done 1\n5\t0\t(..)\n# done 3\n");
  EXPECT_ANY_THROW(Frontier::load(ss));
}

TEST(MinNodesTable, Prefixes) {
  EXPECT_EQ(min_nodes_table(3), (std::vector<std::pair<int, int>>{{1, 1}, {2, 3}}));
  auto t11 = min_nodes_table(11);
  EXPECT_EQ(t11.back(), (std::pair<int, int>{4, 11}));
  auto t47 = min_nodes_table(47);
  const auto& pub = published_min_nodes_table();
  ASSERT_EQ(t47.size(), 8u);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(t47[i], pub[i]);
}

TEST(Fit, SyntheticRecovery) {
  std::vector<std::pair<double, double>> rows;
  for (int n = 1; n <= 500; n += 13) rows.emplace_back(2 * std::sqrt(double(n)), n);
  EXPECT_NEAR(fit_power_law(rows).b, 0.5, 1e-3);

  rows.clear();
  for (int n = 1; n <= 500; n += 7) rows.emplace_back(1.54 * std::pow(n, 0.443) - 0.55, n);
  PowerFit p = fit_power_law(rows);
  EXPECT_NEAR(p.a, 1.54, 1e-2);
  EXPECT_NEAR(p.b, 0.443, 1e-2);
  EXPECT_NEAR(p.c, -0.55, 1e-2);
}

TEST(Fit, PublishedRows) {
  std::vector<std::pair<int, int>> rows(published_min_nodes_table().begin(),
                                        published_min_nodes_table().begin() + 10);
  PowerFit p = fit_power_law(rows);
  EXPECT_GE(p.b, 0.40);
  EXPECT_LE(p.b, 0.50);
}

TEST(Fit, Rejects) {
  EXPECT_THROW(fit_power_law(std::vector<std::pair<int, int>>{{1, 1}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(fit_power_law(std::vector<std::pair<int, int>>{{1, 5}, {2, 5}, {3, 5}, {4, 5}}),
               std::invalid_argument);
}
