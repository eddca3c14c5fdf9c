#include <gtest/gtest.h>

#include <algorithm>

#include "lrdraw/lr_opt.hpp"
#include "lrdraw/verify.hpp"
#include "lrdraw/worst_case.hpp"

using namespace lrdraw;

namespace {

// Width of the LR-drawing obtained from a rule bitmask, computed directly from
// the rule semantics without any layout: the left rule puts the left subtree
// to the left and aligns the right subtree below the root.
struct Box {
  int lw = 0, rw = 0;
};

Box rule_box(const Tree& t, int v, const std::vector<Rule>& rules) {
  Box b;
  int l = t.left(v), r = t.right(v);
  Box L = l == kNone ? Box{} : rule_box(t, l, rules);
  Box R = r == kNone ? Box{} : rule_box(t, r, rules);
  int wl = l == kNone ? 0 : L.lw + L.rw + 1;
  int wr = r == kNone ? 0 : R.lw + R.rw + 1;
  if (rules[v] == Rule::Left) {
    b.lw = std::max(wl, r == kNone ? 0 : R.lw);
    b.rw = r == kNone ? 0 : R.rw;
  } else {
    b.rw = std::max(wr, l == kNone ? 0 : L.rw);
    b.lw = l == kNone ? 0 : L.lw;
  }
  return b;
}

// Pareto set of (left width, right width) pairs over every rule assignment.
RepSeq oracle_sequence(const Tree& t) {
  const int n = t.size();
  std::vector<int> best(n + 1, 1 << 30);
  std::vector<int> internal;
  for (int v = 0; v < n; ++v)
    if (!t.is_leaf(v)) internal.push_back(v);
  std::vector<Rule> rules(n, Rule::Left);
  for (std::uint32_t m = 0; m < (1u << internal.size()); ++m) {
    for (std::size_t i = 0; i < internal.size(); ++i)
      rules[internal[i]] = (m >> i & 1) ? Rule::Right : Rule::Left;
    Box b = rule_box(t, t.root(), rules);
    best[b.lw] = std::min(best[b.lw], b.rw);
  }
  for (int i = 1; i <= n; ++i) best[i] = std::min(best[i], best[i - 1]);
  RepSeq s;
  for (int i = 0; i <= n; ++i) {
    s.values.push_back(best[i]);
    if (best[i] == 0) break;
  }
  return s;
}

}  // namespace

TEST(RepSeq, PathsAreZero) {
  for (int s = 0; s < 50; ++s) {
    std::vector<Node> nodes(1 + s % 20);
    for (int v = 0; v + 1 < static_cast<int>(nodes.size()); ++v) {
      if ((s >> (v % 5)) & 1) nodes[v].left = v + 1;
      else nodes[v].right = v + 1;
    }
    EXPECT_EQ(rep_sequence(Tree(nodes, 0)).values, std::vector<int>{0});
  }
}

TEST(RepSeq, LowerBoundTreeThree) {
  EXPECT_EQ(rep_sequence(lower_bound_tree(3)).values, (std::vector<int>{6, 5, 5, 3, 3, 1, 0}));
}

TEST(RepSeq, CompleteTrees) {
  EXPECT_EQ(rep_sequence(complete_tree(3)).values, (std::vector<int>{2, 2, 0}));
  for (int h = 1; h <= 10; ++h) {
    std::vector<int> want(h, h);
    want.push_back(0);
    EXPECT_EQ(rep_sequence(complete_tree(h + 1)).values, want);
  }
}

TEST(RepSeq, MatchesRuleEnumerationOracle) {
  for (int n = 1; n <= 8; ++n)
    for (const Tree& t : all_trees(n)) ASSERT_EQ(rep_sequence(t), oracle_sequence(t)) << serialize_tree(t);
  for (int s = 0; s < 300; ++s) {
    Tree t = random_tree(9 + s % 6, s);
    ASSERT_EQ(rep_sequence(t), oracle_sequence(t)) << serialize_tree(t);
  }
}

TEST(RepSeq, LibraryBruteForceAgreesWithOracle) {
  for (int s = 0; s < 200; ++s) {
    Tree t = random_tree(1 + s % 13, s);
    ASSERT_EQ(brute_force_rep_sequence(t), oracle_sequence(t));
  }
}

TEST(RepSeq, SequenceInvariants) {
  for (int s = 0; s < 1000; ++s) {
    Tree t = random_tree(1 + s % 300, s);
    RepSeq q = rep_sequence(t);
    ASSERT_GE(q.size(), 1);
    ASSERT_EQ(q.values.back(), 0);
    for (int i = 0; i + 1 < q.size(); ++i) ASSERT_GE(q.values[i], q.values[i + 1]) << "increasing";
  }
}

TEST(RepSeq, TwoCopiesOfT) {
  for (int s = 0; s < 200; ++s) {
    Tree t = random_tree(1 + s % 60, s);
    int w = min_width(rep_sequence(t));
    std::vector<int> want(w, w);
    want.push_back(0);
    EXPECT_EQ(rep_sequence(join(t, t)).values, want);
  }
}

TEST(MinWidth, Examples) {
  EXPECT_EQ(min_width(RepSeq{{0}}), 1);
  EXPECT_EQ(min_width(RepSeq{{6, 5, 5, 3, 3, 1, 0}}), 7);
  EXPECT_EQ(min_width(RepSeq{{2, 2, 0}}), 3);
  EXPECT_EQ(min_width_index(RepSeq{{6, 5, 5, 3, 3, 1, 0}}), 0);
  EXPECT_EQ(min_width(rep_sequence(complete_tree(4))), 4);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_min_width(single_node()), 1);
  EXPECT_EQ(brute_force_min_width(complete_tree(2)), 2);
  EXPECT_THROW(brute_force_min_width(complete_tree(6)), std::invalid_argument);
}

TEST(BruteForce, EquivalenceSmall) {
  for (int n = 1; n <= 7; ++n)
    for (const Tree& t : all_trees(n)) ASSERT_EQ(min_width(rep_sequence(t)), brute_force_min_width(t));
  for (int s = 0; s < 500; ++s) {
    Tree t = random_tree(1 + s % 13, s);
    ASSERT_EQ(min_width(rep_sequence(t)), brute_force_min_width(t));
  }
}

TEST(Feasible, Examples) {
  Tree t3 = lower_bound_tree(3);
  EXPECT_FALSE(feasible(t3, 1, 4));
  EXPECT_TRUE(feasible(t3, 1, 5));
  for (int s = 0; s < 200; ++s) {
    Tree t = random_tree(1 + s % 80, s);
    int w = min_width(rep_sequence(t));
    EXPECT_TRUE(feasible(t, w, 0));
    EXPECT_TRUE(feasible(t, 0, w));
  }
}

TEST(Feasible, Monotone) {
  for (int s = 0; s < 200; ++s) {
    RepSeq q = rep_sequence(random_tree(1 + s % 100, s));
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= 8; ++b)
        if (feasible(q, a, b)) {
          ASSERT_TRUE(feasible(q, a + 1, b));
          ASSERT_TRUE(feasible(q, a, b + 1));
        }
  }
}

TEST(Symmetry, MirrorSwapsFeasiblePairs) {
  for (int n = 1; n <= 9; ++n) {
    for (const Tree& t : all_trees(n)) {
      Tree m = mirror(t);
      RepSeq a = oracle_sequence(t), b = oracle_sequence(m);
      ASSERT_EQ(min_width(a), min_width(b));
      for (int x = 0; x <= 5; ++x)
        for (int y = 0; y <= 5; ++y) ASSERT_EQ(feasible(a, x, y), feasible(b, y, x));
    }
  }
}

TEST(OptimalDrawing, SingleNode) {
  auto d = optimal_lr_drawing(single_node()).drawing;
  ASSERT_EQ(d.points.size(), 1u);
  EXPECT_EQ(d.points[0], (Point{0, 0}));
  EXPECT_EQ(d.width(), 1);
  EXPECT_EQ(d.height(), 1);
}

TEST(OptimalDrawing, LowerBoundTreeThree) {
  Tree t = lower_bound_tree(3);
  auto d = optimal_lr_drawing(t).drawing;
  EXPECT_EQ(d.width(), 7);
  EXPECT_EQ(d.height(), 39);
  EXPECT_TRUE(is_lr_drawing(t, d).pass());
  EXPECT_EQ(d.points[t.root()], (Point{d.points[t.root()].x, 0}));
}

TEST(OptimalDrawing, RandomValid) {
  for (int s = 0; s < 10000; ++s) {
    Tree t = random_tree(1 + s % 300, s);
    LrDrawing lr = optimal_lr_drawing(t);
    ASSERT_EQ(lr.drawing.width(), min_width(rep_sequence(t)));
    ASSERT_EQ(lr.drawing.height(), t.size());
    ASSERT_EQ(lr.drawing.points[t.root()].y, 0);
    VerifyReport r = is_lr_drawing(t, lr.drawing);
    ASSERT_TRUE(r.pass()) << r.summary();
  }
}

TEST(OptimalDrawing, FromRulesMatchesOracleWidth) {
  for (int s = 0; s < 300; ++s) {
    Tree t = random_tree(1 + s % 40, s);
    std::vector<Rule> rules(t.size());
    std::uint64_t st = s;
    for (auto& r : rules) r = (splitmix64(st) & 1) ? Rule::Right : Rule::Left;
    LrDrawing d = lr_drawing_from_rules(t, rules);
    Box b = rule_box(t, t.root(), rules);
    ASSERT_EQ(d.drawing.width(), b.lw + b.rw + 1);
    ASSERT_TRUE(is_lr_drawing(t, d.drawing).pass());
  }
}
