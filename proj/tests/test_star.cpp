#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "lrdraw/lr_opt.hpp"
#include "lrdraw/star_strong.hpp"
#include "lrdraw/star_weak.hpp"
#include "lrdraw/verify.hpp"
#include "lrdraw/worst_case.hpp"

using namespace lrdraw;

namespace {

int omega(const Tree& t) { return min_width(rep_sequence(t)); }

void expect_bell(const Tree& t, const GridDrawing& d) {
  VerifyReport r = is_star_shaped(t, d);
  r.merge(is_bell_like(t, d));
  ASSERT_TRUE(r.pass()) << serialize_tree(t) << ": " << r.summary();
  ASSERT_EQ(d.kind, DrawingKind::BellLike);
  ASSERT_LE(d.height(), t.size());
}

void expect_flat(const Tree& t, const GridDrawing& d) {
  VerifyReport r = is_star_shaped(t, d);
  r.merge(is_flat(t, d));
  ASSERT_TRUE(r.pass()) << serialize_tree(t) << ": " << r.summary();
  ASSERT_EQ(d.kind, DrawingKind::Flat);
  ASSERT_LE(d.height(), t.size());
}

Tree path(const std::string& dirs) {
  std::vector<Node> nodes(dirs.size() + 1);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (dirs[i] == 'L') nodes[i].left = static_cast<int>(i) + 1;
    else nodes[i].right = static_cast<int>(i) + 1;
  }
  return Tree(std::move(nodes), 0);
}

// Spine with the given directions, a leaf hanging off every spine node and a
// random tree of `tail` nodes at the bottom.
Tree spine_tree(const std::string& dirs, int tail, std::uint64_t seed) {
  std::optional<Tree> cur = random_tree(tail, seed);
  for (int i = static_cast<int>(dirs.size()) - 1; i >= 0; --i) {
    cur = dirs[i] == 'L' ? join(cur, single_node()) : join(single_node(), cur);
  }
  return *cur;
}

}  // namespace

// ---- weak

TEST(Weak, SingleNode) {
  Tree t = single_node();
  GridDrawing b = bell_like_drawing(t), f = flat_drawing(t);
  EXPECT_EQ(b.width(), 1);
  EXPECT_EQ(f.width(), 1);
  expect_bell(t, b);
  expect_flat(t, f);
  EXPECT_EQ(b.apexes->at(0), (Point{-1, 1}));
  EXPECT_EQ(b.apexes->at(1), (Point{1, 1}));
}

TEST(Weak, PathsBellWidthTwo) {
  for (const char* dirs : {"", "L", "R", "LLLL", "RRRR", "LRLRLR", "RLLRRL"}) {
    Tree t = path(dirs);
    GridDrawing d = bell_like_drawing(t);
    EXPECT_LE(d.width(), 2) << dirs;
    EXPECT_EQ(d.height(), t.size());
    expect_bell(t, d);
  }
}

TEST(Weak, PathWithFinalRightTurn) {
  for (const char* dirs : {"LR", "LLLR", "LLLLLLR"}) {
    Tree t = path(dirs);
    GridDrawing d = flat_drawing(t);
    EXPECT_LE(d.width(), 4) << dirs;
    expect_flat(t, d);
  }
}

TEST(Weak, ApexPlacement) {
  for (int s = 0; s < 50; ++s) {
    Tree t = random_tree(2 + s, s);
    GridDrawing b = bell_like_drawing(t);
    EXPECT_EQ(b.apexes->at(0), (Point{b.min_x() - 1, b.max_y() + 1}));
    EXPECT_EQ(b.apexes->at(1), (Point{b.max_x() + 1, b.max_y() + 1}));
    GridDrawing f = flat_drawing(t);
    EXPECT_EQ(f.apexes->at(0).x, f.min_x() - 1);
    EXPECT_EQ(f.apexes->at(1).x, f.min_x() - 1);
  }
}

TEST(Weak, ExhaustiveSmall) {
  for (int n = 1; n <= 9; ++n)
    for (const Tree& t : all_trees(n)) {
      const int w = omega(t);
      GridDrawing b = bell_like_drawing(t), f = flat_drawing(t);
      ASSERT_LE(b.width(), 4 * w - 2) << serialize_tree(t);
      ASSERT_LE(f.width(), 4 * w) << serialize_tree(t);
      expect_bell(t, b);
      expect_flat(t, f);
    }
}

TEST(Weak, RandomBounds) {
  for (int s = 0; s < 1000; ++s) {
    Tree t = random_tree(1 + s % 200, s);
    const int w = omega(t);
    GridDrawing b = bell_like_drawing(t), f = flat_drawing(t);
    ASSERT_LE(b.width(), 4 * w - 2);
    ASSERT_LE(f.width(), 4 * w);
    expect_bell(t, b);
    expect_flat(t, f);
  }
}

TEST(Weak, MirroredTreesAlsoWithinBounds) {
  for (int s = 0; s < 200; ++s) {
    Tree t = mirror(random_tree(1 + s % 150, 5000 + s));
    const int w = omega(t);
    ASSERT_LE(bell_like_drawing(t).width(), 4 * w - 2);
    ASSERT_LE(flat_drawing(t).width(), 4 * w);
  }
}

TEST(Weak, RecursionShrinksWidth) {
  // The child drawn beside a node (not aligned below it) has a strictly
  // narrower LR-drawing, so every recursive call off the path has smaller w.
  for (int s = 0; s < 300; ++s) {
    Tree t = random_tree(1 + s % 200, s);
    LrRules rules = LrRules::from(optimal_lr_drawing(t));
    for (int v = 0; v < t.size(); ++v) {
      int side = rules.rule[v] == Rule::Left ? t.left(v) : t.right(v);
      if (side != kNone) ASSERT_LT(rules.width(side), rules.width(v));
    }
  }
}

TEST(Weak, Deterministic) {
  Tree t = random_tree(120, 4);
  EXPECT_EQ(flat_drawing(t).points, flat_drawing(t).points);
  EXPECT_EQ(bell_like_drawing(t).points, bell_like_drawing(t).points);
}

// ---- spine

TEST(Spine, CompleteTreeDescendsToLeaf) {
  Tree t = complete_tree(4);
  auto sp = spine(t, 14);
  EXPECT_EQ(sp.spine.size(), 4);
  EXPECT_TRUE(t.is_leaf(sp.spine.nodes.back()));
}

TEST(Spine, PathIsWholeSpine) {
  // with A = n - 1 every node's subtree is large enough to stay on the spine
  Tree t = path("LRRLLRL");
  auto sp = spine(t, t.size() - 1);
  EXPECT_EQ(sp.spine.size(), t.size());
  EXPECT_EQ(count_switches(sp), 4);
  EXPECT_EQ(static_cast<int>(sp.switches.size()), 4);
}

TEST(Spine, BoundaryEntersLeftChild) {
  // |left(root)| = n - A exactly
  Tree t = join(complete_tree(3), complete_tree(2));
  const int n = t.size(), A = n - 7;
  auto sp = spine(t, A);
  ASSERT_GE(sp.spine.size(), 2);
  EXPECT_EQ(sp.spine.nodes[1], t.left(t.root()));
}

TEST(Spine, RejectsBadA) {
  Tree t = complete_tree(3);
  EXPECT_THROW(spine(t, 0), std::invalid_argument);
  EXPECT_THROW(spine(t, 7), std::invalid_argument);
}

TEST(Spine, CountSwitches) {
  EXPECT_EQ(count_switches(spine(path("RRRRR"), 5)), 0);
  EXPECT_EQ(count_switches(spine(path("LRLR"), 4)), 3);
  EXPECT_EQ(count_switches(spine(path("LLRR"), 4)), 1);
  auto sp = spine(path("LRLR"), 4);
  EXPECT_EQ(sp.switches, (std::vector<int>{1, 2, 3}));
}

TEST(Spine, SideConditions) {
  for (int s = 0; s < 500; ++s) {
    Tree t = random_tree(2 + s % 400, s);
    const int n = t.size();
    const int A = 1 + static_cast<int>(SplitMix64(s).below(n - 1));
    auto sp = spine(t, A);
    auto sz = t.subtree_sizes();
    ASSERT_EQ(sp.spine.nodes.front(), t.root());
    const int vk = sp.spine.nodes.back();
    ASSERT_GE(sz[vk], n - A);
    for (int c : {t.left(vk), t.right(vk)})
      if (c != kNone) ASSERT_LT(sz[c], n - A);
    for (int r : sp.off_subtrees)
      if (r != kNone) ASSERT_LE(sz[r], A);
    for (int r : sp.tail_subtrees)
      if (r != kNone) ASSERT_LT(sz[r], n - A);
    for (int i : sp.switches) {
      ASSERT_GE(i, 1);
      ASSERT_NE(sp.spine.dirs[i - 1], sp.spine.dirs[i]);
    }
    ASSERT_EQ(static_cast<int>(sp.switches.size()), count_switches(sp));
  }
}

TEST(ChooseA, Examples) {
  EXPECT_EQ(choose_A(1), 1);
  EXPECT_EQ(choose_A(256), 16);
  EXPECT_EQ(choose_A(1 << 18), 4096);
  for (int n = 2; n < 5000; n += 37) {
    int A = choose_A(n);
    EXPECT_GE(A, 1);
    EXPECT_LT(A, n);
  }
}

// ---- strong

TEST(Strong, SingleNode) {
  EXPECT_EQ(strong_flat(single_node()).width(), 1);
  EXPECT_EQ(strong_bell(single_node()).width(), 1);
}

TEST(Strong, RandomVerifiedWithPerCallBounds) {
  std::set<std::string> seen;
  for (int s = 0; s < 1000; ++s) {
    Tree t = random_tree(1 + s % 500, s);
    std::vector<StrongCall> tf, tb;
    GridDrawing f = strong_flat(t, 0, &tf), b = strong_bell(t, 0, &tb);
    expect_flat(t, f);
    expect_bell(t, b);
    for (const auto* tr : {&tf, &tb})
      for (const StrongCall& c : *tr) {
        ASSERT_LE(c.width, c.bound) << c.kind << "/" << c.construction;
        seen.insert(c.kind + "/" + c.construction);
        if (c.construction == "zigzag") ASSERT_LE(c.s, 7);
        if (c.construction.rfind("cd-", 0) == 0) ASSERT_GE(c.s, 8);
        if (c.construction == "stack") ASSERT_LE(c.s, 4);
        if (c.construction.rfind("two-column", 0) == 0) ASSERT_GE(c.s, 5);
      }
    // the outermost call is recorded last
    ASSERT_EQ(tf.back().width, f.width());
    ASSERT_EQ(tb.back().width, b.width());
  }
  for (const char* k : {"flat/weak", "flat/zigzag", "bell/weak", "bell/stack"}) EXPECT_TRUE(seen.count(k)) << k;
}

TEST(Strong, PerCallBoundFormulas) {
  for (int s = 0; s < 200; ++s) {
    std::vector<StrongCall> tr;
    strong_flat(random_tree(100 + s * 5, s), 0, &tr);
    strong_bell(random_tree(100 + s * 5, s), 0, &tr);
    for (const auto& c : tr) {
      std::int64_t want = 0;
      if (c.construction == "zigzag") want = 8 + c.max_all;
      else if (c.construction.rfind("cd-", 0) == 0) want = 5 + std::max(2 * c.max_small, c.max_all);
      else if (c.construction == "stack") want = 5 + c.max_all;
      else if (c.construction.rfind("two-column", 0) == 0) want = 3 + std::max(2 * c.max_small, c.max_all);
      else continue;
      ASSERT_EQ(c.bound, want) << c.construction;
    }
  }
}

TEST(Strong, LongZigzagSpinesHitEveryCase) {
  std::set<std::string> seen;
  for (int s = 0; s < 400; ++s) {
    SplitMix64 rng(s);
    std::string dirs;
    const int len = 6 + static_cast<int>(rng.below(30));
    for (int i = 0; i < len; ++i) dirs += rng.below(3) ? (i % 2 ? 'L' : 'R') : (rng.below(2) ? 'L' : 'R');
    Tree t = spine_tree(dirs, 20 + static_cast<int>(rng.below(60)), s);
    std::vector<StrongCall> tf, tb;
    // each spine step drops two nodes, so A ~ 2 * len keeps the whole zigzag on the spine
    const int A = 2 * len + 2;
    GridDrawing f = strong_flat(t, A, &tf), b = strong_bell(t, A, &tb);
    expect_flat(t, f);
    expect_bell(t, b);
    for (const auto* tr : {&tf, &tb})
      for (const auto& c : *tr) seen.insert(c.kind + "/" + c.construction);
  }
  for (const char* k : {"flat/cd-a", "flat/cd-b", "bell/two-column-a", "bell/two-column-b", "flat/zigzag", "bell/stack"})
    EXPECT_TRUE(seen.count(k)) << k;
}

TEST(Strong, ExplicitThresholds) {
  for (int s = 0; s < 200; ++s) {
    Tree t = random_tree(20 + s * 3, s);
    const int thr = 1 + static_cast<int>(SplitMix64(s).below(t.size() - 1));
    expect_flat(t, strong_flat(t, thr));
    expect_bell(t, strong_bell(t, thr));
  }
}

TEST(Strong, AdversarialTrees) {
  for (int e : {10, 12}) {
    for (int seed = 0; seed < 3; ++seed) {
      Tree t = embedded_lower_bound_tree(1 << e, seed);
      expect_flat(t, strong_flat(t));
      expect_bell(t, strong_bell(t));
    }
  }
  for (int h = 2; h <= 5; ++h) {
    Tree t = lower_bound_tree(h);
    expect_flat(t, strong_flat(t));
    expect_bell(t, strong_bell(t));
  }
}

TEST(Strong, GrowthCeiling) {
  for (int e : {10, 12, 14}) {
    const int n = 1 << e;
    const double ceiling = 64 * std::pow(2.0, std::sqrt(2.0 * e)) * std::sqrt(double(e));
    for (const Tree& t : {random_tree(n, e), embedded_lower_bound_tree(n, e)}) {
      GridDrawing d = strong_flat(t);
      EXPECT_LE(d.width(), ceiling);
      EXPECT_LE(d.height(), n);
    }
  }
}

TEST(Strong, TraceCsv) {
  std::vector<StrongCall> tr;
  strong_flat(random_tree(300, 1), 0, &tr);
  std::string csv = strong_trace_csv(tr);
  EXPECT_EQ(csv.rfind("n,A,s,kind,case,width,bound\n", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), tr.size() + 1);
}
