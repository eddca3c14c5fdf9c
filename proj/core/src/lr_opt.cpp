#include "lrdraw/lr_opt.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lrdraw {

int min_width(const RepSeq& s) {
  int best = std::numeric_limits<int>::max();
  for (int i = 0; i < s.size(); ++i) best = std::min(best, i + s.values[i] + 1);
  return best;
}

int min_width_index(const RepSeq& s) {
  int best = std::numeric_limits<int>::max();
  int arg = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (i + s.values[i] + 1 < best) {
      best = i + s.values[i] + 1;
      arg = i;
    }
  }
  return arg;
}

RepSeq splice(const RepSeq* left, const RepSeq* right) {
  if (!left && !right) return RepSeq{{0}};
  if (!left) return *right;
  if (!right) return *left;
  const int wl = min_width(*left);
  const int wr = min_width(*right);
  RepSeq out;
  out.values.reserve(std::max(wl + 1, right->size()));
  for (int i = 0; i < wl; ++i) out.values.push_back(std::max(left->at(i), wr));
  // Index wl is always present; stop after the first zero.
  for (int i = wl;; ++i) {
    int v = right->at(i);
    out.values.push_back(v);
    if (v == 0) break;
  }
  return out;
}

std::vector<RepSeq> all_rep_sequences(const Tree& t) {
  std::vector<RepSeq> seq(t.size());
  auto order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    int l = t.left(v), r = t.right(v);
    seq[v] = splice(l == kNone ? nullptr : &seq[l], r == kNone ? nullptr : &seq[r]);
  }
  return seq;
}

RepSeq rep_sequence(const Tree& t) {
  // Keep only the live frontier of sequences instead of one per node.
  std::vector<RepSeq> seq(t.size());
  auto order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    int l = t.left(v), r = t.right(v);
    seq[v] = splice(l == kNone ? nullptr : &seq[l], r == kNone ? nullptr : &seq[r]);
    if (l != kNone) RepSeq{}.values.swap(seq[l].values);
    if (r != kNone) RepSeq{}.values.swap(seq[r].values);
  }
  return seq[t.root()];
}

bool feasible(const RepSeq& s, int a, int b) {
  if (a < 0 || b < 0) return false;
  return b >= s.values[std::min(a, s.size() - 1)];
}

bool feasible(const Tree& t, int a, int b) { return feasible(rep_sequence(t), a, b); }

namespace {

// Places every node given rules and per-node extents, root at (0, 0).
void place(const Tree& t, LrDrawing& d, const std::vector<int>& sz) {
  d.drawing.kind = DrawingKind::LR;
  d.drawing.points.assign(t.size(), Point{});
  std::vector<int> stack{t.root()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const Point p = d.drawing.points[v];
    int l = t.left(v), r = t.right(v);
    if (d.rule[v] == Rule::Left) {
      if (l != kNone) {
        d.drawing.points[l] = {p.x - d.right_width[l] - 1, p.y - 1};
        stack.push_back(l);
      }
      if (r != kNone) {
        d.drawing.points[r] = {p.x, p.y - (l == kNone ? 0 : sz[l]) - 1};
        stack.push_back(r);
      }
    } else {
      if (r != kNone) {
        d.drawing.points[r] = {p.x + d.left_width[r] + 1, p.y - 1};
        stack.push_back(r);
      }
      if (l != kNone) {
        d.drawing.points[l] = {p.x, p.y - (r == kNone ? 0 : sz[r]) - 1};
        stack.push_back(l);
      }
    }
  }
}

int width_of(const LrDrawing& d, int v) {
  return v == kNone ? 0 : d.left_width[v] + d.right_width[v] + 1;
}

}  // namespace

LrDrawing lr_drawing_from_rules(const Tree& t, const std::vector<Rule>& rules) {
  LrDrawing d;
  d.rule = rules;
  d.left_width.assign(t.size(), 0);
  d.right_width.assign(t.size(), 0);
  auto order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    int l = t.left(v), r = t.right(v);
    if (rules[v] == Rule::Left) {
      d.left_width[v] = std::max(width_of(d, l), r == kNone ? 0 : d.left_width[r]);
      d.right_width[v] = r == kNone ? 0 : d.right_width[r];
    } else {
      d.left_width[v] = l == kNone ? 0 : d.left_width[l];
      d.right_width[v] = std::max(width_of(d, r), l == kNone ? 0 : d.right_width[l]);
    }
  }
  place(t, d, t.subtree_sizes());
  return d;
}

LrDrawing optimal_lr_drawing(const Tree& t) {
  const auto seq = all_rep_sequences(t);
  const int n = t.size();
  std::vector<int> wstar(n);
  for (int v = 0; v < n; ++v) wstar[v] = min_width(seq[v]);

  // Top-down budgets; a node's (alpha, beta) is feasible for its subtree.
  std::vector<int> alpha(n), beta(n);
  std::vector<Rule> rules(n, Rule::Left);
  auto tight = [&](int v) {
    int a = min_width_index(seq[v]);
    alpha[v] = a;
    beta[v] = seq[v].values[a];
  };
  tight(t.root());
  std::vector<int> stack{t.root()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    int l = t.left(v), r = t.right(v);
    int wl = l == kNone ? 0 : wstar[l];
    if (wl <= alpha[v]) {
      rules[v] = Rule::Left;
      if (l != kNone) {
        tight(l);
        stack.push_back(l);
      }
      if (r != kNone) {
        alpha[r] = alpha[v];
        beta[r] = beta[v];
        stack.push_back(r);
      }
    } else {
      rules[v] = Rule::Right;
      if (r != kNone) {
        tight(r);
        stack.push_back(r);
      }
      if (l != kNone) {
        alpha[l] = alpha[v];
        beta[l] = beta[v];
        stack.push_back(l);
      }
    }
  }
  return lr_drawing_from_rules(t, rules);
}

namespace {

// Calls fn(alpha, beta) for the root extents of every rule assignment.
template <class Fn>
void enumerate_rules(const Tree& t, Fn fn) {
  std::vector<int> internal;
  for (int v = 0; v < t.size(); ++v)
    if (!t.is_leaf(v)) internal.push_back(v);
  if (static_cast<int>(internal.size()) > kBruteForceMaxInternal)
    throw std::invalid_argument("brute force: too many internal nodes");
  auto order = t.preorder();
  std::vector<Rule> rules(t.size(), Rule::Left);
  std::vector<int> a(t.size()), b(t.size());
  const std::uint64_t total = 1ULL << internal.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < internal.size(); ++i)
      rules[internal[i]] = (mask >> i) & 1 ? Rule::Right : Rule::Left;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      int l = t.left(v), r = t.right(v);
      int wl = l == kNone ? 0 : a[l] + b[l] + 1;
      int wr = r == kNone ? 0 : a[r] + b[r] + 1;
      if (rules[v] == Rule::Left) {
        a[v] = std::max(wl, r == kNone ? 0 : a[r]);
        b[v] = r == kNone ? 0 : b[r];
      } else {
        a[v] = l == kNone ? 0 : a[l];
        b[v] = std::max(wr, l == kNone ? 0 : b[l]);
      }
    }
    fn(a[t.root()], b[t.root()]);
  }
}

}  // namespace

int brute_force_min_width(const Tree& t) {
  int best = std::numeric_limits<int>::max();
  enumerate_rules(t, [&](int a, int b) { best = std::min(best, a + b + 1); });
  return best;
}

RepSeq brute_force_rep_sequence(const Tree& t) {
  // best_right[a] = min right width over drawings with left width exactly a.
  std::vector<int> best_right(t.size() + 1, std::numeric_limits<int>::max());
  enumerate_rules(t, [&](int a, int b) { best_right[a] = std::min(best_right[a], b); });
  RepSeq s;
  int running = std::numeric_limits<int>::max();
  for (int i = 0; i <= t.size(); ++i) {
    running = std::min(running, best_right[i]);
    if (running == std::numeric_limits<int>::max()) continue;  // cannot happen at i = 0
    s.values.push_back(running);
    if (running == 0) break;
  }
  return s;
}

}  // namespace lrdraw
