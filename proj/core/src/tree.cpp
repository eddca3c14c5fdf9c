#include "lrdraw/tree.hpp"

#include <algorithm>
#include <utility>

namespace lrdraw {

Tree::Tree(std::vector<Node> nodes, int root) : nodes_(std::move(nodes)), root_(root) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("tree must have at least one node");
  if (root_ < 0 || root_ >= n) throw std::invalid_argument("root out of range");
  parent_.assign(n, kNone);
  std::vector<char> seen(n, 0);
  seen[root_] = 1;
  for (int v = 0; v < n; ++v) {
    for (int c : {nodes_[v].left, nodes_[v].right}) {
      if (c == kNone) continue;
      if (c < 0 || c >= n) throw std::invalid_argument("child out of range");
      if (seen[c]) throw std::invalid_argument("node has more than one parent");
      seen[c] = 1;
      parent_[c] = v;
    }
  }
  // every node has a parent except the root, so n-1 edges; check reachability
  int reached = 0;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    if (nodes_[v].left != kNone) stack.push_back(nodes_[v].left);
    if (nodes_[v].right != kNone) stack.push_back(nodes_[v].right);
    if (reached > n) break;
  }
  if (reached != n) throw std::invalid_argument("nodes not connected to root");
}

std::vector<int> Tree::preorder() const {
  std::vector<int> out;
  out.reserve(nodes_.size());
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    if (nodes_[v].right != kNone) stack.push_back(nodes_[v].right);
    if (nodes_[v].left != kNone) stack.push_back(nodes_[v].left);
  }
  return out;
}

std::vector<int> Tree::subtree_sizes() const {
  std::vector<int> sz(nodes_.size(), 1);
  auto order = preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (parent_[v] != kNone) sz[parent_[v]] += sz[v];
  }
  return sz;
}

int Tree::internal_count() const {
  int c = 0;
  for (int v = 0; v < size(); ++v) c += is_leaf(v) ? 0 : 1;
  return c;
}

Tree Tree::subtree(int v) const {
  std::vector<int> order;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    if (nodes_[u].right != kNone) stack.push_back(nodes_[u].right);
    if (nodes_[u].left != kNone) stack.push_back(nodes_[u].left);
  }
  std::vector<int> idx(nodes_.size(), kNone);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) idx[order[i]] = i;
  std::vector<Node> out(order.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    const Node& nd = nodes_[order[i]];
    out[i].left = nd.left == kNone ? kNone : idx[nd.left];
    out[i].right = nd.right == kNone ? kNone : idx[nd.right];
  }
  return Tree(std::move(out), 0);
}

Tree Tree::canonical(std::vector<int>* old_to_new) const {
  auto order = preorder();
  std::vector<int> idx(nodes_.size(), kNone);
  for (int i = 0; i < size(); ++i) idx[order[i]] = i;
  std::vector<Node> out(nodes_.size());
  for (int i = 0; i < size(); ++i) {
    const Node& nd = nodes_[order[i]];
    out[i].left = nd.left == kNone ? kNone : idx[nd.left];
    out[i].right = nd.right == kNone ? kNone : idx[nd.right];
  }
  if (old_to_new) *old_to_new = idx;
  return Tree(std::move(out), 0);
}

bool Tree::operator==(const Tree& o) const {
  if (size() != o.size()) return false;
  std::vector<std::pair<int, int>> stack{{root_, o.root_}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const Node& x = nodes_[a];
    const Node& y = o.nodes_[b];
    if ((x.left == kNone) != (y.left == kNone)) return false;
    if ((x.right == kNone) != (y.right == kNone)) return false;
    if (x.left != kNone) stack.emplace_back(x.left, y.left);
    if (x.right != kNone) stack.emplace_back(x.right, y.right);
  }
  return true;
}

Tree parse_tree(std::string_view text) {
  // Each open frame is a node waiting for its left and then right subtree.
  struct Frame {
    int node;
    int filled;  // 0: expecting left, 1: expecting right
  };
  std::vector<Node> nodes;
  std::vector<Frame> stack;
  bool done = false;
  bool top_empty = false;
  std::size_t i = 0;

  auto attach = [&](int child) {
    Frame& f = stack.back();
    if (f.filled == 0) nodes[f.node].left = child;
    else nodes[f.node].right = child;
    ++f.filled;
  };

  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') continue;
    if (done) throw ParseError("trailing characters", i);
    if (c == '(') {
      if (!stack.empty() && stack.back().filled >= 2) throw ParseError("expected ')'", i);
      int id = static_cast<int>(nodes.size());
      nodes.push_back({});
      if (!stack.empty()) attach(id);
      stack.push_back({id, 0});
    } else if (c == '.') {
      if (stack.empty()) {
        top_empty = true;
        done = true;
        continue;
      }
      if (stack.back().filled >= 2) throw ParseError("expected ')'", i);
      attach(kNone);
    } else if (c == ')') {
      if (stack.empty()) throw ParseError("unbalanced ')'", i);
      if (stack.back().filled != 2) throw ParseError("node needs two subtrees", i);
      stack.pop_back();
      if (stack.empty()) done = true;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (top_empty) throw ParseError("empty tree is not a tree", 0);
  if (!done) throw ParseError(nodes.empty() ? "empty input" : "unexpected end of input", i);
  return Tree(std::move(nodes), 0);
}

std::string serialize_tree(const Tree& t) {
  std::string out;
  out.reserve(3 * t.size() + 2);
  // Iterative preorder emitting "(", left, right, ")"; negative entries are ')' markers.
  std::vector<int> stack{t.root()};
  constexpr int kClose = -2;
  constexpr int kDot = -3;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == kClose) {
      out += ')';
      continue;
    }
    if (v == kDot) {
      out += '.';
      continue;
    }
    out += '(';
    stack.push_back(kClose);
    stack.push_back(t.right(v) == kNone ? kDot : t.right(v));
    stack.push_back(t.left(v) == kNone ? kDot : t.left(v));
  }
  return out;
}

Tree single_node() { return Tree({Node{}}, 0); }

Tree join(const std::optional<Tree>& l, const std::optional<Tree>& r) {
  std::vector<Node> nodes(1);
  auto append = [&](const Tree& s) {
    int base = static_cast<int>(nodes.size());
    std::vector<int> map;
    Tree c = s.canonical(&map);
    for (const Node& nd : c.nodes()) {
      nodes.push_back({nd.left == kNone ? kNone : nd.left + base,
                       nd.right == kNone ? kNone : nd.right + base});
    }
    return base;
  };
  if (l) nodes[0].left = append(*l);
  if (r) nodes[0].right = append(*r);
  return Tree(std::move(nodes), 0);
}

Tree complete_tree(int height) {
  if (height < 1) throw std::invalid_argument("complete_tree: height must be >= 1");
  if (height > 30) throw std::invalid_argument("complete_tree: height too large");
  // Preorder numbering: build recursively by explicit stack of (id, depth).
  const int n = (1 << height) - 1;
  std::vector<Node> nodes(n);
  int next = 1;
  // Left child is numbered before the right subtree is entered, giving preorder ids.
  struct Item {
    int id, depth, stage;
  };
  std::vector<Item> st{{0, 1, 0}};
  while (!st.empty()) {
    Item& it = st.back();
    if (it.depth == height || it.stage == 2) {
      st.pop_back();
      continue;
    }
    int c = next++;
    if (it.stage == 0) nodes[it.id].left = c;
    else nodes[it.id].right = c;
    ++it.stage;
    int d = it.depth + 1;
    st.push_back({c, d, 0});
  }
  return Tree(std::move(nodes), 0);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Lemire's nearly divisionless method with rejection for exact uniformity.
  unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (lo < threshold) {
      m = static_cast<unsigned __int128>((*this)()) * bound;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  // Remy's growth on full binary trees with n internal nodes; the internal
  // nodes then form a uniform ordered binary tree with n nodes.
  SplitMix64 rng(seed);
  const int total = 2 * n + 1;
  std::vector<int> lc(total, kNone), rc(total, kNone), par(total, kNone);
  int root = 0;
  int count = 1;
  for (int k = 0; k < n; ++k) {
    auto r = rng.below(static_cast<std::uint64_t>(2 * count));
    int x = static_cast<int>(r >> 1);
    bool new_leaf_left = (r & 1) != 0;
    int inner = count++;
    int leaf = count++;
    int p = par[x];
    if (p == kNone) root = inner;
    else if (lc[p] == x) lc[p] = inner;
    else rc[p] = inner;
    par[inner] = p;
    if (new_leaf_left) {
      lc[inner] = leaf;
      rc[inner] = x;
    } else {
      lc[inner] = x;
      rc[inner] = leaf;
    }
    par[x] = inner;
    par[leaf] = inner;
  }
  auto internal = [&](int v) { return v != kNone && lc[v] != kNone; };
  std::vector<Node> nodes(n);
  std::vector<int> id(total, kNone);
  int next = 0;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    id[v] = next++;
    if (internal(rc[v])) stack.push_back(rc[v]);
    if (internal(lc[v])) stack.push_back(lc[v]);
  }
  for (int v = 0; v < total; ++v) {
    if (!internal(v)) continue;
    nodes[id[v]].left = internal(lc[v]) ? id[lc[v]] : kNone;
    nodes[id[v]].right = internal(rc[v]) ? id[rc[v]] : kNone;
  }
  return Tree(std::move(nodes), 0);
}

Tree mirror(const Tree& t) {
  std::vector<Node> nodes = t.nodes();
  for (Node& nd : nodes) std::swap(nd.left, nd.right);
  return Tree(std::move(nodes), t.root());
}

std::vector<Tree> all_trees(int n) {
  if (n < 1) return {};
  // Shapes as child-pointer vectors in preorder, built by size splits.
  std::vector<std::vector<std::vector<Node>>> by(n + 1);
  by[1].push_back({Node{}});
  for (int m = 2; m <= n; ++m) {
    for (int ls = 0; ls <= m - 1; ++ls) {
      int rs = m - 1 - ls;
      auto lopts = ls == 0 ? std::vector<std::vector<Node>>{{}} : by[ls];
      auto ropts = rs == 0 ? std::vector<std::vector<Node>>{{}} : by[rs];
      for (const auto& L : lopts) {
        for (const auto& R : ropts) {
          std::vector<Node> v(1);
          v.reserve(m);
          auto shift = [](int c, int b) { return c == kNone ? kNone : c + b; };
          if (ls) {
            v[0].left = 1;
            for (const Node& nd : L) v.push_back({shift(nd.left, 1), shift(nd.right, 1)});
          }
          if (rs) {
            int b = 1 + ls;
            v[0].right = b;
            for (const Node& nd : R) v.push_back({shift(nd.left, b), shift(nd.right, b)});
          }
          by[m].push_back(std::move(v));
        }
      }
    }
  }
  std::vector<Tree> out;
  out.reserve(by[n].size());
  for (auto& v : by[n]) out.emplace_back(std::move(v), 0);
  return out;
}

namespace {
NodePath walk(const Tree& t, int s, std::optional<Dir> first, Dir then) {
  NodePath p;
  p.nodes.push_back(s);
  int v = s;
  if (first) {
    int c = t.child(v, *first);
    if (c == kNone) return p;
    p.dirs.push_back(*first);
    p.nodes.push_back(c);
    v = c;
  }
  for (int c = t.child(v, then); c != kNone; c = t.child(v, then)) {
    p.dirs.push_back(then);
    p.nodes.push_back(c);
    v = c;
  }
  return p;
}
}  // namespace

NodePath leftmost_path(const Tree& t) { return walk(t, t.root(), std::nullopt, Dir::Left); }
NodePath rightmost_path(const Tree& t) { return walk(t, t.root(), std::nullopt, Dir::Right); }
NodePath left_right_path(const Tree& t, int s) { return walk(t, s, Dir::Left, Dir::Right); }
NodePath right_left_path(const Tree& t, int s) { return walk(t, s, Dir::Right, Dir::Left); }

NodePath root_path(const Tree& t, int v) {
  NodePath p;
  for (int u = v; u != kNone; u = t.parent(u)) p.nodes.push_back(u);
  std::reverse(p.nodes.begin(), p.nodes.end());
  for (std::size_t i = 1; i < p.nodes.size(); ++i)
    p.dirs.push_back(t.left(p.nodes[i - 1]) == p.nodes[i] ? Dir::Left : Dir::Right);
  return p;
}

}  // namespace lrdraw
