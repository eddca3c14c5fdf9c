#include "lrdraw/outerplanar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lrdraw {

std::vector<std::pair<int, int>> OuterplanarGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(n + chords.size());
  for (int i = 0; i < n; ++i) out.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  out.insert(out.end(), chords.begin(), chords.end());
  return out;
}

OuterplanarGraph make_graph(int n, std::vector<std::pair<int, int>> chords) {
  if (n < 3) throw std::invalid_argument("graph needs at least 3 vertices");
  for (auto& [a, b] : chords) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("chord endpoint out of range");
    if (a == b) throw std::invalid_argument("chord is a loop");
    if (a > b) std::swap(a, b);
    if (b - a == 1 || (a == 0 && b == n - 1))
      throw std::invalid_argument("chord " + std::to_string(a) + " " + std::to_string(b) + " is an outer edge");
  }
  std::sort(chords.begin(), chords.end());
  if (std::adjacent_find(chords.begin(), chords.end()) != chords.end())
    throw std::invalid_argument("duplicate chord");
  // Chords are non-crossing iff their intervals are laminar.
  std::vector<std::pair<int, int>> order = chords;
  std::sort(order.begin(), order.end(), [](auto x, auto y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  });
  std::vector<std::pair<int, int>> open;
  for (auto c : order) {
    while (!open.empty() && open.back().second <= c.first) open.pop_back();
    if (!open.empty() && c.second > open.back().second) {
      throw std::invalid_argument("chords " + std::to_string(open.back().first) + " " +
                                  std::to_string(open.back().second) + " and " + std::to_string(c.first) +
                                  " " + std::to_string(c.second) + " cross");
    }
    open.push_back(c);
  }
  if (static_cast<int>(chords.size()) > n - 3) throw std::invalid_argument("too many chords");
  OuterplanarGraph g;
  g.n = n;
  g.chords = std::move(chords);
  return g;
}

OuterplanarGraph parse_graph(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> chords;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<long long> vals;
    long long v;
    while (ls >> v) vals.push_back(v);
    if (!ls.eof()) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected integers");
    if (vals.empty()) continue;
    if (n < 0) {
      if (vals.size() != 1) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected vertex count");
      n = static_cast<int>(vals[0]);
      continue;
    }
    if (vals.size() != 2) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected a chord 'a b'");
    chords.emplace_back(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
  }
  if (n < 0) throw std::invalid_argument("empty graph description");
  return make_graph(n, std::move(chords));
}

std::string serialize_graph(const OuterplanarGraph& g) {
  std::string out = std::to_string(g.n) + "\n";
  for (auto [a, b] : g.chords) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

namespace {

// Internal faces as clockwise vertex cycles; the directed edge i -> i+1 runs
// clockwise with the face on its right.
std::vector<std::vector<int>> internal_faces(const OuterplanarGraph& g) {
  const int n = g.n;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : g.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto off = [n](int v, int w) { return ((w - v) % n + n) % n; };
  for (int v = 0; v < n; ++v)
    std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) { return off(v, a) < off(v, b); });
  std::set<std::pair<int, int>> used;
  std::vector<std::vector<int>> faces;
  auto trace = [&](int u, int v) {
    if (used.count({u, v})) return;
    std::vector<int> face;
    const int su = u, sv = v;
    do {
      used.insert({u, v});
      face.push_back(u);
      // neighbour of v with the largest offset still below u's
      const auto& A = adj[v];
      auto it = std::lower_bound(A.begin(), A.end(), u, [&](int a, int b) { return off(v, a) < off(v, b); });
      int w = *(it - 1);
      u = v;
      v = w;
    } while (u != su || v != sv);
    faces.push_back(std::move(face));
  };
  for (int i = 0; i < n; ++i) trace(i, (i + 1) % n);
  for (auto [a, b] : g.chords) {
    trace(a, b);
    trace(b, a);
  }
  return faces;
}

}  // namespace

OuterplanarGraph triangulate(const OuterplanarGraph& g) {
  auto chords = g.chords;
  for (const auto& f : internal_faces(g)) {
    if (f.size() <= 3) continue;
    const std::size_t k = f.size();
    std::size_t lo = static_cast<std::size_t>(std::min_element(f.begin(), f.end()) - f.begin());
    for (std::size_t j = 2; j + 1 < k; ++j) {
      int x = f[(lo + j) % k];
      chords.emplace_back(std::min(f[lo], x), std::max(f[lo], x));
    }
  }
  return make_graph(g.n, std::move(chords));
}

DualMapping dual_tree(const OuterplanarGraph& g, int u_star, int v_star) {
  if (!g.is_maximal()) throw std::invalid_argument("dual_tree: graph is not maximal");
  if (u_star < 0 || u_star >= g.n || v_star != (u_star + 1) % g.n)
    throw std::invalid_argument("dual_tree: root edge must be an outer edge (u, u+1 mod n)");
  auto faces = internal_faces(g);
  // directed edge -> face containing it (clockwise)
  std::map<std::pair<int, int>, int> face_of;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& F = faces[f];
    if (F.size() != 3) throw std::logic_error("dual_tree: non-triangular face");
    for (int i = 0; i < 3; ++i) face_of[{F[i], F[(i + 1) % 3]}] = f;
  }
  auto third = [&](int f, int u, int v) {
    for (int x : faces[f])
      if (x != u && x != v) return x;
    throw std::logic_error("dual_tree: degenerate face");
  };
  std::vector<Node> nodes;
  std::vector<int> gamma;
  struct Item {
    int face, u, v, parent;
    bool is_left;
  };
  std::vector<Item> stack{{face_of.at({u_star, v_star}), u_star, v_star, kNone, false}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({});
    const int w = third(it.face, it.u, it.v);
    gamma.push_back(w);
    if (it.parent != kNone) (it.is_left ? nodes[it.parent].left : nodes[it.parent].right) = id;
    // across (v, w): traversed w -> v in the neighbour
    auto r = face_of.find({w, it.v});
    if (r != face_of.end()) stack.push_back({r->second, w, it.v, id, false});
    // across (u, w): traversed u -> w in the neighbour
    auto l = face_of.find({it.u, w});
    if (l != face_of.end()) stack.push_back({l->second, it.u, w, id, true});
  }
  DualMapping dm{Tree(std::move(nodes), 0), std::move(gamma), u_star, v_star};
  if (dm.tree.size() != g.n - 2) throw std::logic_error("dual_tree: wrong node count");
  return dm;
}

OuterplanarGraph primal_from_dual(const DualMapping& dm) {
  const Tree& t = dm.tree;
  const int n = t.size() + 2;
  std::set<std::pair<int, int>> E;
  auto add = [&](int a, int b) { E.emplace(std::min(a, b), std::max(a, b)); };
  for (int s = 0; s < t.size(); ++s) {
    for (int c = t.left(s); c != kNone; c = t.right(c)) add(dm.gamma[s], dm.gamma[c]);
    for (int c = t.right(s); c != kNone; c = t.left(c)) add(dm.gamma[s], dm.gamma[c]);
  }
  for (int c = t.root(); c != kNone; c = t.left(c)) add(dm.u_star, dm.gamma[c]);
  for (int c = t.root(); c != kNone; c = t.right(c)) add(dm.v_star, dm.gamma[c]);
  add(dm.u_star, dm.v_star);
  std::vector<std::pair<int, int>> chords;
  for (auto [a, b] : E)
    if (!(b - a == 1 || (a == 0 && b == n - 1))) chords.emplace_back(a, b);
  if (static_cast<int>(E.size()) != 2 * n - 3) throw std::logic_error("primal_from_dual: wrong edge count");
  return make_graph(n, std::move(chords));
}

DualMapping dual_from_tree(const Tree& t) {
  // Outer order after u* = 0, v* = 1 is the (right, node, left) traversal.
  DualMapping dm;
  dm.tree = t;
  dm.gamma.assign(t.size(), -1);
  dm.u_star = 0;
  dm.v_star = 1;
  int next = 2;
  std::vector<std::pair<int, bool>> stack{{t.root(), false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      dm.gamma[v] = next++;
      continue;
    }
    if (t.left(v) != kNone) stack.push_back({t.left(v), false});
    stack.push_back({v, true});
    if (t.right(v) != kNone) stack.push_back({t.right(v), false});
  }
  return dm;
}

OuterplanarGraph random_maximal_outerplanar(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_maximal_outerplanar: n must be >= 3");
  auto g = primal_from_dual(dual_from_tree(random_tree(n - 2, seed)));
  // Rotate labels so the generating edge is not always (0, 1).
  SplitMix64 rng(seed ^ 0x5bd1e995ULL);
  const int shift = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<std::pair<int, int>> chords;
  for (auto [a, b] : g.chords) chords.emplace_back((a + shift) % n, (b + shift) % n);
  return make_graph(n, std::move(chords));
}

GridDrawing assemble_outerplanar_drawing(const DualMapping& dm, const GridDrawing& star) {
  if (!star.apexes) throw std::invalid_argument("assemble_outerplanar_drawing: star drawing lacks apexes");
  if (static_cast<int>(star.points.size()) != dm.tree.size())
    throw std::invalid_argument("assemble_outerplanar_drawing: drawing does not match the dual tree");
  GridDrawing g;
  g.kind = DrawingKind::Outerplanar;
  g.points.assign(dm.tree.size() + 2, Point{});
  for (int s = 0; s < dm.tree.size(); ++s) g.points[dm.gamma[s]] = star.points[s];
  g.points[dm.u_star] = (*star.apexes)[0];
  g.points[dm.v_star] = (*star.apexes)[1];
  g.apexes = star.apexes;
  return g;
}

}  // namespace lrdraw
