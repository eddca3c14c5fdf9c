#include "lrdraw/worst_case.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace lrdraw {

std::vector<int> ruler_sequence(int level) {
  if (level < 1) throw std::invalid_argument("ruler_sequence: level must be >= 1");
  if (level > 30) throw std::invalid_argument("ruler_sequence: level too large");
  std::vector<int> s{1};
  for (int l = 2; l <= level; ++l) {
    std::vector<int> next = s;
    next.push_back(l);
    next.insert(next.end(), s.begin(), s.end());
    s = std::move(next);
  }
  return s;
}

std::vector<std::int64_t> pi_sequence(int level) {
  if (level < 1) throw std::invalid_argument("pi_sequence: level must be >= 1");
  if (level > 30) throw std::invalid_argument("pi_sequence: level too large");
  std::vector<std::int64_t> s{1};
  for (int l = 2; l <= level; ++l) {
    std::vector<std::int64_t> next = s;
    next.push_back((std::int64_t{1} << l) - 1);
    next.insert(next.end(), s.begin(), s.end());
    s = std::move(next);
  }
  return s;
}

Tree lower_bound_tree(int h) {
  if (h < 1) throw std::invalid_argument("lower_bound_tree: h must be >= 1");
  if (h > 7) throw std::invalid_argument("lower_bound_tree: h too large");
  std::vector<Tree> T{single_node(), single_node()};  // T[0] unused
  for (int g = 2; g <= h; ++g) {
    const auto sigma = ruler_sequence(g - 1);
    const int k = 1 << (g - 1);
    Tree cur = join(T[g - 1], T[g - 1]);  // u_k
    for (int i = k - 1; i >= 1; --i) {
      const Tree& side = T[sigma[i - 1]];
      Tree v = join(cur, side);  // v_i: left u_{i+1}, right R_i
      cur = join(side, v);       // u_i: left L_i, right v_i
    }
    T.push_back(std::move(cur));
  }
  return T[h];
}

Tree embedded_lower_bound_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("embedded_lower_bound_tree: n must be >= 1");
  int h = 0;
  while (h < 7 && lower_bound_tree_size(h + 1) <= n / 4) ++h;
  if (h == 0) return random_tree(n, seed);
  const Tree block = lower_bound_tree(h);
  const int bs = block.size();
  const int copies = static_cast<int>((3LL * n / 4) / (bs + 1));

  std::vector<Node> nodes;
  nodes.reserve(n);
  auto paste = [&](const Tree& s) {
    const int base = static_cast<int>(nodes.size());
    for (const Node& nd : s.nodes()) {
      nodes.push_back({nd.left == kNone ? kNone : nd.left + base,
                       nd.right == kNone ? kNone : nd.right + base});
    }
    return base + s.root();
  };
  int prev = kNone;
  Dir prev_dir = Dir::Left;
  for (int i = 0; i < copies; ++i) {
    const int v = static_cast<int>(nodes.size());
    nodes.push_back({});
    const Dir down = (i % 2 == 0) ? Dir::Left : Dir::Right;
    const int b = paste(block);
    if (down == Dir::Left) nodes[v].right = b;
    else nodes[v].left = b;
    if (prev != kNone) (prev_dir == Dir::Left ? nodes[prev].left : nodes[prev].right) = v;
    prev = v;
    prev_dir = down;
  }
  const int rest = n - static_cast<int>(nodes.size());
  if (rest > 0) {
    const int r = paste(random_tree(rest, seed));
    if (prev != kNone) (prev_dir == Dir::Left ? nodes[prev].left : nodes[prev].right) = r;
  }
  return Tree(std::move(nodes), 0).canonical();
}

std::int64_t lower_bound_tree_size(int h) {
  if (h < 1) throw std::invalid_argument("lower_bound_tree_size: h must be >= 1");
  std::vector<std::int64_t> n{0, 1};
  for (int g = 2; g <= h; ++g) {
    const int k = 1 << (g - 1);
    std::int64_t total = 2 * n[g - 1] + 1 + 2 * (k - 1);
    for (int s : ruler_sequence(g - 1)) total += 2 * n[s];
    n.push_back(total);
  }
  return n[h];
}

bool within_three_plus_sqrt5_pow(std::int64_t count, int h) {
  using boost::multiprecision::cpp_int;
  // (3 + sqrt5)^h = A + B*sqrt5
  cpp_int A = 1, B = 0;
  for (int i = 0; i < h; ++i) {
    cpp_int a2 = 3 * A + 5 * B;
    cpp_int b2 = A + 3 * B;
    A = std::move(a2);
    B = std::move(b2);
  }
  cpp_int diff = cpp_int(count) - A;
  if (diff <= 0) return true;
  return diff * diff <= 5 * B * B;
}

bool node_count_bound_check(int h) {
  return within_three_plus_sqrt5_pow(lower_bound_tree_size(h), h);
}

bool dominates(int an, const std::vector<int>& a, int bn, const std::vector<int>& b) {
  if (an > bn || a.size() < b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

bool dominates(const SizedSeq& a, const SizedSeq& b) {
  return dominates(a.n, a.seq.values, b.n, b.seq.values);
}

PowerFit fit_power_law(const std::vector<std::pair<double, double>>& wn) {
  if (wn.size() < 4) throw std::invalid_argument("fit_power_law: need at least 4 rows");
  bool all_equal = true;
  for (const auto& r : wn) all_equal = all_equal && r.second == wn.front().second;
  if (all_equal) throw std::invalid_argument("fit_power_law: degenerate table (all n equal)");

  PowerFit best;
  best.sse = std::numeric_limits<double>::infinity();
  const double m = static_cast<double>(wn.size());
  for (int step = 0; step <= 3000; ++step) {
    const double b = 0.30 + step * 1e-4;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [w, n] : wn) {
      double x = std::pow(n, b);
      sx += x;
      sy += w;
      sxx += x * x;
      sxy += x * w;
    }
    const double det = m * sxx - sx * sx;
    if (det == 0) continue;
    const double a = (m * sxy - sx * sy) / det;
    const double c = (sy - a * sx) / m;
    double sse = 0;
    for (const auto& [w, n] : wn) {
      double r = a * std::pow(n, b) + c - w;
      sse += r * r;
    }
    if (sse < best.sse) best = {a, b, c, sse};
  }
  return best;
}

PowerFit fit_power_law(const std::vector<std::pair<int, int>>& table) {
  std::vector<std::pair<double, double>> rows;
  rows.reserve(table.size());
  for (auto [w, n] : table) rows.emplace_back(w, n);
  return fit_power_law(rows);
}

const std::vector<std::pair<int, int>>& published_min_nodes_table() {
  static const std::vector<std::pair<int, int>> rows{
      {1, 1},    {2, 3},    {3, 7},    {4, 11},   {5, 19},   {6, 27},   {7, 35},   {8, 47},
      {9, 61},   {10, 77},  {11, 95},  {12, 111}, {13, 135}, {14, 159}, {15, 185}, {16, 215},
      {17, 243}, {18, 275}, {19, 311}, {20, 343}, {21, 383}, {22, 427}};
  return rows;
}

}  // namespace lrdraw
