#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lrdraw/worst_case.hpp"

namespace lrdraw {

namespace {

int width_of(const std::vector<int>& s) {
  int best = std::numeric_limits<int>::max();
  for (int i = 0; i < static_cast<int>(s.size()); ++i) best = std::min(best, i + s[i] + 1);
  return best;
}

// Sequence of a node whose children carry sequences l and r.
void splice_into(const std::vector<int>& l, int wl, const std::vector<int>& r, int wr,
                 std::vector<int>& out) {
  out.clear();
  for (int i = 0; i < wl; ++i) out.push_back(std::max(i < static_cast<int>(l.size()) ? l[i] : 0, wr));
  for (int i = wl;; ++i) {
    int v = i < static_cast<int>(r.size()) ? r[i] : 0;
    out.push_back(v);
    if (v == 0) break;
  }
}

struct SeqHash {
  std::size_t operator()(const std::vector<int>& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : s) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};

std::string join_seq(const std::vector<int>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace

Frontier::Frontier() {
  buckets_.resize(2);
  Entry e;
  e.n = 1;
  e.seq = {0};
  e.width = 1;
  add_entry(std::move(e));
  max_n_ = 1;
}

int Frontier::add_entry(Entry e) {
  int id = static_cast<int>(arena_.size());
  if (static_cast<int>(buckets_.size()) <= e.n) buckets_.resize(e.n + 1);
  buckets_[e.n].push_back(id);
  const std::size_t len = e.seq.size();
  if (by_len_.size() <= len) by_len_.resize(len + 1);
  by_len_[len].push_back(id);
  arena_.push_back(std::move(e));
  return id;
}

bool Frontier::dominated_by_smaller(int n, const std::vector<int>& seq) const {
  for (std::size_t len = seq.size(); len < by_len_.size(); ++len) {
    for (int id : by_len_[len]) {
      const Entry& e = arena_[id];
      if (e.n > n) continue;
      bool ok = true;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (e.seq[i] < seq[i]) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

FrontierStats Frontier::extend() {
  auto t0 = std::chrono::steady_clock::now();
  const int n = max_n_ + 1;
  FrontierStats st;
  st.n = n;

  // Candidates in (left size, left entry, right entry) order; the first
  // witness for a given sequence wins.
  struct Cand {
    std::vector<int> seq;
    int left, right;
  };
  std::vector<Cand> cands;
  std::unordered_map<std::vector<int>, std::size_t, SeqHash> seen;
  std::vector<int> tmp;
  auto offer = [&](int l, int r) {
    ++st.candidates;
    if (l == kNone) tmp = arena_[r].seq;
    else if (r == kNone) tmp = arena_[l].seq;
    else splice_into(arena_[l].seq, arena_[l].width, arena_[r].seq, arena_[r].width, tmp);
    auto [it, fresh] = seen.try_emplace(tmp, cands.size());
    if (fresh) cands.push_back({tmp, l, r});
  };
  for (int ls = 0; ls <= n - 1; ++ls) {
    const int rs = n - 1 - ls;
    if (ls == 0) {
      for (int r : buckets_[rs]) offer(kNone, r);
    } else if (rs == 0) {
      for (int l : buckets_[ls]) offer(l, kNone);
    } else {
      for (int l : buckets_[ls])
        for (int r : buckets_[rs]) offer(l, r);
    }
  }

  // Drop candidates dominated by entries with fewer nodes.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (!dominated_by_smaller(n, cands[i].seq)) keep.push_back(i);

  // Among same-size survivors, a dominator sorts before what it dominates
  // under (length desc, lexicographic desc); keep the maximal elements.
  std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = cands[a].seq;
    const auto& y = cands[b].seq;
    if (x.size() != y.size()) return x.size() > y.size();
    return x > y;
  });
  std::vector<std::size_t> maximal;
  for (std::size_t i : keep) {
    bool dom = false;
    for (std::size_t j : maximal) {
      if (dominates(n, cands[j].seq, n, cands[i].seq)) {
        dom = true;
        break;
      }
    }
    if (!dom) maximal.push_back(i);
  }
  // Insert in generation order.
  std::sort(maximal.begin(), maximal.end());
  if (static_cast<int>(buckets_.size()) <= n) buckets_.resize(n + 1);
  for (std::size_t i : maximal) {
    Entry e;
    e.n = n;
    e.seq = std::move(cands[i].seq);
    e.left = cands[i].left;
    e.right = cands[i].right;
    e.width = width_of(e.seq);
    st.max_width = std::max(st.max_width, e.width);
    add_entry(std::move(e));
  }
  st.inserted = maximal.size();
  max_n_ = n;
  st.frontier_size = size();
  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return st;
}

void Frontier::extend_to(int n, const std::function<void(const FrontierStats&)>& progress) {
  while (max_n_ < n) {
    auto st = extend();
    if (progress) progress(st);
  }
}

std::size_t Frontier::size() const {
  std::size_t s = 0;
  for (const auto& b : buckets_) s += b.size();
  return s;
}

std::vector<int> Frontier::alive() const {
  std::vector<int> out;
  for (const auto& b : buckets_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

Tree Frontier::witness(int id) const {
  std::vector<Node> nodes;
  struct Item {
    int entry;
    int parent;
    bool is_left;
  };
  std::vector<Item> stack{{id, kNone, false}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    int me = static_cast<int>(nodes.size());
    nodes.push_back({});
    if (it.parent != kNone) {
      if (it.is_left) nodes[it.parent].left = me;
      else nodes[it.parent].right = me;
    }
    const Entry& e = arena_[it.entry];
    if (e.right != kNone) stack.push_back({e.right, me, false});
    if (e.left != kNone) stack.push_back({e.left, me, true});
  }
  return Tree(std::move(nodes), 0);
}

int Frontier::max_width_at(int n) const {
  int w = 0;
  if (n < static_cast<int>(buckets_.size()))
    for (int id : buckets_[n]) w = std::max(w, arena_[id].width);
  return w;
}

std::vector<std::pair<int, int>> Frontier::min_nodes_table() const {
  std::vector<std::pair<int, int>> rows;
  int reached = 0;
  for (int n = 1; n <= max_n_; ++n) {
    int w = max_width_at(n);
    for (int x = reached + 1; x <= w; ++x) rows.emplace_back(x, n);
    reached = std::max(reached, w);
  }
  return rows;
}

void Frontier::append_bucket(std::ostream& os, int n) const {
  for (int id : buckets_.at(n)) {
    const Entry& e = arena_[id];
    os << e.n << '\t' << join_seq(e.seq) << '\t' << serialize_tree(witness(id)) << '\n';
  }
  os << "# done " << n << '\n';
}

void Frontier::save(std::ostream& os) const {
  os << "# lrdraw frontier checkpoint\n";
  for (int n = 1; n <= max_n_; ++n) append_bucket(os, n);
}

Frontier Frontier::load(std::istream& is) {
  Frontier f;
  // Child witnesses are always alive smaller entries, so they can be found
  // by their serialized shape.
  std::unordered_map<std::string, int> by_shape{{"(..)", 0}};
  std::vector<std::pair<Entry, std::string>> pending;
  int done = 1;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      int m = 0;
      if (std::sscanf(line.c_str(), "# done %d", &m) == 1) {
        if (m != done && m != done + 1)
          throw std::runtime_error("checkpoint: sizes out of order at line " + std::to_string(lineno));
        if (m == done + 1) {
          if (static_cast<int>(f.buckets_.size()) <= m) f.buckets_.resize(m + 1);
          for (auto& [e, shape] : pending) {
            int id = f.add_entry(std::move(e));
            by_shape.emplace(std::move(shape), id);
          }
          pending.clear();
          f.max_n_ = done = m;
        }
      }
      continue;
    }
    std::istringstream ls(line);
    std::string nstr, seqstr, shape;
    if (!std::getline(ls, nstr, '\t') || !std::getline(ls, seqstr, '\t') || !std::getline(ls, shape))
      throw std::runtime_error("checkpoint: malformed line " + std::to_string(lineno));
    Entry e;
    e.n = std::stoi(nstr);
    std::istringstream ss(seqstr);
    for (std::string tok; std::getline(ss, tok, ',');) e.seq.push_back(std::stoi(tok));
    e.width = width_of(e.seq);
    if (e.n == 1) continue;  // built in
    Tree w = parse_tree(shape);
    if (w.size() != e.n) throw std::runtime_error("checkpoint: witness size mismatch at line " + std::to_string(lineno));
    auto child = [&](int c) -> int {
      if (c == kNone) return kNone;
      auto it = by_shape.find(serialize_tree(w.subtree(c)));
      if (it == by_shape.end())
        throw std::runtime_error("checkpoint: witness child not in frontier at line " + std::to_string(lineno));
      return it->second;
    };
    e.left = child(w.left(w.root()));
    e.right = child(w.right(w.root()));
    pending.emplace_back(std::move(e), serialize_tree(w));
  }
  return f;
}

std::vector<std::pair<int, int>> min_nodes_table(int max_n) {
  if (max_n < 1) throw std::invalid_argument("min_nodes_table: max_n must be >= 1");
  Frontier f;
  f.extend_to(max_n);
  return f.min_nodes_table();
}

}  // namespace lrdraw
