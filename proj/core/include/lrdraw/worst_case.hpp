#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lrdraw/lr_opt.hpp"
#include "lrdraw/tree.hpp"

namespace lrdraw {

// sigma_level: two copies of sigma_{level-1} around `level`.
std::vector<int> ruler_sequence(int level);
// pi_level(i) = 2^sigma_level(i) - 1.
std::vector<std::int64_t> pi_sequence(int level);

Tree lower_bound_tree(int h);
// n-node tree with copies of the largest T_h (h <= 7) fitting in n / 4 hung
// off a zigzag path, topped up with a random subtree at the bottom.
Tree embedded_lower_bound_tree(int n, std::uint64_t seed = 0);
// Node count of T_h without building it.
std::int64_t lower_bound_tree_size(int h);
// |T_h| <= (3 + sqrt5)^h, decided exactly over Z[sqrt5].
bool node_count_bound_check(int h);
bool within_three_plus_sqrt5_pow(std::int64_t count, int h);

struct SizedSeq {
  int n = 0;
  RepSeq seq;
};

bool dominates(const SizedSeq& a, const SizedSeq& b);
bool dominates(int an, const std::vector<int>& a, int bn, const std::vector<int>& b);

struct FrontierStats {
  int n = 0;
  std::size_t candidates = 0;
  std::size_t inserted = 0;
  std::size_t frontier_size = 0;
  int max_width = 0;
  double seconds = 0.0;
};

// Antichain of (node count, sequence) pairs under dominance, built size by
// size. Every ordered binary tree with at most max_n() nodes is dominated by
// some entry. Entries keep their witness as a pair of child entry ids.
class Frontier {
 public:
  struct Entry {
    int n = 0;
    std::vector<int> seq;
    int left = kNone;  // arena id of the left witness child
    int right = kNone;
    int width = 0;
  };

  Frontier();

  int max_n() const noexcept { return max_n_; }
  // Adds every entry of size max_n() + 1.
  FrontierStats extend();
  void extend_to(int n, const std::function<void(const FrontierStats&)>& progress = {});

  const std::vector<Entry>& arena() const noexcept { return arena_; }
  // Alive entry ids with node count n.
  const std::vector<int>& bucket(int n) const { return buckets_.at(n); }
  std::size_t size() const;
  std::vector<int> alive() const;
  Tree witness(int id) const;

  // Largest min width over entries with exactly n nodes (0 if none).
  int max_width_at(int n) const;
  // (w, smallest n whose frontier reaches width w).
  std::vector<std::pair<int, int>> min_nodes_table() const;

  // Line-oriented checkpoint: "n<TAB>s0,s1,..<TAB>witness" per entry plus a
  // "# done N" marker after each completed size.
  void save(std::ostream& os) const;
  void append_bucket(std::ostream& os, int n) const;
  static Frontier load(std::istream& is);

 private:
  int add_entry(Entry e);
  bool dominated_by_smaller(int n, const std::vector<int>& seq) const;

  std::vector<Entry> arena_;
  std::vector<std::vector<int>> buckets_;  // by node count
  // Alive entries grouped by sequence length, for the dominance scan.
  std::vector<std::vector<int>> by_len_;
  int max_n_ = 0;
};

std::vector<std::pair<int, int>> min_nodes_table(int max_n);

struct PowerFit {
  double a = 0, b = 0, c = 0;
  double sse = 0;
};

// Least squares w = a * n^b + c with b on a 1e-4 grid over [0.30, 0.60].
PowerFit fit_power_law(const std::vector<std::pair<int, int>>& table);
PowerFit fit_power_law(const std::vector<std::pair<double, double>>& wn);

// Rows (w, n) for w = 1..22 of the published minimum-node table.
const std::vector<std::pair<int, int>>& published_min_nodes_table();

}  // namespace lrdraw
