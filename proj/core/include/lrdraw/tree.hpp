#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lrdraw {

inline constexpr int kNone = -1;

enum class Dir : std::uint8_t { Left, Right };

struct Node {
  int left = kNone;
  int right = kNone;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Ordered rooted binary tree. Node ids are dense, root is usually 0 and ids
// follow preorder for trees built by this library.
class Tree {
 public:
  Tree() = default;
  Tree(std::vector<Node> nodes, int root);

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  int root() const noexcept { return root_; }
  int left(int v) const { return nodes_[v].left; }
  int right(int v) const { return nodes_[v].right; }
  int child(int v, Dir d) const { return d == Dir::Left ? nodes_[v].left : nodes_[v].right; }
  int parent(int v) const { return parent_[v]; }
  bool is_leaf(int v) const { return nodes_[v].left == kNone && nodes_[v].right == kNone; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }

  // Nodes in preorder from the root.
  std::vector<int> preorder() const;
  // Subtree sizes indexed by node id.
  std::vector<int> subtree_sizes() const;
  int internal_count() const;

  // Copy of the subtree rooted at v, relabelled in preorder.
  Tree subtree(int v) const;
  // Same shape relabelled in preorder; returns the old->new map when requested.
  Tree canonical(std::vector<int>* old_to_new = nullptr) const;

  bool operator==(const Tree& o) const;  // structural equality

 private:
  std::vector<Node> nodes_;
  std::vector<int> parent_;
  int root_ = kNone;
};

struct NodePath {
  std::vector<int> nodes;
  std::vector<Dir> dirs;  // dirs[i] is the step from nodes[i] to nodes[i+1]
  int size() const noexcept { return static_cast<int>(nodes.size()); }
};

Tree parse_tree(std::string_view text);
std::string serialize_tree(const Tree& t);

Tree single_node();
// Node with the given (optional) subtrees; ids are relabelled in preorder.
Tree join(const std::optional<Tree>& l, const std::optional<Tree>& r);
Tree complete_tree(int height);
Tree random_tree(int n, std::uint64_t seed = 0);
Tree mirror(const Tree& t);
// Every ordered binary tree with n nodes, in a fixed order.
std::vector<Tree> all_trees(int n);

NodePath leftmost_path(const Tree& t);
NodePath rightmost_path(const Tree& t);
NodePath left_right_path(const Tree& t, int s);
NodePath right_left_path(const Tree& t, int s);
// Path from the root down to v.
NodePath root_path(const Tree& t, int v);

// splitmix64 step, used as the counter-based generator across the library.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ULL; }
  result_type operator()() { return splitmix64(state_); }
  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace lrdraw
