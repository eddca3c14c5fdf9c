#pragma once

#include <cstdint>
#include <vector>

#include "lrdraw/drawing.hpp"
#include "lrdraw/tree.hpp"

namespace lrdraw {

struct RepSeq {
  std::vector<int> values;

  int size() const noexcept { return static_cast<int>(values.size()); }
  // S(i), extended by zero past the end.
  int at(int i) const { return i < size() ? values[i] : 0; }
  friend bool operator==(const RepSeq&, const RepSeq&) = default;
  friend auto operator<=>(const RepSeq&, const RepSeq&) = default;
};

int min_width(const RepSeq& s);
// Smallest i attaining min_width; the tight pair is (i, s[i]).
int min_width_index(const RepSeq& s);

// Sequence of a node from its children's sequences (nullptr = empty subtree).
RepSeq splice(const RepSeq* left, const RepSeq* right);
RepSeq rep_sequence(const Tree& t);
// Sequences of every subtree, indexed by node id.
std::vector<RepSeq> all_rep_sequences(const Tree& t);

bool feasible(const RepSeq& s, int a, int b);
bool feasible(const Tree& t, int a, int b);

// Rule applied at a node of an LR-drawing. Left rule: left subtree drawn to
// the left, right subtree aligned below. Right rule: the reverse.
enum class Rule : std::uint8_t { Left, Right };

struct LrDrawing {
  GridDrawing drawing;
  std::vector<Rule> rule;       // per node
  std::vector<int> left_width;  // per node, columns of its sub-drawing left of it
  std::vector<int> right_width;

  // The child drawn straight below v (kNone if absent).
  int aligned_child(const Tree& t, int v) const {
    return rule[v] == Rule::Left ? t.right(v) : t.left(v);
  }
};

LrDrawing optimal_lr_drawing(const Tree& t);
// LR-drawing obtained from an explicit rule assignment.
LrDrawing lr_drawing_from_rules(const Tree& t, const std::vector<Rule>& rules);

inline constexpr int kBruteForceMaxInternal = 20;
int brute_force_min_width(const Tree& t);
// Minimum right width for each left-width budget, by brute force (small trees).
RepSeq brute_force_rep_sequence(const Tree& t);

}  // namespace lrdraw
