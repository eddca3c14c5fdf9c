#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrdraw/drawing.hpp"
#include "lrdraw/tree.hpp"

namespace lrdraw {

// Heavy path from the root: v_1 = root, each v_{i+1} is a child of v_i whose
// subtree has at least n - A nodes. Indices in `switches` are 1-based spine
// positions, so switch i is the triple (v_i, v_{i+1}, v_{i+2}).
struct SpineDecomposition {
  NodePath spine;
  std::vector<int> off_subtrees;  // off_subtrees[i - 1] roots T_i (kNone if empty), i < k
  NodePath right_tail;            // rightmost path from v_k
  std::vector<int> tail_subtrees; // left subtree roots along right_tail (kNone if empty)
  std::vector<int> switches;
};

// Requires 1 <= A < t.size().
SpineDecomposition spine(const Tree& t, int A);
int count_switches(const SpineDecomposition& sp);
// max(1, floor(n / 2^sqrt(2 log2 n)))
int choose_A(int n);

// Trees up to this size are drawn by the weak constructions.
inline constexpr int kStrongFloor = 16;

// One record per recursive invocation (not per reused spine suffix).
struct StrongCall {
  int n = 0;
  int A = 0;
  int s = 0;
  std::string kind;  // "flat" or "bell"
  // weak, zigzag, stack, cd-a/cd-b, two-column-a/two-column-b; the suffix
  // names the two-column sub-case (last two switches apart or adjacent)
  std::string construction;
  std::int64_t width = 0;
  std::int64_t bound = 0;
  std::int64_t max_small = 0;  // widest child drawing with at most A nodes
  std::int64_t max_all = 0;    // widest child drawing
};

std::string strong_trace_csv(const std::vector<StrongCall>& calls);

// threshold <= 0 means choose_A(n).
GridDrawing strong_flat(const Tree& t, int threshold = 0, std::vector<StrongCall>* trace = nullptr);
GridDrawing strong_bell(const Tree& t, int threshold = 0, std::vector<StrongCall>* trace = nullptr);

}  // namespace lrdraw
