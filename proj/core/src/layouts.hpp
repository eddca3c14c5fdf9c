#pragma once

// Layout primitives shared by the weak and strong star-shaped constructions.
// Everything is expressed for a TreeView, in a frame where the path column
// is x = 0 and y grows upwards.

#include <functional>
#include <optional>

#include "lrdraw/piece.hpp"

namespace lrdraw::layout {

// Flat drawing of the child subtree rooted at the given node.
using Inner = std::function<Piece(int child)>;

std::vector<int> path_down(TreeView view, int v, Dir d);

// Leftmost path of v's subtree downwards on column 0 and rightmost path
// upwards on column 0; each path node's other child subtree is drawn by
// `inner` with its left side on column 1 and its root on the node's row.
Piece flat_stack(TreeView view, int v, const Inner& inner);

// Leftmost path downwards on column 0, the leftmost column, with v on top.
// `top` is the bell-like drawing of v's right subtree (may be empty), placed
// one row below v from column 1. Other right subtrees of the path come from
// `inner`, drawn as in flat_stack.
Piece bell_stack_left(TreeView view, int v, Piece top, const Inner& inner);

// Flat layout around the node w = right(s_j), where s_1 = v, ..., s_q is the
// leftmost path and 2 <= j <= q. c and d are bell-like drawings of w's left
// and right subtrees (either may be empty); d is rotated here. Every other
// subtree hanging off the leftmost and rightmost paths comes from `inner`.
Piece flat_cd_layout(TreeView view, int v, int j, Piece c, Piece d, const Inner& inner);

}  // namespace lrdraw::layout
