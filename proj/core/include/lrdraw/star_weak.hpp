#pragma once

#include <vector>

#include "lrdraw/drawing.hpp"
#include "lrdraw/lr_opt.hpp"
#include "lrdraw/piece.hpp"
#include "lrdraw/tree.hpp"

namespace lrdraw {

// Bell-like star-shaped drawing of width <= 4w - 2 and height <= n, where w is
// the minimum LR-drawing width of t.
GridDrawing bell_like_drawing(const Tree& t);
// Flat star-shaped drawing of width <= 4w and height <= n.
GridDrawing flat_drawing(const Tree& t);

// Rules of an LR-drawing indexed by node id of the underlying tree; the weak
// constructions follow them on any subtree and in either mirror view.
struct LrRules {
  std::vector<Rule> rule;
  std::vector<int> left_width;
  std::vector<int> right_width;

  Rule at(TreeView view, int v) const {
    Rule r = rule[v];
    if (view.mirrored) r = r == Rule::Left ? Rule::Right : Rule::Left;
    return r;
  }
  // Width of the restriction of the LR-drawing to v's subtree.
  int width(int v) const { return left_width[v] + right_width[v] + 1; }
  static LrRules from(const LrDrawing& d) { return {d.rule, d.left_width, d.right_width}; }
};

Piece weak_bell_piece(const LrRules& rules, TreeView view, int v);
Piece weak_flat_piece(const LrRules& rules, TreeView view, int v);

}  // namespace lrdraw
