#include "lrdraw/star_weak.hpp"

#include <stdexcept>
#include <string>

#include "layouts.hpp"

namespace lrdraw {

namespace {

// Path P: from v follow the child opposite to the rule's side while it exists.
std::vector<int> rule_path(const LrRules& rules, TreeView view, int v) {
  std::vector<int> p{v};
  for (;;) {
    int u = p.back();
    int next = rules.at(view, u) == Rule::Right ? view.left(u) : view.right(u);
    if (next == kNone) break;
    p.push_back(next);
  }
  return p;
}

}  // namespace

Piece weak_bell_piece(const LrRules& rules, TreeView view, int v) {
  const auto path = rule_path(rules, view, v);
  const int m = static_cast<int>(path.size());
  bool seen_left = false, seen_right = false;
  std::vector<Piece> blocks;
  blocks.reserve(m);
  for (int i = 0; i < m; ++i) {
    const int u = path[i];
    const Rule r = rules.at(view, u);
    const bool next_is_left = i + 1 < m && r == Rule::Right;
    Piece b = Piece::point(u, {next_is_left ? 2 : 1, 0});
    // The off-path child sits on the rule's side.
    const int off = r == Rule::Right ? view.right(u) : view.left(u);
    const bool first = r == Rule::Left ? !seen_left : !seen_right;
    (r == Rule::Left ? seen_left : seen_right) = true;
    if (off != kNone) {
      Piece sub;
      if (first) {
        sub = weak_bell_piece(rules, view, off);
        sub.top_at(-1);
      } else {
        sub = weak_flat_piece(rules, view, off);
        if (r == Rule::Left) sub.rot180();
        sub.root_row_at(0);
      }
      if (r == Rule::Left)
        sub.right_at(0);
      else
        sub.left_at(3);
      b.append(sub);
    }
    blocks.push_back(std::move(b));
  }
  Piece out = stack_down(std::move(blocks));
  out.set_root(v);
  return out;
}

Piece weak_flat_piece(const LrRules& rules, TreeView view, int v) {
  if (view.t->is_leaf(v)) return Piece::point(v);
  if (rules.at(view, v) == Rule::Left && view.right(v) != kNone)
    return weak_flat_piece(rules, view.flipped(), v).reflect_y();

  auto inner = [&](int c) { return weak_flat_piece(rules, view, c); };
  if (rules.at(view, v) == Rule::Right && view.left(v) != kNone) {
    const auto path = rule_path(rules, view, v);
    const auto left = layout::path_down(view, v, Dir::Left);
    int j = 1;
    while (j < static_cast<int>(path.size()) && j < static_cast<int>(left.size()) && path[j] == left[j]) ++j;
    if (j < static_cast<int>(path.size())) {
      const int w = path[j];
      Piece c, d;
      if (view.left(w) != kNone) c = weak_bell_piece(rules, view, view.left(w));
      if (view.right(w) != kNone) d = weak_bell_piece(rules, view, view.right(w));
      return layout::flat_cd_layout(view, v, j, std::move(c), std::move(d), inner);
    }
  }
  return layout::flat_stack(view, v, inner);
}

namespace {

void check_width(const GridDrawing& d, std::int64_t bound, const char* what) {
  if (d.width() > bound)
    throw std::logic_error(std::string(what) + ": width " + std::to_string(d.width()) + " exceeds " +
                           std::to_string(bound));
}

}  // namespace

GridDrawing bell_like_drawing(const Tree& t) {
  const auto rules = LrRules::from(optimal_lr_drawing(t));
  const TreeView view{&t, false};
  auto d = finish_drawing(weak_bell_piece(rules, view, t.root()), t.size(), DrawingKind::BellLike);
  check_width(d, 4LL * rules.width(t.root()) - 2, "bell_like_drawing");
  return d;
}

GridDrawing flat_drawing(const Tree& t) {
  const auto rules = LrRules::from(optimal_lr_drawing(t));
  const TreeView view{&t, false};
  auto d = finish_drawing(weak_flat_piece(rules, view, t.root()), t.size(), DrawingKind::Flat);
  check_width(d, 4LL * rules.width(t.root()), "flat_drawing");
  return d;
}

}  // namespace lrdraw
