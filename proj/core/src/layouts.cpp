#include "layouts.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrdraw::layout {

std::vector<int> path_down(TreeView view, int v, Dir d) {
  std::vector<int> p;
  for (int u = v; u != kNone; u = view.child(u, d)) p.push_back(u);
  return p;
}

namespace {

// Path node on (0, 0) plus its inner subtree starting at column 1.
Piece path_block(int u, int child, const Inner& inner) {
  Piece b = Piece::point(u);
  if (child != kNone) {
    Piece c = inner(child);
    c.left_at(1).root_row_at(0);
    b.append(c);
  }
  return b;
}

void add_rightmost_blocks(TreeView view, int v, const Inner& inner, std::vector<Piece>& blocks) {
  auto right = path_down(view, v, Dir::Right);
  for (std::size_t i = right.size(); i-- > 1;) blocks.push_back(path_block(right[i], view.left(right[i]), inner));
}

}  // namespace

Piece flat_stack(TreeView view, int v, const Inner& inner) {
  std::vector<Piece> blocks;
  add_rightmost_blocks(view, v, inner, blocks);
  blocks.push_back(Piece::point(v));
  auto left = path_down(view, v, Dir::Left);
  for (std::size_t i = 1; i < left.size(); ++i) blocks.push_back(path_block(left[i], view.right(left[i]), inner));
  Piece out = stack_down(std::move(blocks));
  out.set_root(v);
  return out;
}

Piece bell_stack_left(TreeView view, int v, Piece top, const Inner& inner) {
  std::vector<Piece> blocks;
  Piece first = Piece::point(v);
  if (!top.empty()) {
    top.left_at(1).top_at(-1);
    first.append(top);
  }
  blocks.push_back(std::move(first));
  auto left = path_down(view, v, Dir::Left);
  for (std::size_t i = 1; i < left.size(); ++i) blocks.push_back(path_block(left[i], view.right(left[i]), inner));
  Piece out = stack_down(std::move(blocks));
  out.set_root(v);
  return out;
}

Piece flat_cd_layout(TreeView view, int v, int j, Piece c, Piece d, const Inner& inner) {
  auto s = path_down(view, v, Dir::Left);  // s[i - 1] is s_i
  const int q = static_cast<int>(s.size());
  if (j < 2 || j > q) throw std::logic_error("flat_cd_layout: bad j");
  const int sj = s[j - 1];
  const int w = view.right(sj);
  if (w == kNone) throw std::logic_error("flat_cd_layout: s_j has no right child");

  std::int64_t reach = 1;
  if (!c.empty()) reach = std::max(reach, c.left_at(1).max_x());
  if (!d.empty()) reach = std::max(reach, d.rot180().left_at(1).max_x());

  std::vector<Piece> blocks;
  add_rightmost_blocks(view, v, inner, blocks);
  if (j >= 3) {
    blocks.push_back(Piece::point(v));
    for (int i = 2; i <= j - 2; ++i) blocks.push_back(path_block(s[i - 1], view.right(s[i - 1]), inner));
    if (int r = view.right(s[j - 2]); r != kNone) blocks.push_back(inner(r).left_at(1));
  }
  blocks.push_back(std::move(d));
  blocks.push_back(Piece::point(s[j - 2]));
  Piece row = Piece::point(sj);
  row.add(w, {reach + 1, 0});
  blocks.push_back(std::move(row));
  blocks.push_back(std::move(c));
  for (int i = j + 1; i <= q; ++i) blocks.push_back(path_block(s[i - 1], view.right(s[i - 1]), inner));

  Piece out = stack_down(std::move(blocks));
  out.set_root(v);
  return out;
}

}  // namespace lrdraw::layout
