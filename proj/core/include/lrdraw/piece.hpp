#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lrdraw/drawing.hpp"
#include "lrdraw/tree.hpp"

namespace lrdraw {

// A tree seen either as is or with every node's children swapped.
struct TreeView {
  const Tree* t = nullptr;
  bool mirrored = false;

  int left(int v) const { return mirrored ? t->right(v) : t->left(v); }
  int right(int v) const { return mirrored ? t->left(v) : t->right(v); }
  int child(int v, Dir d) const { return d == Dir::Left ? left(v) : right(v); }
  TreeView flipped() const { return {t, !mirrored}; }
};

inline Dir opposite(Dir d) { return d == Dir::Left ? Dir::Right : Dir::Left; }

struct Placed {
  int id;
  Point p;
};

// Partial drawing of a subtree in local coordinates, with its bounding box.
class Piece {
 public:
  Piece() = default;
  static Piece point(int id, Point p = {});

  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<Placed>& items() const noexcept { return items_; }
  int root() const { return items_[root_slot_].id; }
  Point root_point() const { return items_[root_slot_].p; }
  void set_root(int id);

  std::int64_t min_x() const { return minx_; }
  std::int64_t max_x() const { return maxx_; }
  std::int64_t min_y() const { return miny_; }
  std::int64_t max_y() const { return maxy_; }
  std::int64_t width() const { return empty() ? 0 : maxx_ - minx_ + 1; }
  std::int64_t height() const { return empty() ? 0 : maxy_ - miny_ + 1; }

  Piece& translate(std::int64_t dx, std::int64_t dy);
  Piece& rot180();     // (x, y) -> (-x, -y)
  Piece& reflect_x();  // (x, y) -> (-x, y)
  Piece& reflect_y();  // (x, y) -> (x, -y)

  Piece& left_at(std::int64_t x) { return translate(x - minx_, 0); }
  Piece& right_at(std::int64_t x) { return translate(x - maxx_, 0); }
  Piece& top_at(std::int64_t y) { return translate(0, y - maxy_); }
  Piece& bottom_at(std::int64_t y) { return translate(0, y - miny_); }
  Piece& root_row_at(std::int64_t y) { return translate(0, y - root_point().y); }

  // Adds the other piece's nodes as they are; the root stays.
  Piece& append(const Piece& other);
  void add(int id, Point p);

  // points[id] for every placed id; ids must lie in [0, n).
  std::vector<Point> to_points(int n) const;

 private:
  void grow(Point p);
  std::vector<Placed> items_;
  std::size_t root_slot_ = 0;
  std::int64_t minx_ = 0, maxx_ = -1, miny_ = 0, maxy_ = -1;
};

// Stacks non-empty blocks top to bottom on consecutive rows (each block's top
// row directly under the previous block's bottom row). Only y changes. The
// result's root is the first block's root.
Piece stack_down(std::vector<Piece> blocks);

// Bell-like apexes one unit outside the top corners; flat apexes left of the
// drawing on the extreme rows.
std::array<Point, 2> bell_apexes(const Piece& p);
std::array<Point, 2> flat_apexes(const Piece& p);

// Translates so that the bounding box's top-left corner is (0, 0) and builds
// the drawing of a tree with n nodes.
GridDrawing finish_drawing(Piece p, int n, DrawingKind kind);

}  // namespace lrdraw
