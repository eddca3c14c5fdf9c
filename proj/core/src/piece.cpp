#include "lrdraw/piece.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrdraw {

Piece Piece::point(int id, Point p) {
  Piece r;
  r.add(id, p);
  return r;
}

void Piece::grow(Point p) {
  if (items_.size() == 1) {
    minx_ = maxx_ = p.x;
    miny_ = maxy_ = p.y;
    return;
  }
  minx_ = std::min(minx_, p.x);
  maxx_ = std::max(maxx_, p.x);
  miny_ = std::min(miny_, p.y);
  maxy_ = std::max(maxy_, p.y);
}

void Piece::add(int id, Point p) {
  items_.push_back({id, p});
  grow(p);
}

void Piece::set_root(int id) {
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (items_[i].id == id) {
      root_slot_ = i;
      return;
    }
  throw std::logic_error("Piece::set_root: id not in piece");
}

Piece& Piece::translate(std::int64_t dx, std::int64_t dy) {
  for (auto& it : items_) {
    it.p.x += dx;
    it.p.y += dy;
  }
  minx_ += dx;
  maxx_ += dx;
  miny_ += dy;
  maxy_ += dy;
  return *this;
}

Piece& Piece::rot180() {
  for (auto& it : items_) it.p = {-it.p.x, -it.p.y};
  std::swap(minx_, maxx_);
  std::swap(miny_, maxy_);
  minx_ = -minx_;
  maxx_ = -maxx_;
  miny_ = -miny_;
  maxy_ = -maxy_;
  return *this;
}

Piece& Piece::reflect_x() {
  for (auto& it : items_) it.p.x = -it.p.x;
  std::swap(minx_, maxx_);
  minx_ = -minx_;
  maxx_ = -maxx_;
  return *this;
}

Piece& Piece::reflect_y() {
  for (auto& it : items_) it.p.y = -it.p.y;
  std::swap(miny_, maxy_);
  miny_ = -miny_;
  maxy_ = -maxy_;
  return *this;
}

Piece& Piece::append(const Piece& other) {
  if (other.empty()) return *this;
  if (empty()) {
    *this = other;
    return *this;
  }
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  minx_ = std::min(minx_, other.minx_);
  maxx_ = std::max(maxx_, other.maxx_);
  miny_ = std::min(miny_, other.miny_);
  maxy_ = std::max(maxy_, other.maxy_);
  return *this;
}

std::vector<Point> Piece::to_points(int n) const {
  std::vector<Point> pts(n);
  std::vector<bool> seen(n, false);
  for (const auto& it : items_) {
    if (it.id < 0 || it.id >= n || seen[it.id]) throw std::logic_error("Piece::to_points: bad or repeated id");
    seen[it.id] = true;
    pts[it.id] = it.p;
  }
  if (static_cast<int>(items_.size()) != n) throw std::logic_error("Piece::to_points: missing nodes");
  return pts;
}

Piece stack_down(std::vector<Piece> blocks) {
  Piece out;
  bool first = true;
  std::int64_t next_top = 0;
  for (auto& b : blocks) {
    if (b.empty()) continue;
    if (!first) b.top_at(next_top);
    next_top = b.min_y() - 1;
    if (first) {
      out = std::move(b);
      first = false;
    } else {
      out.append(b);
    }
  }
  return out;
}

std::array<Point, 2> bell_apexes(const Piece& p) {
  return {Point{p.min_x() - 1, p.max_y() + 1}, Point{p.max_x() + 1, p.max_y() + 1}};
}

std::array<Point, 2> flat_apexes(const Piece& p) {
  // A single row would make the two apexes coincide.
  const std::int64_t top = p.max_y() > p.min_y() ? p.max_y() : p.max_y() + 1;
  return {Point{p.min_x() - 1, p.min_y()}, Point{p.min_x() - 1, top}};
}

GridDrawing finish_drawing(Piece p, int n, DrawingKind kind) {
  GridDrawing d;
  d.kind = kind;
  if (p.empty()) return d;
  p.translate(-p.min_x(), -p.max_y());
  d.points = p.to_points(n);
  if (kind == DrawingKind::BellLike) d.apexes = bell_apexes(p);
  if (kind == DrawingKind::Flat) d.apexes = flat_apexes(p);
  return d;
}

}  // namespace lrdraw
