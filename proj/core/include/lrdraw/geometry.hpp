#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "lrdraw/drawing.hpp"

namespace lrdraw::geom {

using i128 = __int128;

inline i128 cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<i128>(a.x - o.x) * (b.y - o.y) - static_cast<i128>(a.y - o.y) * (b.x - o.x);
}
inline int orient(const Point& o, const Point& a, const Point& b) {
  i128 c = cross(o, a, b);
  return (c > 0) - (c < 0);
}

// p on the closed segment ab.
bool on_segment(const Point& p, const Point& a, const Point& b);
// p on segment ab but not at an endpoint.
bool in_segment_interior(const Point& p, const Point& a, const Point& b);
// Any common point at all.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);
// Common point other than a shared endpoint. Segments sharing an endpoint
// conflict only when they overlap along a line.
bool segments_conflict(const Point& a, const Point& b, const Point& c, const Point& d);

enum class Where { Outside, Boundary, Inside };
Where point_in_polygon(const Point& p, const std::vector<Point>& poly);

// True iff, rotating counter-clockwise from direction a, b comes strictly before c.
bool ccw_before(const Point& a, const Point& b, const Point& c);
// Angle order of direction vectors starting at the positive x axis.
bool angle_less(const Point& a, const Point& b);

inline constexpr std::int64_t kProbeScale = 6;
// A point strictly inside a simple polygon with non-zero area, in coordinates
// scaled by kProbeScale. Returns false for degenerate polygons.
bool interior_probe(const std::vector<Point>& poly, Point& out);

inline Point scaled(const Point& p, std::int64_t s) { return {p.x * s, p.y * s}; }

struct Segment {
  int a, b;  // point indices
};

struct Conflict {
  enum Kind { None, DuplicatePoint, PointOnSegment, Crossing } kind = None;
  int i = -1, j = -1;  // point or segment indices
};

// Exact planarity of a straight-line drawing: distinct points, no point in
// the interior of a segment, no two segments meeting except at shared
// endpoints. Row-bucketed to avoid the all-pairs scan.
Conflict find_planarity_conflict(const std::vector<Point>& pts, const std::vector<Segment>& segs);

// Finds the first polygon (by index) containing p strictly inside, using a
// row-bucket index over the polygons' bounding boxes. Points and polygons may
// be given at any common scale.
class PolygonIndex {
 public:
  PolygonIndex(const std::vector<std::vector<Point>>& polys, std::int64_t scale);
  // Index of some polygon containing p (scaled coords) strictly inside, skipping
  // `skip`; -1 if none.
  int strictly_inside(const Point& p_scaled, int skip = -1) const;

 private:
  const std::vector<std::vector<Point>>& polys_;
  std::int64_t scale_;
  std::int64_t y0_ = 0, bucket_h_ = 1;
  std::vector<std::array<std::int64_t, 4>> box_;  // minx, maxx, miny, maxy (unscaled)
  std::vector<std::vector<int>> buckets_;
};

}  // namespace lrdraw::geom
