#include "lrdraw/geometry.hpp"

#include <algorithm>
#include <unordered_map>

namespace lrdraw::geom {

namespace {

bool in_box(const Point& p, const Point& a, const Point& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool on_segment(const Point& p, const Point& a, const Point& b) {
  return orient(a, b, p) == 0 && in_box(p, a, b);
}

bool in_segment_interior(const Point& p, const Point& a, const Point& b) {
  return !(p == a) && !(p == b) && on_segment(p, a, b);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && in_box(c, a, b)) return true;
  if (o2 == 0 && in_box(d, a, b)) return true;
  if (o3 == 0 && in_box(a, c, d)) return true;
  if (o4 == 0 && in_box(b, c, d)) return true;
  return false;
}

bool segments_conflict(const Point& a, const Point& b, const Point& c, const Point& d) {
  Point shared;
  Point u, v;  // the non-shared endpoints
  if (a == c) {
    shared = a, u = b, v = d;
  } else if (a == d) {
    shared = a, u = b, v = c;
  } else if (b == c) {
    shared = b, u = a, v = d;
  } else if (b == d) {
    shared = b, u = a, v = c;
  } else {
    return segments_intersect(a, b, c, d);
  }
  if (u == v) return true;  // identical segments
  // Two segments from a common endpoint meet elsewhere only if they point
  // the same way along one line.
  if (orient(shared, u, v) != 0) return false;
  i128 dot = static_cast<i128>(u.x - shared.x) * (v.x - shared.x) +
             static_cast<i128>(u.y - shared.y) * (v.y - shared.y);
  return dot > 0;
}

Where point_in_polygon(const Point& p, const std::vector<Point>& poly) {
  const std::size_t m = poly.size();
  bool inside = false;
  for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
    const Point& a = poly[i];
    const Point& b = poly[j];
    if (on_segment(p, a, b)) return Where::Boundary;
    if ((a.y > p.y) != (b.y > p.y)) {
      // x-coordinate of the crossing compared with p.x, exactly.
      i128 lhs = static_cast<i128>(p.x - a.x) * (b.y - a.y);
      i128 rhs = static_cast<i128>(b.x - a.x) * (p.y - a.y);
      bool left_of_crossing = (b.y - a.y) > 0 ? lhs < rhs : lhs > rhs;
      if (left_of_crossing) inside = !inside;
    }
  }
  return inside ? Where::Inside : Where::Outside;
}

bool angle_less(const Point& a, const Point& b) {
  auto half = [](const Point& p) { return p.y < 0 || (p.y == 0 && p.x < 0); };
  bool ha = half(a), hb = half(b);
  if (ha != hb) return !ha;
  return static_cast<i128>(a.x) * b.y - static_cast<i128>(a.y) * b.x > 0;
}

bool ccw_before(const Point& a, const Point& b, const Point& c) {
  // Angles measured counter-clockwise from a, in [0, 2pi).
  auto half = [&](const Point& p) {
    i128 cr = static_cast<i128>(a.x) * p.y - static_cast<i128>(a.y) * p.x;
    i128 dt = static_cast<i128>(a.x) * p.x + static_cast<i128>(a.y) * p.y;
    return !(cr > 0 || (cr == 0 && dt > 0));
  };
  bool hb = half(b), hc = half(c);
  if (hb != hc) return !hb;
  return static_cast<i128>(b.x) * c.y - static_cast<i128>(b.y) * c.x > 0;
}

bool interior_probe(const std::vector<Point>& poly_in, Point& out) {
  // Drop repeated and collinear-consecutive vertices.
  std::vector<Point> poly;
  for (const Point& p : poly_in)
    if (poly.empty() || !(poly.back() == p)) poly.push_back(p);
  while (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < poly.size() && poly.size() >= 3; ++i) {
      const Point& a = poly[(i + poly.size() - 1) % poly.size()];
      const Point& b = poly[(i + 1) % poly.size()];
      if (orient(a, poly[i], b) == 0) {
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (poly.size() < 3) return false;
  const std::size_t m = poly.size();
  std::size_t vi = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (poly[i].y < poly[vi].y || (poly[i].y == poly[vi].y && poly[i].x < poly[vi].x)) vi = i;
  const Point& a = poly[(vi + m - 1) % m];
  const Point& v = poly[vi];
  const Point& b = poly[(vi + 1) % m];
  const int side = orient(a, b, v);
  const int turn = orient(a, v, b);
  const Point* best = nullptr;
  i128 best_dist = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == vi || i == (vi + 1) % m || i == (vi + m - 1) % m) continue;
    const Point& q = poly[i];
    // strictly inside triangle a, v, b
    if (orient(a, v, q) != turn || orient(v, b, q) != turn || orient(b, a, q) != turn) continue;
    i128 d = cross(a, b, q) * side;
    if (!best || d > best_dist) {
      best = &q;
      best_dist = d;
    }
  }
  constexpr std::int64_t s = kProbeScale;
  if (!best) {
    out = {(a.x + v.x + b.x) * (s / 3), (a.y + v.y + b.y) * (s / 3)};
  } else {
    out = {(v.x + best->x) * (s / 2), (v.y + best->y) * (s / 2)};
  }
  return true;
}

namespace {

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    return std::hash<std::int64_t>()(p.x * 0x9E3779B97F4A7C15LL ^ p.y);
  }
};

// Splits [ymin, ymax] into at most `target` buckets of equal height.
struct Rows {
  std::int64_t y0 = 0, h = 1, count = 1;
  Rows(std::int64_t ymin, std::int64_t ymax, std::int64_t target) {
    y0 = ymin;
    std::int64_t span = ymax - ymin + 1;
    h = std::max<std::int64_t>(1, (span + target - 1) / target);
    count = (span + h - 1) / h;
  }
  std::int64_t of(std::int64_t y) const { return (y - y0) / h; }
};

}  // namespace

Conflict find_planarity_conflict(const std::vector<Point>& pts, const std::vector<Segment>& segs) {
  Conflict res;
  {
    std::unordered_map<Point, int, PointHash> seen;
    seen.reserve(pts.size() * 2);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      auto [it, fresh] = seen.emplace(pts[i], i);
      if (!fresh) return {Conflict::DuplicatePoint, it->second, i};
    }
  }
  if (pts.empty()) return res;
  std::int64_t ymin = pts[0].y, ymax = pts[0].y;
  for (const Point& p : pts) ymin = std::min(ymin, p.y), ymax = std::max(ymax, p.y);
  Rows rows(ymin, ymax, std::max<std::int64_t>(1, static_cast<std::int64_t>(segs.size())));
  std::vector<std::vector<int>> bucket(static_cast<std::size_t>(rows.count));
  std::vector<std::int64_t> lo(segs.size());
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    const Point& a = pts[segs[s].a];
    const Point& b = pts[segs[s].b];
    std::int64_t r0 = rows.of(std::min(a.y, b.y)), r1 = rows.of(std::max(a.y, b.y));
    lo[s] = r0;
    for (std::int64_t r = r0; r <= r1; ++r) bucket[r].push_back(s);
  }
  for (std::int64_t r = 0; r < rows.count; ++r) {
    const auto& B = bucket[r];
    for (std::size_t x = 0; x < B.size(); ++x) {
      const int s = B[x];
      const Point& a = pts[segs[s].a];
      const Point& b = pts[segs[s].b];
      const std::int64_t sx0 = std::min(a.x, b.x), sx1 = std::max(a.x, b.x);
      for (std::size_t y = x + 1; y < B.size(); ++y) {
        const int t = B[y];
        if (std::max(lo[s], lo[t]) != r) continue;  // pair handled in its first shared row
        const Point& c = pts[segs[t].a];
        const Point& d = pts[segs[t].b];
        if (std::max(c.x, d.x) < sx0 || std::min(c.x, d.x) > sx1) continue;
        if (std::max(c.y, d.y) < std::min(a.y, b.y) || std::min(c.y, d.y) > std::max(a.y, b.y)) continue;
        if (segments_conflict(a, b, c, d)) return {Conflict::Crossing, std::min(s, t), std::max(s, t)};
      }
    }
  }
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    const Point& p = pts[i];
    for (int s : bucket[rows.of(p.y)]) {
      if (segs[s].a == i || segs[s].b == i) continue;
      if (in_segment_interior(p, pts[segs[s].a], pts[segs[s].b]))
        return {Conflict::PointOnSegment, i, s};
    }
  }
  return res;
}

PolygonIndex::PolygonIndex(const std::vector<std::vector<Point>>& polys, std::int64_t scale)
    : polys_(polys), scale_(scale) {
  box_.reserve(polys.size());
  std::int64_t ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& poly : polys) {
    std::array<std::int64_t, 4> bx{poly[0].x, poly[0].x, poly[0].y, poly[0].y};
    for (const Point& p : poly) {
      bx[0] = std::min(bx[0], p.x), bx[1] = std::max(bx[1], p.x);
      bx[2] = std::min(bx[2], p.y), bx[3] = std::max(bx[3], p.y);
    }
    box_.push_back(bx);
    if (first) ymin = bx[2], ymax = bx[3], first = false;
    ymin = std::min(ymin, bx[2]), ymax = std::max(ymax, bx[3]);
  }
  Rows rows(ymin, ymax, std::max<std::int64_t>(1, static_cast<std::int64_t>(polys.size())));
  y0_ = rows.y0;
  bucket_h_ = rows.h;
  buckets_.resize(static_cast<std::size_t>(rows.count));
  for (int i = 0; i < static_cast<int>(polys.size()); ++i)
    for (std::int64_t r = rows.of(box_[i][2]); r <= rows.of(box_[i][3]); ++r) buckets_[r].push_back(i);
}

int PolygonIndex::strictly_inside(const Point& p, int skip) const {
  if (buckets_.empty()) return -1;
  // Row of p in unscaled units, rounded down.
  std::int64_t y = p.y >= 0 ? p.y / scale_ : -((-p.y + scale_ - 1) / scale_);
  std::int64_t r = y - y0_;
  if (r < 0) return -1;
  r /= bucket_h_;
  if (r >= static_cast<std::int64_t>(buckets_.size())) return -1;
  std::vector<Point> scaled_poly;
  for (int i : buckets_[r]) {
    if (i == skip) continue;
    const auto& bx = box_[i];
    if (p.x <= bx[0] * scale_ || p.x >= bx[1] * scale_ || p.y <= bx[2] * scale_ || p.y >= bx[3] * scale_)
      continue;
    scaled_poly.clear();
    for (const Point& q : polys_[i]) scaled_poly.push_back(scaled(q, scale_));
    if (point_in_polygon(p, scaled_poly) == Where::Inside) return i;
  }
  return -1;
}

}  // namespace lrdraw::geom
