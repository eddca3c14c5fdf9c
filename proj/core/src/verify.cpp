#include "lrdraw/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lrdraw {

using geom::Conflict;
using geom::Segment;
using geom::Where;

void VerifyReport::add(std::string property, std::vector<std::int64_t> witness, std::string detail) {
  violations.push_back({std::move(property), std::move(witness), std::move(detail)});
}

void VerifyReport::merge(const VerifyReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string VerifyReport::summary() const {
  if (pass()) return "pass";
  std::ostringstream os;
  const Violation& v = violations.front();
  os << v.property << " [";
  for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
  os << "]";
  if (!v.detail.empty()) os << " " << v.detail;
  if (violations.size() > 1) os << " (+" << violations.size() - 1 << " more)";
  return os.str();
}

namespace {

bool covers(const Tree& t, const GridDrawing& d, VerifyReport& rep) {
  if (static_cast<int>(d.points.size()) != t.size()) {
    rep.add("node-set", {t.size(), static_cast<std::int64_t>(d.points.size())},
            "drawing does not cover exactly the tree's nodes");
    return false;
  }
  return true;
}

struct Box {
  std::int64_t minx, maxx, miny, maxy;
};

void report_conflict(const Conflict& c, const std::vector<Segment>& segs, const std::string& prop,
                     VerifyReport& rep) {
  switch (c.kind) {
    case Conflict::None:
      return;
    case Conflict::DuplicatePoint:
      rep.add(prop, {c.i, c.j}, "two points coincide");
      return;
    case Conflict::PointOnSegment:
      rep.add(prop, {c.i, segs[c.j].a, segs[c.j].b}, "point lies on a segment");
      return;
    case Conflict::Crossing:
      rep.add(prop, {segs[c.i].a, segs[c.i].b, segs[c.j].a, segs[c.j].b}, "segments cross or overlap");
      return;
  }
}

}  // namespace

VerifyReport is_lr_drawing(const Tree& t, const GridDrawing& d) {
  VerifyReport rep;
  if (!covers(t, d, rep)) return rep;
  const auto& P = d.points;
  // one node per row
  {
    std::map<std::int64_t, int> rows;
    for (int v = 0; v < t.size(); ++v) {
      auto [it, fresh] = rows.emplace(P[v].y, v);
      if (!fresh) {
        rep.add("lr-row", {it->second, v}, "two nodes share a row");
        return rep;
      }
    }
  }
  std::vector<Box> box(t.size());
  auto order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    Box b{P[v].x, P[v].x, P[v].y, P[v].y};
    const int l = t.left(v), r = t.right(v);
    for (int c : {l, r}) {
      if (c == kNone) continue;
      if (P[c].y >= P[v].y) rep.add("lr-upward", {v, c}, "child not strictly below parent");
      b.minx = std::min(b.minx, box[c].minx), b.maxx = std::max(b.maxx, box[c].maxx);
      b.miny = std::min(b.miny, box[c].miny), b.maxy = std::max(b.maxy, box[c].maxy);
    }
    box[v] = b;
    if (l == kNone && r == kNone) continue;
    const Point p = P[v];
    // Left rule: L's box right side at x-1, top at y-1; R aligned, top one
    // unit below L's box (or below v when L is absent).
    auto left_rule = [&] {
      std::int64_t next_top = p.y - 1;
      if (l != kNone) {
        if (box[l].maxx != p.x - 1 || box[l].maxy != p.y - 1) return false;
        next_top = box[l].miny - 1;
      }
      if (r != kNone && (P[r].x != p.x || box[r].maxy != next_top)) return false;
      return true;
    };
    auto right_rule = [&] {
      std::int64_t next_top = p.y - 1;
      if (r != kNone) {
        if (box[r].minx != p.x + 1 || box[r].maxy != p.y - 1) return false;
        next_top = box[r].miny - 1;
      }
      if (l != kNone && (P[l].x != p.x || box[l].maxy != next_top)) return false;
      return true;
    };
    if (!left_rule() && !right_rule())
      rep.add("lr-rule", {v}, "layout at node matches neither the left nor the right rule");
  }
  return rep;
}

VerifyReport is_planar_straightline(const std::vector<Point>& points, const std::vector<Segment>& segments) {
  VerifyReport rep;
  for (const auto& s : segments) {
    if (s.a < 0 || s.b < 0 || s.a >= static_cast<int>(points.size()) ||
        s.b >= static_cast<int>(points.size()) || s.a == s.b) {
      rep.add("planarity", {s.a, s.b}, "bad segment endpoints");
      return rep;
    }
  }
  report_conflict(geom::find_planarity_conflict(points, segments), segments, "planarity", rep);
  return rep;
}

std::vector<int> star_polygon(const Tree& t, int s, bool left) {
  std::vector<int> cyc{s};
  int v = left ? t.left(s) : t.right(s);
  while (v != kNone) {
    cyc.push_back(v);
    v = left ? t.right(v) : t.left(v);
  }
  if (cyc.size() < 3) return {};
  return cyc;
}

namespace {

// Shared state for the star-shaped checks.
struct StarContext {
  const Tree& t;
  const GridDrawing& d;
  std::vector<std::vector<int>> poly_ids;   // node ids, first is the owner s
  std::vector<std::vector<Point>> polys;    // same, as points
  std::vector<Segment> tree_edges;
  std::vector<Segment> all_edges;           // tree edges + closing edges

  StarContext(const Tree& tree, const GridDrawing& dr) : t(tree), d(dr) {
    for (int v = 0; v < t.size(); ++v) {
      if (t.left(v) != kNone) tree_edges.push_back({v, t.left(v)});
      if (t.right(v) != kNone) tree_edges.push_back({v, t.right(v)});
    }
    all_edges = tree_edges;
    for (int s = 0; s < t.size(); ++s) {
      for (bool left : {true, false}) {
        auto cyc = star_polygon(t, s, left);
        if (cyc.empty()) continue;
        all_edges.push_back({cyc.front(), cyc.back()});
        std::vector<Point> pts;
        for (int v : cyc) pts.push_back(d.points[v]);
        poly_ids.push_back(std::move(cyc));
        polys.push_back(std::move(pts));
      }
    }
  }
};

void property1(const StarContext& c, VerifyReport& rep) {
  report_conflict(geom::find_planarity_conflict(c.d.points, c.tree_edges), c.tree_edges, "property1-planar", rep);
  const auto& P = c.d.points;
  for (int s = 0; s < c.t.size(); ++s) {
    const int par = c.t.parent(s), l = c.t.left(s), r = c.t.right(s);
    if (par == kNone || l == kNone || r == kNone) continue;
    auto dir = [&](int v) { return Point{P[v].x - P[s].x, P[v].y - P[s].y}; };
    if (!geom::ccw_before(dir(par), dir(l), dir(r)))
      rep.add("property1-order", {s, par, l, r}, "parent, left, right not in counter-clockwise order");
  }
}

void property2(const StarContext& c, VerifyReport& rep) {
  for (std::size_t k = 0; k < c.polys.size(); ++k) {
    const auto& q = c.polys[k];
    const auto& ids = c.poly_ids[k];
    const std::size_t m = q.size();
    bool simple = true;
    for (std::size_t i = 0; i < m && simple; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (geom::segments_conflict(q[i], q[(i + 1) % m], q[j], q[(j + 1) % m])) {
          rep.add("property2-simple", {ids[0], ids[i], ids[(i + 1) % m], ids[j], ids[(j + 1) % m]},
                  "polygon edges intersect");
          simple = false;
          break;
        }
      }
    }
    if (!simple) continue;
    std::vector<Point> doubled;
    for (const Point& p : q) doubled.push_back(geom::scaled(p, 2));
    for (std::size_t j = 2; j + 1 < m; ++j) {
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) {
        if (geom::segments_conflict(q[0], q[j], q[i], q[(i + 1) % m])) ok = false;
      }
      if (ok) {
        Point mid{q[0].x + q[j].x, q[0].y + q[j].y};
        ok = geom::point_in_polygon(mid, doubled) == Where::Inside;
      }
      if (!ok) rep.add("property2-visibility", {ids[0], ids[j]}, "segment from s to a polygon vertex leaves the polygon");
    }
  }
}

void property3(const StarContext& c, const StarOptions& opt, VerifyReport& rep) {
  const auto before = rep.violations.size();
  report_conflict(geom::find_planarity_conflict(c.d.points, c.all_edges), c.all_edges, "property3-planar", rep);
  if (rep.violations.size() != before) return;
  geom::PolygonIndex index(c.polys, geom::kProbeScale);
  for (std::size_t k = 0; k < c.polys.size(); ++k) {
    Point probe;
    if (!geom::interior_probe(c.polys[k], probe)) {
      rep.add("property3-degenerate", {c.poly_ids[k][0]}, "polygon has no interior");
      continue;
    }
    int hit = index.strictly_inside(probe, static_cast<int>(k));
    if (opt.exhaustive) {
      int slow = -1;
      for (std::size_t o = 0; o < c.polys.size() && slow < 0; ++o) {
        if (o == k) continue;
        std::vector<Point> sc;
        for (const Point& p : c.polys[o]) sc.push_back(geom::scaled(p, geom::kProbeScale));
        if (geom::point_in_polygon(probe, sc) == Where::Inside) slow = static_cast<int>(o);
      }
      if ((slow < 0) != (hit < 0))
        rep.add("property3-index", {c.poly_ids[k][0]}, "indexed and exhaustive containment disagree");
      if (hit < 0) hit = slow;
    }
    if (hit >= 0)
      rep.add("property3-nested", {c.poly_ids[k][0], c.poly_ids[hit][0]}, "polygon lies inside another polygon");
  }
  for (int v = 0; v < c.t.size(); ++v) {
    int hit = index.strictly_inside(geom::scaled(c.d.points[v], geom::kProbeScale));
    if (hit >= 0) rep.add("property3-node-inside", {v, c.poly_ids[hit][0]}, "node lies inside a polygon");
  }
}

void property4(const StarContext& c, const Point& pu, const Point& pv, VerifyReport& rep) {
  std::vector<Point> pts = c.d.points;
  const int iu = static_cast<int>(pts.size());
  pts.push_back(pu);
  pts.push_back(pv);
  const int iv = iu + 1;
  std::vector<Segment> segs = c.all_edges;
  for (int v = c.t.root(); v != kNone; v = c.t.left(v)) segs.push_back({iu, v});
  for (int v = c.t.root(); v != kNone; v = c.t.right(v)) segs.push_back({iv, v});
  segs.push_back({iu, iv});
  const auto before = rep.violations.size();
  report_conflict(geom::find_planarity_conflict(pts, segs), segs, "property4-planar", rep);
  if (rep.violations.size() != before) return;
  geom::PolygonIndex index(c.polys, geom::kProbeScale);
  for (int i : {iu, iv}) {
    int hit = index.strictly_inside(geom::scaled(pts[i], geom::kProbeScale));
    if (hit >= 0)
      rep.add("property4-apex-inside", {pts[i].x, pts[i].y, c.poly_ids[hit][0]}, "apex lies inside a polygon");
  }
}

}  // namespace

VerifyReport is_star_shaped(const Tree& t, const GridDrawing& d, const StarOptions& opt) {
  VerifyReport rep;
  if (!covers(t, d, rep)) return rep;
  if (!d.apexes) {
    rep.add("property4-apexes", {}, "drawing has no apexes");
    return rep;
  }
  StarContext c(t, d);
  property1(c, rep);
  if (!rep.pass()) return rep;
  property2(c, rep);
  property3(c, opt, rep);
  if (!rep.pass()) return rep;
  property4(c, (*d.apexes)[0], (*d.apexes)[1], rep);
  return rep;
}

VerifyReport check_apexes(const Tree& t, const GridDrawing& d, const Point& pu, const Point& pv) {
  VerifyReport rep;
  if (!covers(t, d, rep)) return rep;
  StarContext c(t, d);
  property4(c, pu, pv, rep);
  return rep;
}

VerifyReport is_bell_like(const Tree& t, const GridDrawing& d) {
  VerifyReport rep;
  if (!covers(t, d, rep)) return rep;
  if (d.points[t.root()].y != d.max_y()) {
    rep.add("bell-root-top", {t.root()}, "root is not on the top side of the bounding box");
    return rep;
  }
  StarContext c(t, d);
  for (std::int64_t o : {1, 3, 17}) {
    Point pu{d.min_x() - o, d.max_y() + o};
    Point pv{d.max_x() + o, d.max_y() + o};
    VerifyReport r;
    property4(c, pu, pv, r);
    for (auto& v : r.violations) v.property = "bell-apex-" + std::to_string(o) + ":" + v.property;
    rep.merge(r);
    if (!rep.pass()) break;
  }
  return rep;
}

VerifyReport is_flat(const Tree& t, const GridDrawing& d) {
  VerifyReport rep;
  if (!covers(t, d, rep)) return rep;
  const std::int64_t minx = d.min_x();
  const auto& P = d.points;
  for (int v = t.root(); v != kNone; v = t.left(v)) {
    if (P[v].x != minx) rep.add("flat-left-side", {v}, "leftmost path node not on the left side");
    int c = t.left(v);
    if (c != kNone && !(P[v].y > P[c].y))
      rep.add("flat-monotone", {v, c}, "leftmost path not strictly descending");
  }
  for (int v = t.root(); v != kNone; v = t.right(v)) {
    if (P[v].x != minx) rep.add("flat-left-side", {v}, "rightmost path node not on the left side");
    int c = t.right(v);
    if (c != kNone && !(P[v].y < P[c].y))
      rep.add("flat-monotone", {v, c}, "rightmost path not strictly ascending");
  }
  return rep;
}

namespace {

// Vertices met when walking the outer face of a connected plane straight-line graph.
std::vector<char> outer_face_vertices(const std::vector<Point>& P, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(P.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) {
      return geom::angle_less({P[a].x - P[v].x, P[a].y - P[v].y}, {P[b].x - P[v].x, P[b].y - P[v].y});
    });
  }
  std::vector<char> on(n, 0);
  int v0 = 0;
  for (int v = 1; v < n; ++v)
    if (P[v].y < P[v0].y || (P[v].y == P[v0].y && P[v].x < P[v0].x)) v0 = v;
  if (adj[v0].empty()) {
    on[v0] = 1;
    return on;
  }
  // All neighbours of the lowest point lie in [0, pi); the outer face is to
  // the left of the edge towards the largest angle.
  int u = v0, w = adj[v0].back();
  const int su = u, sw = w;
  std::size_t guard = 0;
  do {
    on[u] = 1;
    // next: neighbour of w immediately clockwise from u
    const auto& A = adj[w];
    auto it = std::find(A.begin(), A.end(), u);
    std::size_t k = static_cast<std::size_t>(it - A.begin());
    int next = A[(k + A.size() - 1) % A.size()];
    u = w;
    w = next;
  } while ((u != su || w != sw) && ++guard <= 4 * edges.size() + 4);
  return on;
}

// Slow check: some ray from v avoids every edge not incident to v.
bool sees_infinity(const std::vector<Point>& P, const std::vector<std::pair<int, int>>& edges, int v) {
  std::vector<Point> dirs;
  for (int u = 0; u < static_cast<int>(P.size()); ++u)
    if (u != v) dirs.push_back({P[u].x - P[v].x, P[u].y - P[v].y});
  std::sort(dirs.begin(), dirs.end(), geom::angle_less);
  std::vector<Point> rays;
  if (dirs.empty()) return true;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Point& a = dirs[i];
    const Point& b = dirs[(i + 1) % dirs.size()];
    geom::i128 cr = static_cast<geom::i128>(a.x) * b.y - static_cast<geom::i128>(a.y) * b.x;
    if (dirs.size() == 1 || cr <= 0) {
      // gap of at least pi (or a repeated direction): a quarter turn lands inside it unless repeated
      if (cr == 0 && (static_cast<geom::i128>(a.x) * b.x + static_cast<geom::i128>(a.y) * b.y) > 0 && dirs.size() > 1)
        continue;
      rays.push_back({-a.y, a.x});
    } else {
      // scale to a common length-ish so the sum lies strictly between
      rays.push_back({a.x * (std::abs(b.x) + std::abs(b.y)) + b.x * (std::abs(a.x) + std::abs(a.y)),
                      a.y * (std::abs(b.x) + std::abs(b.y)) + b.y * (std::abs(a.x) + std::abs(a.y))});
    }
  }
  if (rays.empty()) rays.push_back({-dirs[0].y, dirs[0].x});
  std::int64_t far = 1;
  for (const Point& p : P) far = std::max({far, std::abs(p.x), std::abs(p.y)});
  for (const Point& r : rays) {
    std::int64_t len = std::max<std::int64_t>(1, std::abs(r.x) + std::abs(r.y));
    std::int64_t k = (4 * far) / len + 2;
    Point end{P[v].x + r.x * k, P[v].y + r.y * k};
    bool blocked = false;
    for (auto [a, b] : edges) {
      if (a == v || b == v) continue;
      if (geom::segments_intersect(P[v], end, P[a], P[b])) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return true;
  }
  return false;
}

}  // namespace

VerifyReport is_outerplanar_drawing(const OuterplanarGraph& g, const GridDrawing& d, const OuterplanarOptions& opt) {
  VerifyReport rep;
  if (static_cast<int>(d.points.size()) != g.n) {
    rep.add("vertex-set", {g.n, static_cast<std::int64_t>(d.points.size())}, "drawing does not cover the graph");
    return rep;
  }
  auto edges = g.edges();
  std::vector<Segment> segs;
  for (auto [a, b] : edges) segs.push_back({a, b});
  report_conflict(geom::find_planarity_conflict(d.points, segs), segs, "outerplanar-planar", rep);
  if (!rep.pass()) return rep;
  if (opt.exhaustive) {
    for (int v = 0; v < g.n; ++v)
      if (!sees_infinity(d.points, edges, v)) rep.add("outerplanar-outer-face", {v}, "vertex not on the outer face");
  } else {
    auto on = outer_face_vertices(d.points, edges);
    for (int v = 0; v < g.n; ++v)
      if (!on[v]) rep.add("outerplanar-outer-face", {v}, "vertex not on the outer face");
  }
  return rep;
}

}  // namespace lrdraw
