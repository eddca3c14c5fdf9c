#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "lrdraw/io.hpp"

namespace lrdraw {

using nlohmann::json;

std::string to_string(DrawingKind k) {
  switch (k) {
    case DrawingKind::LR: return "lr";
    case DrawingKind::BellLike: return "bell-like";
    case DrawingKind::Flat: return "flat";
    case DrawingKind::Outerplanar: return "outerplanar";
  }
  return "lr";
}

DrawingKind drawing_kind_from_string(const std::string& s) {
  if (s == "lr") return DrawingKind::LR;
  if (s == "bell-like" || s == "bell") return DrawingKind::BellLike;
  if (s == "flat") return DrawingKind::Flat;
  if (s == "outerplanar") return DrawingKind::Outerplanar;
  throw std::invalid_argument("unknown drawing kind '" + s + "'");
}

namespace {

template <class F>
std::int64_t extreme(const std::vector<Point>& pts, F key, bool want_max) {
  if (pts.empty()) return 0;
  std::int64_t best = key(pts[0]);
  for (const auto& p : pts) best = want_max ? std::max(best, key(p)) : std::min(best, key(p));
  return best;
}

std::vector<Point> with_apexes(const GridDrawing& d) {
  std::vector<Point> pts = d.points;
  if (d.apexes) pts.insert(pts.end(), d.apexes->begin(), d.apexes->end());
  return pts;
}

}  // namespace

std::int64_t GridDrawing::min_x() const { return extreme(points, [](Point p) { return p.x; }, false); }
std::int64_t GridDrawing::max_x() const { return extreme(points, [](Point p) { return p.x; }, true); }
std::int64_t GridDrawing::min_y() const { return extreme(points, [](Point p) { return p.y; }, false); }
std::int64_t GridDrawing::max_y() const { return extreme(points, [](Point p) { return p.y; }, true); }

std::int64_t GridDrawing::apex_width() const {
  auto pts = with_apexes(*this);
  if (pts.empty()) return 0;
  return extreme(pts, [](Point p) { return p.x; }, true) - extreme(pts, [](Point p) { return p.x; }, false) + 1;
}

std::int64_t GridDrawing::apex_height() const {
  auto pts = with_apexes(*this);
  if (pts.empty()) return 0;
  return extreme(pts, [](Point p) { return p.y; }, true) - extreme(pts, [](Point p) { return p.y; }, false) + 1;
}

std::string drawing_to_json(const GridDrawing& d, int indent) {
  json j;
  j["kind"] = to_string(d.kind);
  j["points"] = json::array();
  for (std::size_t i = 0; i < d.points.size(); ++i)
    j["points"].push_back({{"id", i}, {"x", d.points[i].x}, {"y", d.points[i].y}});
  if (d.apexes) {
    j["apexes"] = json::array();
    for (const auto& a : *d.apexes) j["apexes"].push_back({a.x, a.y});
  }
  return j.dump(indent);
}

GridDrawing drawing_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    GridDrawing d;
    d.kind = drawing_kind_from_string(j.at("kind").get<std::string>());
    const auto& pts = j.at("points");
    d.points.assign(pts.size(), Point{});
    std::vector<bool> seen(pts.size(), false);
    for (const auto& p : pts) {
      auto id = p.at("id").get<long long>();
      if (id < 0 || id >= static_cast<long long>(pts.size()) || seen[id])
        throw std::invalid_argument("point ids must be a permutation of 0..n-1");
      seen[id] = true;
      d.points[id] = {p.at("x").get<std::int64_t>(), p.at("y").get<std::int64_t>()};
    }
    if (j.contains("apexes") && !j["apexes"].is_null()) {
      const auto& a = j["apexes"];
      if (!a.is_array() || a.size() != 2) throw std::invalid_argument("apexes must hold two points");
      std::array<Point, 2> ap;
      for (int i = 0; i < 2; ++i) {
        if (!a[i].is_array() || a[i].size() != 2) throw std::invalid_argument("apex must be [x, y]");
        ap[i] = {a[i][0].get<std::int64_t>(), a[i][1].get<std::int64_t>()};
      }
      d.apexes = ap;
    }
    return d;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad drawing JSON: ") + e.what());
  }
}

std::string repseq_to_json(const RepSeq& s) { return json(s.values).dump(); }

RepSeq repseq_from_json(std::string_view text) {
  try {
    return RepSeq{json::parse(text).get<std::vector<int>>()};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad sequence JSON: ") + e.what());
  }
}

std::string report_to_json(const VerifyReport& r, int indent) {
  json j;
  j["pass"] = r.pass();
  j["violations"] = json::array();
  for (const auto& v : r.violations) {
    json x{{"property", v.property}, {"witness", v.witness}};
    if (!v.detail.empty()) x["detail"] = v.detail;
    j["violations"].push_back(std::move(x));
  }
  return j.dump(indent);
}

std::string gamma_to_json(const Tree& t, const std::vector<int>& gamma, int u_star, int v_star, int indent) {
  json j{{"tree", serialize_tree(t)}, {"u_star", u_star}, {"v_star", v_star}, {"gamma", gamma}};
  return j.dump(indent);
}

std::vector<std::pair<int, int>> tree_edges(const Tree& t) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < t.size(); ++v)
    for (Dir d : {Dir::Left, Dir::Right})
      if (t.child(v, d) != kNone) e.emplace_back(v, t.child(v, d));
  return e;
}

std::string render_svg(const GridDrawing& d, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::pair<Point, Point>>& dashed, const SvgStyle& st) {
  auto pts = with_apexes(d);
  std::int64_t x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  if (!pts.empty()) {
    x0 = extreme(pts, [](Point p) { return p.x; }, false);
    x1 = extreme(pts, [](Point p) { return p.x; }, true);
    y0 = extreme(pts, [](Point p) { return p.y; }, false);
    y1 = extreme(pts, [](Point p) { return p.y; }, true);
  }
  auto X = [&](std::int64_t x) { return st.margin + (x - x0) * st.scale; };
  auto Y = [&](std::int64_t y) { return st.margin + (y1 - y) * st.scale; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * st.margin + (x1 - x0) * st.scale
     << "\" height=\"" << 2 * st.margin + (y1 - y0) * st.scale << "\">\n";
  os << "<g stroke=\"black\" stroke-width=\"" << st.edge_width << "\">\n";
  for (auto [a, b] : edges) {
    const Point p = d.points.at(a), q = d.points.at(b);
    os << "<line x1=\"" << X(p.x) << "\" y1=\"" << Y(p.y) << "\" x2=\"" << X(q.x) << "\" y2=\"" << Y(q.y)
       << "\"/>\n";
  }
  for (auto [p, q] : dashed)
    os << "<line x1=\"" << X(p.x) << "\" y1=\"" << Y(p.y) << "\" x2=\"" << X(q.x) << "\" y2=\"" << Y(q.y)
       << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  os << "</g>\n<g fill=\"black\">\n";
  for (const auto& p : d.points)
    os << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"" << st.node_radius << "\"/>\n";
  if (d.apexes) {
    const double s = 2 * st.node_radius;
    for (const auto& a : *d.apexes)
      os << "<rect x=\"" << X(a.x) - st.node_radius << "\" y=\"" << Y(a.y) - st.node_radius << "\" width=\"" << s
         << "\" height=\"" << s << "\" fill=\"white\" stroke=\"black\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace lrdraw
