#include <gtest/gtest.h>

#include <regex>

#include "json.hpp"
#include "lrdraw/io.hpp"
#include "lrdraw/star_weak.hpp"

using namespace lrdraw;
using nlohmann::json;

namespace {
int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}
}  // namespace

TEST(DrawingJson, RoundTrip) {
  for (int s = 0; s < 50; ++s) {
    Tree t = random_tree(1 + s * 3, s);
    for (const GridDrawing& d : {optimal_lr_drawing(t).drawing, bell_like_drawing(t), flat_drawing(t)}) {
      GridDrawing back = drawing_from_json(drawing_to_json(d, s % 2 ? 2 : -1));
      ASSERT_EQ(back.kind, d.kind);
      ASSERT_EQ(back.points, d.points);
      ASSERT_EQ(back.apexes.has_value(), d.apexes.has_value());
      if (d.apexes) ASSERT_EQ(*back.apexes, *d.apexes);
    }
  }
}

TEST(DrawingJson, Schema) {
  GridDrawing d = bell_like_drawing(complete_tree(2));
  json j = json::parse(drawing_to_json(d));
  EXPECT_EQ(j["kind"], "bell-like");
  ASSERT_EQ(j["points"].size(), 3u);
  for (const auto& p : j["points"]) {
    EXPECT_TRUE(p.contains("id"));
    EXPECT_TRUE(p.contains("x"));
    EXPECT_TRUE(p.contains("y"));
  }
  ASSERT_EQ(j["apexes"].size(), 2u);
  EXPECT_EQ(j["apexes"][0].size(), 2u);
  EXPECT_FALSE(json::parse(drawing_to_json(optimal_lr_drawing(single_node()).drawing)).contains("apexes"));
}

TEST(DrawingJson, PointsInAnyOrder) {
  GridDrawing d = drawing_from_json(
      R"({"kind":"lr","points":[{"id":1,"x":-1,"y":-1},{"id":0,"x":0,"y":0}]})");
  ASSERT_EQ(d.points.size(), 2u);
  EXPECT_EQ(d.points[0], (Point{0, 0}));
  EXPECT_EQ(d.points[1], (Point{-1, -1}));
}

TEST(DrawingJson, Rejects) {
  EXPECT_THROW(drawing_from_json("{"), std::invalid_argument);
  EXPECT_THROW(drawing_from_json(R"({"kind":"oval","points":[]})"), std::invalid_argument);
  EXPECT_THROW(drawing_from_json(R"({"kind":"lr","points":[{"id":0,"x":0,"y":0},{"id":0,"x":1,"y":0}]})"),
               std::invalid_argument);
  EXPECT_THROW(drawing_from_json(R"({"kind":"lr","points":[{"id":1,"x":0,"y":0}]})"), std::invalid_argument);
  EXPECT_THROW(drawing_from_json(R"({"kind":"lr","points":[{"id":0,"x":"a","y":0}]})"), std::invalid_argument);
}

TEST(RepSeqJson, RoundTrip) {
  RepSeq s{{6, 5, 5, 3, 3, 1, 0}};
  EXPECT_EQ(repseq_to_json(s), "[6,5,5,3,3,1,0]");
  EXPECT_EQ(repseq_from_json(repseq_to_json(s)), s);
  EXPECT_THROW(repseq_from_json("{}"), std::invalid_argument);
}

TEST(ReportJson, Schema) {
  VerifyReport r;
  json ok = json::parse(report_to_json(r));
  EXPECT_EQ(ok["pass"], true);
  EXPECT_TRUE(ok["violations"].empty());
  r.add("planarity", {1, 2}, "segments cross");
  json bad = json::parse(report_to_json(r));
  EXPECT_EQ(bad["pass"], false);
  EXPECT_EQ(bad["violations"][0]["property"], "planarity");
  EXPECT_EQ(bad["violations"][0]["witness"], json::array({1, 2}));
}

TEST(GammaJson, Schema) {
  json j = json::parse(gamma_to_json(parse_tree("((..).)"), {2, 3}, 0, 1));
  EXPECT_EQ(j["tree"], "((..).)");
  EXPECT_EQ(j["gamma"], json::array({2, 3}));
  EXPECT_EQ(j["u_star"], 0);
  EXPECT_EQ(j["v_star"], 1);
}

TEST(Svg, SingleNode) {
  GridDrawing d = optimal_lr_drawing(single_node()).drawing;
  std::string svg = render_svg(d, {});
  EXPECT_EQ(count(svg, "<circle"), 1);
  EXPECT_EQ(count(svg, "<line"), 0);
  EXPECT_NE(svg.find("r=\"5\""), std::string::npos);
}

TEST(Svg, ElementsAndFlip) {
  Tree t = parse_tree("((..).)");
  GridDrawing d = bell_like_drawing(t);
  std::string svg = render_svg(d, tree_edges(t), {{{0, 0}, {1, 1}}});
  EXPECT_EQ(count(svg, "<circle"), 2);
  EXPECT_EQ(count(svg, "<rect"), 2);
  EXPECT_EQ(count(svg, "stroke-dasharray"), 1);
  EXPECT_NE(svg.find("stroke-width=\"1.5\""), std::string::npos);
  // the root is above its child, so its screen y is smaller
  std::regex cy("cy=\"(-?[0-9.]+)\"");
  std::vector<double> ys;
  for (std::sregex_iterator it(svg.begin(), svg.end(), cy), end; it != end; ++it) ys.push_back(std::stod((*it)[1]));
  ASSERT_EQ(ys.size(), 2u);
  EXPECT_LT(ys[0], ys[1]);
  EXPECT_DOUBLE_EQ(ys[1] - ys[0], 24.0 * (d.points[0].y - d.points[1].y));
}

TEST(TreeEdges, ParentChildPairs) {
  auto e = tree_edges(complete_tree(2));
  EXPECT_EQ(e.size(), 2u);
  for (auto [a, b] : e) EXPECT_EQ(a, 0);
}

TEST(DrawingKind, Strings) {
  for (auto k : {DrawingKind::LR, DrawingKind::BellLike, DrawingKind::Flat, DrawingKind::Outerplanar})
    EXPECT_EQ(drawing_kind_from_string(to_string(k)), k);
  EXPECT_EQ(drawing_kind_from_string("bell"), DrawingKind::BellLike);
  EXPECT_THROW(drawing_kind_from_string("x"), std::invalid_argument);
}
