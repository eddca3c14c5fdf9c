#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrdraw/drawing.hpp"
#include "lrdraw/lr_opt.hpp"
#include "lrdraw/tree.hpp"
#include "lrdraw/verify.hpp"

namespace lrdraw {

// {"kind": ..., "points": [{"id", "x", "y"}], "apexes": [[x, y], [x, y]]}
std::string drawing_to_json(const GridDrawing& d, int indent = -1);
// Throws std::invalid_argument on malformed input.
GridDrawing drawing_from_json(std::string_view text);

std::string repseq_to_json(const RepSeq& s);
RepSeq repseq_from_json(std::string_view text);

// {"pass": bool, "violations": [{"property", "witness", "detail"}]}
std::string report_to_json(const VerifyReport& r, int indent = -1);

// {"tree": "<text>", "u_star": u, "v_star": v, "gamma": [...]}
std::string gamma_to_json(const Tree& t, const std::vector<int>& gamma, int u_star, int v_star,
                          int indent = -1);

std::vector<std::pair<int, int>> tree_edges(const Tree& t);

struct SvgStyle {
  int scale = 24;
  double node_radius = 5.0;
  double edge_width = 1.5;
  int margin = 20;
};

// Grid y grows upwards; the SVG flips it. Dashed segments are debug overlays.
std::string render_svg(const GridDrawing& d, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::pair<Point, Point>>& dashed = {},
                       const SvgStyle& style = {});

}  // namespace lrdraw
