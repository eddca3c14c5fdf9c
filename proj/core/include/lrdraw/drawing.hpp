#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lrdraw {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class DrawingKind { LR, BellLike, Flat, Outerplanar };

std::string to_string(DrawingKind k);
DrawingKind drawing_kind_from_string(const std::string& s);

// points[id] is the location of node (or vertex) id. y grows upwards, so a
// child sits at a smaller y than its parent.
struct GridDrawing {
  DrawingKind kind = DrawingKind::LR;
  std::vector<Point> points;
  std::optional<std::array<Point, 2>> apexes;  // (p*_u, p*_v)

  std::int64_t min_x() const;
  std::int64_t max_x() const;
  std::int64_t min_y() const;
  std::int64_t max_y() const;
  std::int64_t width() const { return points.empty() ? 0 : max_x() - min_x() + 1; }
  std::int64_t height() const { return points.empty() ? 0 : max_y() - min_y() + 1; }
  // Bounding box extended by the apexes, as used for the outerplanar area.
  std::int64_t apex_width() const;
  std::int64_t apex_height() const;
};

}  // namespace lrdraw
