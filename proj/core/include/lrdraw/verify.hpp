#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lrdraw/drawing.hpp"
#include "lrdraw/geometry.hpp"
#include "lrdraw/outerplanar.hpp"
#include "lrdraw/tree.hpp"

namespace lrdraw {

struct Violation {
  std::string property;
  std::vector<std::int64_t> witness;  // node ids and/or coordinates
  std::string detail;
};

struct VerifyReport {
  std::vector<Violation> violations;

  bool pass() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return pass(); }
  void add(std::string property, std::vector<std::int64_t> witness, std::string detail = {});
  void merge(const VerifyReport& other);
  std::string summary() const;
};

VerifyReport is_lr_drawing(const Tree& t, const GridDrawing& d);

VerifyReport is_planar_straightline(const std::vector<Point>& points,
                                    const std::vector<geom::Segment>& segments);

struct StarOptions {
  // Also compare every polygon probe against every polygon without the
  // spatial index; meant for n <= 200.
  bool exhaustive = false;
};

VerifyReport is_star_shaped(const Tree& t, const GridDrawing& d, const StarOptions& opt = {});
// Property 4 alone for a given pair of apex points.
VerifyReport check_apexes(const Tree& t, const GridDrawing& d, const Point& pu, const Point& pv);
VerifyReport is_bell_like(const Tree& t, const GridDrawing& d);
VerifyReport is_flat(const Tree& t, const GridDrawing& d);

struct OuterplanarOptions {
  // Ray sweep from every vertex instead of the outer-face walk; cubic.
  bool exhaustive = false;
};
VerifyReport is_outerplanar_drawing(const OuterplanarGraph& g, const GridDrawing& d,
                                    const OuterplanarOptions& opt = {});

// Closed left-right (left = true) or right-left cycle of s as node ids; empty
// when the path has fewer than three nodes.
std::vector<int> star_polygon(const Tree& t, int s, bool left);

}  // namespace lrdraw
