#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrdraw/drawing.hpp"
#include "lrdraw/tree.hpp"

namespace lrdraw {

// Vertices 0..n-1 in clockwise order on the outer cycle; the cycle edges are
// implicit and chords are stored as sorted pairs (a < b).
struct OuterplanarGraph {
  int n = 0;
  std::vector<std::pair<int, int>> chords;

  bool is_maximal() const { return static_cast<int>(chords.size()) == n - 3; }
  // Outer cycle edges followed by chords.
  std::vector<std::pair<int, int>> edges() const;
  friend bool operator==(const OuterplanarGraph&, const OuterplanarGraph&) = default;
};

// Validates and normalizes (sorted chords). Throws std::invalid_argument.
OuterplanarGraph make_graph(int n, std::vector<std::pair<int, int>> chords);
OuterplanarGraph parse_graph(std::string_view text);
std::string serialize_graph(const OuterplanarGraph& g);

OuterplanarGraph triangulate(const OuterplanarGraph& g);

struct DualMapping {
  Tree tree;
  std::vector<int> gamma;  // tree node -> graph vertex
  int u_star = 0;
  int v_star = 1;
};

// Root edge (u*, v*) must be an outer edge with v* right after u* clockwise.
DualMapping dual_tree(const OuterplanarGraph& g, int u_star = 0, int v_star = 1);
OuterplanarGraph primal_from_dual(const DualMapping& dm);
// Maximal outerplanar graph with n >= 3 vertices whose dual is random_tree(n - 2, seed).
OuterplanarGraph random_maximal_outerplanar(int n, std::uint64_t seed);
// Graph whose dual tree (rooted at edge (0, 1)) is t.
DualMapping dual_from_tree(const Tree& t);

// Places gamma(s) at s's point and u*, v* at the apexes.
GridDrawing assemble_outerplanar_drawing(const DualMapping& dm, const GridDrawing& star);

}  // namespace lrdraw
