#pragma once

#include "ce/polygon.hpp"

namespace ce {

struct SnakeEdge {
  int a = 0, b = 0; // graph vertex ids
  int label = 0;    // edge slot of the underlying triangulation
  bool glued = false;
};

// Band of square tiles, one per diagonal crossed by an arc. Consecutive
// tiles are glued along the third edge of the triangle between the two
// crossings; corners are shared polygon vertices on the glued edge only.
struct SnakeGraph {
  int nv = 0;
  std::vector<SnakeEdge> edges;
  std::vector<int> crossed; // diagonal slots in crossing order
};

SnakeGraph snake_graph(const Triangulation& t, const Chord& c);

// All perfect matchings as sorted edge-index lists, lexicographically
// ordered. The empty graph has exactly the empty matching.
std::vector<std::vector<int>> perfect_matchings(const SnakeGraph& g);

// Whether the matching avoids every glued edge (the two extremal matchings
// are exactly the boundary-only ones).
bool matching_is_boundary(const SnakeGraph& g, const std::vector<int>& matching);

// Slot-exponent vector of (matching weight monomial) / (crossing monomial).
IntVec matching_degree(const SnakeGraph& g, const std::vector<int>& matching, int m);

// Degree vector of the arc's cluster variable from the boundary matching
// whose mutable part reproduces the homogeneity grading; errors when neither
// boundary matching does.
IntVec msw_g_vector(const Triangulation& t, const Chord& c);

} // namespace ce
