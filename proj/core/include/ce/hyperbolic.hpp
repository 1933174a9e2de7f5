#pragma once

#include <array>

#include "ce/polygon.hpp"

namespace ce {

// Floating-point oracle in the upper half-plane. Vertices of an ideal
// polygon sit on the real line, with at most one at infinity, and each
// carries a horocycle: a circle tangent from above at a finite vertex
// (stored by Euclidean diameter) or a horizontal line at infinity (stored
// by height). Everything here is double precision; the exact engine is
// validated against these numbers, never the other way around.

struct DecoratedVertex {
  bool infinite = false;
  double x = 0.0; // ignored when infinite
  double h = 1.0; // horocycle diameter, or height at infinity
};

struct DecoratedIdealPolygon {
  std::vector<DecoratedVertex> v;

  // Validates: at most one infinite vertex, positive horocycle parameters,
  // and counterclockwise cyclic order on the boundary circle (increasing x
  // up to one wrap, with the infinite vertex free to sit anywhere in the
  // cycle). Separation below 1e-9 counts as coincident.
  static DecoratedIdealPolygon make(std::vector<DecoratedVertex> v);
  int n() const { return static_cast<int>(v.size()); }
};

// Exponentiated signed half-distance between the horocycles at vertices i
// and j along their geodesic: |x_i - x_j| / sqrt(h_i h_j) for finite ends,
// sqrt(h_inf / h_i) against the infinite vertex. Values below 1 mean the
// horocycles cross; no separate sign is kept.
double lambda_length(const DecoratedIdealPolygon& p, int i, int j);

// The same quantity recovered by numeric quadrature of hyperbolic arc
// length between the horocycle exit points on the geodesic. Independent of
// the closed form above, so the two may disagree by quadrature error.
double lambda_length_by_arc(const DecoratedIdealPolygon& p, int i, int j);

// Relative defect of the exchange identity on an ordered vertex quadruple
// (q1, q2, q3, q4): |A13 A24 - A12 A34 - A14 A23| scaled by the sum of the
// three product magnitudes.
double ptolemy_check(const DecoratedIdealPolygon& p, const std::array<int, 4>& q);

// Cross-ratio coordinate of diagonal slot k of t, from lambda lengths of
// the surrounding quadrilateral (u, a, v, b): A_ua A_vb / (A_av A_bu). The
// horocycle parameters cancel in this ratio.
double x_from_lengths(const DecoratedIdealPolygon& p, const Triangulation& t, int k);

// Relative difference between x_from_lengths and the projective cross-ratio
// of the four ideal points alone, which is the horocycle-independence of
// the coordinate.
double cross_ratio_check(const DecoratedIdealPolygon& p, const Triangulation& t, int k);

// Max over diagonals k of the relative defect of the flip rule for the
// length ratios B_e = lambda_mirror(e) / lambda(e) of two decorations of
// one polygon: with the quad of k labeled (1, 2, 3, 4) and X the primary
// cross-ratio of k,
//   B_24 = (X B_12 B_34 + B_14 B_23) / ((1 + X) B_13).
double double_b_check(const DecoratedIdealPolygon& p, const DecoratedIdealPolygon& pm,
                      const Triangulation& t);

// Per-slot lambda lengths of the edges of t.
std::vector<double> lambda_vector(const DecoratedIdealPolygon& p, const Triangulation& t);

// Per-slot cross-ratio coordinates of t; boundary slots carry 1.0 since no
// quadrilateral surrounds them.
std::vector<double> x_vector(const DecoratedIdealPolygon& p, const Triangulation& t);

// Image decoration under z -> (a z + b) / (c z + d) with ad - bc > 0.
// Horocycles map to horocycles; cyclic order is preserved, so the result is
// again a valid decorated polygon, possibly with a different vertex at
// infinity.
DecoratedIdealPolygon mobius_image(const DecoratedIdealPolygon& p, double a, double b,
                                   double c, double d);

} // namespace ce
