#pragma once

#include "ce/polygon.hpp"
#include "ce/tropical.hpp"

namespace ce {

// Curve with endpoints on two distinct boundary segments (segment i runs
// from vertex i to i+1), carrying a rational weight. Weights must be
// positive unless the curve retracts around a single marked point (endpoints
// on adjacent segments), where negative weights are allowed.
struct SegmentCurve {
  int s1 = 0, s2 = 0;
  Rational w;
};

struct DiskLamination {
  int n = 0;
  std::vector<SegmentCurve> curves;

  static DiskLamination make(int n, std::vector<SegmentCurve> curves);
};

bool curve_is_special(int n, const SegmentCurve& c);

// Minimal-position intersection count of the curve with a chord: 0 or 1,
// decided by whether the chord separates the two endpoint segments. An
// endpoint lying on a boundary edge counts as one intersection with it.
int curve_crosses_chord(int n, const SegmentCurve& c, const Chord& e);

// a_i = half the weighted crossing count of edge slot i; size m.
std::vector<Rational> a_coords(const DiskLamination& l, const Triangulation& t);

// X-coordinates per diagonal slot from the local quadrilateral rule (side
// slots are zero); size m.
std::vector<Rational> x_coords(const DiskLamination& l, const Triangulation& t);

TropPoint a_point(const DiskLamination& l, const Triangulation& t);
TropPoint x_point(const DiskLamination& l, const Triangulation& t);

// Lamination in endpoint normal form: weights sit on the edges of one
// triangulation (boundary sides included, carrying the special curves).
struct MarkedArcSet {
  Triangulation tri;
  std::vector<Rational> w; // per slot of tri
};

// Drag each endpoint counterclockwise to the next marked point; fails when
// the deformed arcs cross pairwise.
MarkedArcSet deform_endpoints(const DiskLamination& l);
DiskLamination lamination_from_arcs(const MarkedArcSet& a);

} // namespace ce
