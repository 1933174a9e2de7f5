#include "ce/lamination.hpp"

#include <map>

#include "ce/error.hpp"

namespace ce {

namespace {

int mod_n(int x, int n) { return ((x % n) + n) % n; }

} // namespace

bool curve_is_special(int n, const SegmentCurve& c) {
  return mod_n(c.s2 - c.s1, n) == 1 || mod_n(c.s1 - c.s2, n) == 1;
}

DiskLamination DiskLamination::make(int n, std::vector<SegmentCurve> curves) {
  require(n >= 4, "bad_polygon", "polygon needs at least 4 vertices");
  for (const SegmentCurve& c : curves) {
    require(c.s1 >= 0 && c.s1 < n && c.s2 >= 0 && c.s2 < n, "bad_lamination",
            "segment index out of range");
    require(c.s1 != c.s2, "bad_lamination", "curve retracts into the boundary");
    require(c.w != 0, "bad_lamination", "zero-weight curve");
    require(c.w > 0 || curve_is_special(n, c), "bad_lamination",
            "negative weight on a non-special curve");
  }
  return DiskLamination{n, std::move(curves)};
}

int curve_crosses_chord(int n, const SegmentCurve& c, const Chord& e) {
  // Segment s lies strictly on the u-to-v side iff s in {u, ..., v-1}.
  auto inside = [&](int s) {
    int t = mod_n(s - e.u, n);
    return t < mod_n(e.v - e.u, n);
  };
  return inside(c.s1) != inside(c.s2) ? 1 : 0;
}

std::vector<Rational> a_coords(const DiskLamination& l, const Triangulation& t) {
  require(l.n == t.n, "bad_polygon", "lamination and triangulation sizes differ");
  std::vector<Rational> a(t.m(), Rational(0));
  for (int s = 0; s < t.m(); ++s)
    for (const SegmentCurve& c : l.curves)
      if (curve_crosses_chord(l.n, c, t.edges[s])) a[s] += c.w / 2;
  return a;
}

std::vector<Rational> x_coords(const DiskLamination& l, const Triangulation& t) {
  require(l.n == t.n, "bad_polygon", "lamination and triangulation sizes differ");
  std::vector<Rational> x(t.m(), Rational(0));
  for (int s = 0; s < t.ndiag(); ++s) {
    auto q = t.quad(s);
    Chord s12 = make_chord(t.n, q[0], q[1]), s23 = make_chord(t.n, q[1], q[2]);
    Chord s34 = make_chord(t.n, q[2], q[3]), s14 = make_chord(t.n, q[3], q[0]);
    for (const SegmentCurve& c : l.curves) {
      int v = curve_crosses_chord(l.n, c, s12) + curve_crosses_chord(l.n, c, s34) -
              curve_crosses_chord(l.n, c, s14) - curve_crosses_chord(l.n, c, s23);
      if (v != 0) x[s] += c.w * v / 2;
    }
  }
  return x;
}

TropPoint a_point(const DiskLamination& l, const Triangulation& t) {
  return TropPoint{TropType::A, a_coords(l, t)};
}

TropPoint x_point(const DiskLamination& l, const Triangulation& t) {
  return TropPoint{TropType::X, x_coords(l, t)};
}

MarkedArcSet deform_endpoints(const DiskLamination& l) {
  std::map<Chord, Rational> weight;
  for (const SegmentCurve& c : l.curves) {
    Chord arc = make_chord(l.n, c.s1 + 1, c.s2 + 1);
    weight[arc] += c.w;
  }
  std::vector<Chord> arcs;
  for (auto& [arc, w] : weight)
    if (w != 0) arcs.push_back(arc);
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j)
      require(chord_crossing_number(arcs[i], arcs[j], l.n) == 0, "arcs_cross",
              "deformed arcs cross");
  Triangulation tri = complete_to_triangulation(l.n, arcs);
  std::vector<Rational> w(tri.m(), Rational(0));
  for (const Chord& arc : arcs) {
    int s = tri.slot_of(arc);
    require(s >= 0, "internal", "arc missing from completed triangulation");
    w[s] = weight[arc];
  }
  return MarkedArcSet{tri, w};
}

DiskLamination lamination_from_arcs(const MarkedArcSet& a) {
  int n = a.tri.n;
  require(a.w.size() == static_cast<size_t>(a.tri.m()), "arity_mismatch",
          "weight vector does not match edge slots");
  std::vector<SegmentCurve> curves;
  for (int s = 0; s < a.tri.m(); ++s) {
    if (a.w[s] == 0) continue;
    const Chord& c = a.tri.edges[s];
    curves.push_back(SegmentCurve{mod_n(c.u - 1, n), mod_n(c.v - 1, n), a.w[s]});
  }
  return DiskLamination::make(n, std::move(curves));
}

} // namespace ce
