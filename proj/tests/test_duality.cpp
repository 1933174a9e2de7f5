#include "doctest.h"

#include <vector>

#include "ce/canonical.hpp"
#include "ce/duality.hpp"
#include "ce/error.hpp"
#include "ce/lamination.hpp"
#include "ce/polygon.hpp"

using namespace ce;

namespace {

MarkedArcSet arcs_on(const Triangulation& tri) {
  return MarkedArcSet{tri, std::vector<Rational>(tri.m(), Rational(0))};
}

void add_weight(MarkedArcSet& l, int u, int v, const Rational& w) {
  int s = l.tri.slot_of(make_chord(l.tri.n, u, v));
  REQUIRE(s >= 0);
  l.w[s] += w;
}

// The diagonal {0,2} of the pentagon, with the side weights that cancel all
// endpoint totals. The unique balancing assigns -1, +1, -1 to the sides
// {2,3}, {3,4}, {4,0}.
MarkedArcSet balanced_pentagon_arc() {
  Triangulation carrier = complete_to_triangulation(5, {make_chord(5, 0, 2)});
  MarkedArcSet l = arcs_on(carrier);
  add_weight(l, 0, 2, 1);
  add_weight(l, 2, 3, -1);
  add_weight(l, 3, 4, 1);
  add_weight(l, 4, 0, -1);
  return l;
}

} // namespace

TEST_CASE("endpoint parity and coordinate integrality") {
  MarkedArcSet balanced = balanced_pentagon_arc();
  CHECK(endpoint_weight_parity(balanced) == std::vector<int>(5, 0));

  MarkedArcSet raw = arcs_on(balanced.tri);
  add_weight(raw, 0, 2, 1);
  CHECK(endpoint_weight_parity(raw) == std::vector<int>{1, 0, 1, 0, 0});

  Triangulation chart = fan_triangulation(5, 1);
  auto a_bal = a_coords(lamination_from_arcs(balanced), chart);
  for (const Rational& a : a_bal) CHECK(den(a) == 1);

  auto a_raw = a_coords(lamination_from_arcs(raw), chart);
  bool half = false;
  for (const Rational& a : a_raw) half = half || den(a) == 2;
  CHECK(half);
}

TEST_CASE("arc expansion in its own chart is a single monomial") {
  MarkedArcSet l = balanced_pentagon_arc();
  const Triangulation& carrier = l.tri;

  QTElem e = ia_q(l, carrier);
  CHECK(e.term_count() == 1);
  CHECK(e.star() == e);
  CHECK(e.coeffs_nonneg());
  CHECK(e.coeffs_q_integral());

  SFRat c = ia_classical(l, carrier);
  auto cl = c.to_laurent();
  REQUIRE(cl.has_value());
  CHECK(e.at_one() == *cl);
}

TEST_CASE("arc expansion across one crossing has two terms") {
  MarkedArcSet l = balanced_pentagon_arc();
  Triangulation chart = flip(l.tri, l.tri.slot_of(make_chord(5, 0, 2)));
  REQUIRE(chart.slot_of(make_chord(5, 1, 3)) >= 0);

  QTElem e = ia_q(l, chart);
  CHECK(e.term_count() == 2);
  CHECK(e.star() == e);
  auto cl = ia_classical(l, chart).to_laurent();
  REQUIRE(cl.has_value());
  CHECK(e.at_one() == *cl);
}

TEST_CASE("arc expansion rejects bad weights") {
  MarkedArcSet l = balanced_pentagon_arc();
  Triangulation chart = l.tri;

  MarkedArcSet raw = arcs_on(chart);
  add_weight(raw, 0, 2, 1);
  CHECK_THROWS_WITH_AS(ia_q(raw, chart), doctest::Contains("parity"), Error);
  CHECK_THROWS_AS(ia_classical(raw, chart), Error);

  MarkedArcSet frac = arcs_on(chart);
  add_weight(frac, 0, 2, Rational(1, 2));
  CHECK_THROWS_AS(ia_q(frac, chart), Error);

  MarkedArcSet neg = l;
  neg.w[chart.slot_of(make_chord(5, 0, 2))] = Rational(-1);
  CHECK_THROWS_AS(ia_q(neg, chart), Error);
}

TEST_CASE("doubled expansion of a mirror-symmetric pair cancels at B = 1") {
  MarkedArcSet l = balanced_pentagon_arc();
  Triangulation chart = fan_triangulation(5);

  DoubleCanonicalForm dq = id_q(l, l, chart);
  DoubleCanonicalForm dc = id_classical(l, l, chart);

  CHECK(dc.omega_exp == 0);
  CHECK(dq.mono == dc.mono);
  CHECK(dq.b_exp == dc.b_exp);
  CHECK(dq.x_exp2 == dc.x_exp2);
  CHECK(dq.x_exp2 == IntVec(7, 0));
  REQUIRE(dq.den_factors.size() == dq.num_factors.size());
  REQUIRE(dq.den_factors.size() == dc.den_factors.size());
  for (size_t i = 0; i < dq.den_factors.size(); ++i) {
    CHECK(dq.den_factors[i].at_one() == dc.den_factors[i].at_one());
    CHECK(dq.num_factors[i].at_one() == dc.num_factors[i].at_one());
  }

  SFRat value = dcf_at_one(dq);
  SFRat collapsed = canonical_pullback(CanonicalMap::J, value, dq.eps);
  CHECK(collapsed.equals(SFRat::constant(7, 1)));
}

TEST_CASE("boundary loops shift the doubled monomial by half-integers") {
  Triangulation chart = fan_triangulation(5);
  MarkedArcSet empty = arcs_on(chart);

  // Weight on one boundary side of the primary copy is a loop around the
  // marked point it follows; each incident chart edge picks up X^{-1/2}.
  MarkedArcSet loop = arcs_on(chart);
  add_weight(loop, 0, 1, 1);

  DoubleCanonicalForm dq = id_q(loop, empty, chart);
  CHECK(dq.den_factors.empty());
  CHECK(dq.num_factors.empty());
  CHECK(dq.omega_exp == 0);
  CHECK(dq.b_exp == IntVec(7, 0));
  for (int s = 0; s < 7; ++s) {
    bool incident = chart.edges[s].u == 0 || chart.edges[s].v == 0;
    CHECK(dq.x_exp2[s] == (incident ? -1 : 0));
  }
  CHECK_THROWS_WITH_AS(dcf_at_one(dq), doctest::Contains("parity"), Error);

  // Even loop weight keeps the display integral.
  MarkedArcSet loop2 = arcs_on(chart);
  add_weight(loop2, 0, 1, 2);
  DoubleCanonicalForm dq2 = id_q(loop2, empty, chart);
  SFRat value = dcf_at_one(dq2);
  Exp e(14, 0);
  for (int s = 0; s < 7; ++s)
    if (chart.edges[s].u == 0 || chart.edges[s].v == 0) e[7 + s] = -1;
  CHECK(value.equals(SFRat(LaurentPoly::monomial(e, 1))));

  // A loop on the mirror copy raises mirrored generators instead and shows
  // up in the B-exponents through the mirrored frame rows.
  DoubleCanonicalForm dm = id_q(empty, loop2, chart);
  IntMat eps = exchange_from_triangulation(chart).eps;
  IntVec expect_b(7, 0);
  for (int s = 0; s < 7; ++s) {
    if (chart.edges[s].u != 0 && chart.edges[s].v != 0) continue;
    for (int j = 0; j < 7; ++j) expect_b[j] += eps[s][j];
  }
  for (int j = 0; j < 7; ++j) CHECK(dm.b_exp[j] == expect_b[j]);
  for (int s = 0; s < 7; ++s) {
    bool incident = chart.edges[s].u == 0 || chart.edges[s].v == 0;
    CHECK(dm.x_exp2[s] == (incident ? 2 : 0));
  }
}

TEST_CASE("doubled expansion needs reconcilable boundary totals") {
  Triangulation chart = fan_triangulation(6);
  MarkedArcSet c = arcs_on(chart);
  int s = chart.slot_of(make_chord(6, 1, 3));
  if (s < 0) {
    c.tri = complete_to_triangulation(6, {make_chord(6, 1, 3)});
    c.w.assign(c.tri.m(), Rational(0));
    s = c.tri.slot_of(make_chord(6, 1, 3));
  }
  c.w[s] = Rational(1);
  MarkedArcSet empty = arcs_on(c.tri);
  CHECK_THROWS_WITH_AS(id_q(c, empty, chart), doctest::Contains("close up"), Error);
}
