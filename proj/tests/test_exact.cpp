#include "doctest.h"

#include "ce/canonical.hpp"
#include "ce/error.hpp"
#include "ce/json_io.hpp"
#include "ce/laurent.hpp"
#include "ce/monodromy.hpp"
#include "ce/omega.hpp"
#include "ce/plexpr.hpp"
#include "ce/sfrat.hpp"

using namespace ce;

namespace {

LaurentPoly lv(int n, int i, int p = 1) { return LaurentPoly::variable(n, i, p); }
SFRat sv(int n, int i) { return SFRat::variable(n, i); }

} // namespace

TEST_CASE("laurent polynomial arithmetic") {
  LaurentPoly x = lv(2, 0), y = lv(2, 1);
  LaurentPoly s = (x + y).pow(2);
  CHECK(s.term_count() == 3);
  CHECK(s.terms().at(Exp{1, 1}) == Rational(2));
  CHECK(s == x.pow(2) + x * y.scaled(2) + y.pow(2));

  LaurentPoly m = LaurentPoly::monomial(Exp{-2, 3}, Rational(5));
  CHECK(m.shifted(Exp{2, -3}) == LaurentPoly::constant(2, 5));
  CHECK(s.min_exponents() == Exp{0, 0});
  CHECK(m.min_exponents() == Exp{-2, 3});

  CHECK(s.evaluate({Rational(2), Rational(3)}) == Rational(25));
  CHECK_FALSE(s.has_negative_coeff());
  CHECK(s.coeffs_integral());
  CHECK((x - y).has_negative_coeff());

  CHECK((x * y).derivative(0) == y);
  CHECK(x.pow(3).derivative(0) == lv(2, 0, 2).scaled(3));
}

TEST_CASE("laurent evaluation rejects zero and matches log route") {
  LaurentPoly z(2);
  CHECK_THROWS_WITH_AS(z.log_evaluate({0.0, 0.0}), doctest::Contains("zero"), Error);

  LaurentPoly x = lv(2, 0), y = lv(2, 1);
  LaurentPoly p = x.pow(2) + y + LaurentPoly::constant(2, 3);
  double lx = 0.7, ly = -0.4;
  double direct = std::log(std::exp(2 * lx) + std::exp(ly) + 3.0);
  CHECK(p.log_evaluate({lx, ly}) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("subtraction-free rational functions") {
  SFRat x1 = sv(2, 0), x2 = sv(2, 1), one = SFRat::constant(2, 1);
  SFRat r = (x1 + x2 + one) / (x1 * x2);
  SFRat same = (x1 * x1 + x1 * x2 + x1) / (x1 * x1 * x2);
  CHECK(r.equals(same));
  CHECK_FALSE(r.equals(r + one));

  CHECK(r.inverse().equals(x1 * x2 / (x1 + x2 + one)));
  CHECK(r.pow(-1).equals(r.inverse()));
  CHECK(r.pow(0).equals(one));

  SFRat q = (x1 * x2 + x2) / x2; // reduces to a Laurent polynomial
  auto lp = q.to_laurent();
  REQUIRE(lp.has_value());
  CHECK(*lp == lv(2, 0) + LaurentPoly::constant(2, 1));

  CHECK(r.evaluate({Rational(1), Rational(2)}) == Rational(2));
}

TEST_CASE("omega scalar algebra") {
  OmegaScalar a = OmegaScalar::omega_power(3), b = OmegaScalar::omega_power(-1, 2);
  CHECK(a * b == OmegaScalar::omega_power(2, 2));
  CHECK(OmegaScalar::q_power(1) == OmegaScalar::omega_power(4));
  CHECK(a.star() == OmegaScalar::omega_power(-3));
  CHECK((a + b).at_one() == Rational(3));
  CHECK(OmegaScalar::q_power(2, 5).exponents_divisible_by(4));
  CHECK_FALSE(a.exponents_divisible_by(4));
}

TEST_CASE("tropicalization and piecewise-linear equality") {
  SFRat x = sv(2, 0), y = sv(2, 1);
  PLExpr t = tropicalize((x + y) / x);
  CHECK(pl_eval(t, {Rational(5), Rational(1)}) == Rational(0));
  CHECK(pl_eval(t, {Rational(1), Rational(4)}) == Rational(3));

  // max(a,b) = a + b - min(a,b) written through the normal form.
  PLExpr a = pl_affine({{Rational(1), Rational(0)}, Rational(0)});
  PLExpr b = pl_affine({{Rational(0), Rational(1)}, Rational(0)});
  PLExpr lhs = pl_max(a, b);
  PLExpr rhs = pl_sub(pl_add(a, b), pl_neg(pl_max(pl_neg(a), pl_neg(b))));
  CHECK(pl_equal(lhs, rhs));
  CHECK_FALSE(pl_equal(lhs, pl_add(a, b)));

  // Composition agrees with pointwise evaluation.
  PLExpr f = tropicalize((x * x + y) / (x + y));
  std::vector<PLExpr> args{pl_max(a, b), pl_sub(a, b)};
  PLExpr g = pl_compose(f, args);
  std::vector<Rational> pt{Rational(3), Rational(-2)};
  std::vector<Rational> inner{pl_eval(args[0], pt), pl_eval(args[1], pt)};
  CHECK(pl_eval(g, pt) == pl_eval(f, inner));

  CHECK_THROWS_AS(tropicalize(x - y), Error);
}

TEST_CASE("monodromy traces of short turn words") {
  using P = std::pair<int, Turn>;
  // Right then left on a single edge: trace X + 1 + 1/X.
  LaurentPoly t1 = monodromy_trace(1, {P{0, Turn::Right}, P{0, Turn::Left}}, 1);
  LaurentPoly expect1(1);
  expect1.add_term(Exp{2}, 1);
  expect1.add_term(Exp{0}, 1);
  expect1.add_term(Exp{-2}, 1);
  CHECK(t1 == expect1);

  // The square: tr(M^2) = tr(M)^2 - 2 since det M = 1.
  LaurentPoly t2 = monodromy_trace(1, {P{0, Turn::Right}, P{0, Turn::Left}}, 2);
  CHECK(t2 == t1 * t1 - LaurentPoly::constant(1, 2));

  // Two edges: trace (X1 X2)^{1/2} + (X1/X2)^{1/2} + (X1 X2)^{-1/2}.
  LaurentPoly t3 = monodromy_trace(2, {P{0, Turn::Right}, P{1, Turn::Left}}, 1);
  LaurentPoly expect3(2);
  expect3.add_term(Exp{1, 1}, 1);
  expect3.add_term(Exp{1, -1}, 1);
  expect3.add_term(Exp{-1, -1}, 1);
  CHECK(t3 == expect3);
  CHECK_FALSE(t3.has_negative_coeff());
}

TEST_CASE("canonical pullbacks act by the documented substitutions") {
  IntMat eps{{0, 1}, {-1, 0}};

  SFRat px = canonical_pullback(CanonicalMap::P, sv(2, 0), eps);
  CHECK(px.equals(sv(2, 1)));
  SFRat py = canonical_pullback(CanonicalMap::P, sv(2, 1), eps);
  CHECK(py.equals(sv(2, 0).inverse()));

  SFRat phiB = canonical_pullback(CanonicalMap::Phi, sv(4, 0), eps);
  CHECK(phiB.equals(sv(4, 2) / sv(4, 0)));
  SFRat phiX = canonical_pullback(CanonicalMap::Phi, sv(4, 2), eps);
  CHECK(phiX.equals(sv(4, 1)));

  SFRat piFirst = canonical_pullback(CanonicalMap::Pi, sv(4, 0), eps);
  CHECK(piFirst.equals(sv(4, 2)));
  SFRat piSecond = canonical_pullback(CanonicalMap::Pi, sv(4, 2), eps);
  CHECK(piSecond.equals(sv(4, 2) * sv(4, 1)));

  SFRat f = (sv(4, 0) + sv(4, 2)) / (sv(4, 1) * sv(4, 3));
  SFRat jf = canonical_pullback(CanonicalMap::J, f, eps);
  CHECK(jf.equals((SFRat::constant(2, 1) + sv(2, 0)) / (sv(2, 1))));

  // iota is an involution on the double torus.
  SFRat once = canonical_pullback(CanonicalMap::Iota, f, eps);
  SFRat twice = canonical_pullback(CanonicalMap::Iota, once, eps);
  CHECK(twice.equals(f));
  CHECK_FALSE(once.equals(f));

  CHECK(parse_canonical_map("iota") == CanonicalMap::Iota);
  CHECK_THROWS_AS(parse_canonical_map("sigma"), Error);
}

TEST_CASE("poisson brackets") {
  IntMat eps{{0, 2}, {-2, 0}};
  SFRat x1 = sv(2, 0), x2 = sv(2, 1);
  CHECK(poisson_bracket_x(x1, x2, eps).equals(SFRat::constant(2, 2) * x1 * x2));

  SFRat f = x1 + x2, g = x1 * x2;
  SFRat fg = poisson_bracket_x(f, g, eps), gf = poisson_bracket_x(g, f, eps);
  CHECK((fg + gf).is_zero());
  // Leibniz in the second slot.
  SFRat h = x1 * x1;
  SFRat lhs = poisson_bracket_x(f, g * h, eps);
  SFRat rhs = poisson_bracket_x(f, g, eps) * h + g * poisson_bracket_x(f, h, eps);
  CHECK(lhs.equals(rhs));

  SFRat B1 = sv(4, 0), X1 = sv(4, 2), X2 = sv(4, 3);
  CHECK(poisson_bracket_d(X1, B1, eps).equals(X1 * B1));
  CHECK(poisson_bracket_d(B1, sv(4, 1), eps).is_zero());
  CHECK(poisson_bracket_d(X1, X2, eps).equals(SFRat::constant(4, 2) * X1 * X2));
}

TEST_CASE("json round trips for scalar payloads") {
  LaurentPoly x = lv(2, 0), y = lv(2, 1);
  LaurentPoly p = x.pow(2) + y.scaled(Rational(3, 2)) + LaurentPoly::monomial(Exp{-1, 0}, 1);
  CHECK(laurent_from_json(laurent_to_json(p)) == p);

  SFRat r = (SFRat(x) + SFRat(y)) / SFRat(x * y);
  CHECK(sfrat_from_json(sfrat_to_json(r)).equals(r));

  OmegaScalar c = OmegaScalar::omega_power(-3, 2) + OmegaScalar::q_power(1);
  CHECK(omega_from_json(omega_to_json(c)) == c);

  CHECK(parse_word("2,1,3") == std::vector<int>{1, 0, 2});
  CHECK_THROWS_AS(parse_word("0,1"), Error);
  CHECK_THROWS_AS(parse_word("1,,2"), Error);
}
