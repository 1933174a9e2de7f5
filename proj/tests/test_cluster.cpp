#include "doctest.h"

#include "ce/cluster.hpp"
#include "ce/error.hpp"
#include "ce/laurent.hpp"
#include "ce/sfrat.hpp"

using namespace ce;

namespace {

const IntMat kB2{{0, 1}, {-1, 0}};

LaurentPoly fpoly(std::initializer_list<Exp> exps) {
  LaurentPoly p(2);
  for (const Exp& e : exps) p.add_term(e, 1);
  return p;
}

} // namespace

TEST_CASE("rank-two f-polynomials and g-vectors") {
  FPolyResult r1 = f_polynomial(kB2, {0}, 0);
  CHECK(r1.f == fpoly({Exp{0, 0}, Exp{1, 0}}));
  CHECK(r1.g == IntVec{-1, 1});

  FPolyResult r2 = f_polynomial(kB2, {0, 1}, 1);
  CHECK(r2.f == fpoly({Exp{0, 0}, Exp{1, 0}, Exp{1, 1}}));
  CHECK(r2.g == IntVec{-1, 0});

  // An untouched slot keeps the trivial pair (F, g) = (1, e_l).
  FPolyResult r0 = f_polynomial(kB2, {}, 1);
  CHECK(r0.f == LaurentPoly::constant(2, 1));
  CHECK(r0.g == IntVec{0, 1});

  CHECK_THROWS_AS(f_polynomial(kB2, {0, 0, 5}, 0), Error);
  CHECK_THROWS_AS(f_polynomial(kB2, {0}, 2), Error);
}

TEST_CASE("trivial coefficient chain reproduces the classical variables") {
  LabeledSeed s = trivial_seed(kB2);
  LabeledSeed s1 = mutate_labeled(s, 0);
  SFRat x1 = SFRat::variable(2, 0), x2 = SFRat::variable(2, 1);
  SFRat one = SFRat::constant(2, 1);
  CHECK(s1.x[0].equals((one + x2) / x1));

  LabeledSeed s2 = mutate_labeled(s1, 1);
  CHECK(s2.x[1].equals((x1 + x2 + one) / (x1 * x2)));

  // Full rank-two period: five alternating mutations swap the two slots.
  LabeledSeed p = s;
  const int word[] = {0, 1, 0, 1, 0};
  for (int k : word) p = mutate_labeled(p, k);
  CHECK(p.x[0].equals(x2));
  CHECK(p.x[1].equals(x1));
  CHECK(p.b == IntMat{{0, -1}, {1, 0}});
}

TEST_CASE("principal chain recovers separated variables") {
  LabeledSeed s = principal_seed(kB2);
  LabeledSeed s1 = mutate_labeled(mutate_labeled(s, 0), 1);

  FPolyResult r = f_polynomial(kB2, {0, 1}, 1);
  std::vector<SFRat> xg{SFRat::variable(4, 0), SFRat::variable(4, 1)};
  std::vector<Coeff> yg(2);
  for (int j = 0; j < 2; ++j) {
    yg[j].kind = SemifieldKind::Trop;
    yg[j].trop = IntVec(2, 0);
    yg[j].trop[j] = 1;
  }
  SFRat rebuilt = separation_reconstruct(r.f, r.g, SemifieldKind::Trop, kB2, xg, yg);
  CHECK(s1.x[1].equals(rebuilt));

  // Tropical coefficient dynamics along the same chain.
  CHECK(s.y[0].trop == IntVec{1, 0});
  CHECK(s1.y[0].trop == IntVec{0, 1});
  CHECK(s1.y[1].trop == IntVec{-1, -1});
}

TEST_CASE("x-chart mutation formula") {
  IntMat eps{{0, 1}, {-1, 0}};
  std::vector<SFRat> x{SFRat::variable(2, 0), SFRat::variable(2, 1)};
  std::vector<SFRat> xm = mutate_x_chart(x, 0, eps);

  CHECK(xm[0].evaluate({Rational(2), Rational(3)}) == Rational(1, 2));
  CHECK(xm[1].evaluate({Rational(2), Rational(3)}) == Rational(9));

  // Mutating back restores the chart.
  IntMat neg{{0, -1}, {1, 0}};
  std::vector<SFRat> back = mutate_x_chart(xm, 0, neg);
  CHECK(back[0].equals(x[0]));
  CHECK(back[1].equals(x[1]));
}

TEST_CASE("a-chart mutation satisfies the exchange relation") {
  IntMat eps{{0, 2}, {-2, 0}};
  std::vector<SFRat> a{SFRat::variable(2, 0), SFRat::variable(2, 1)};
  std::vector<SFRat> am = mutate_a_chart(a, 0, eps);
  SFRat one = SFRat::constant(2, 1);

  // a_k' a_k = prod_{eps_kj > 0} a_j^{eps_kj} + prod_{eps_kj < 0} a_j^{-eps_kj}.
  CHECK((am[0] * a[0]).equals(a[1] * a[1] + one));
  CHECK(am[1].equals(a[1]));

  IntMat neg{{0, -2}, {2, 0}};
  std::vector<SFRat> back = mutate_a_chart(am, 0, neg);
  CHECK(back[0].equals(a[0]));
}

TEST_CASE("d-chart mutation keeps the x-side consistent") {
  IntMat eps{{0, 1}, {-1, 0}};
  std::vector<SFRat> b{SFRat::variable(4, 0), SFRat::variable(4, 1)};
  std::vector<SFRat> x{SFRat::variable(4, 2), SFRat::variable(4, 3)};
  std::vector<SFRat> b0 = b, x0 = x;

  mutate_d_chart(b, x, 0, eps);
  std::vector<SFRat> xm = mutate_x_chart(x0, 0, eps);
  for (int i = 0; i < 2; ++i) CHECK(x[i].equals(xm[i]));

  IntMat neg{{0, -1}, {1, 0}};
  mutate_d_chart(b, x, 0, neg);
  for (int i = 0; i < 2; ++i) {
    CHECK(b[i].equals(b0[i]));
    CHECK(x[i].equals(x0[i]));
  }
}
