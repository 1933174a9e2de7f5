#include "doctest.h"

#include "ce/cluster.hpp"
#include "ce/error.hpp"
#include "ce/json_io.hpp"
#include "ce/plexpr.hpp"
#include "ce/tropical.hpp"

using namespace ce;

namespace {

std::vector<SFRat> chart(int m) {
  std::vector<SFRat> g;
  for (int i = 0; i < m; ++i) g.push_back(SFRat::variable(m, i));
  return g;
}

// The piecewise-linear mutation must be the tropicalization of the rational
// one, coordinate by coordinate.
void check_pl_matches_rational(const IntMat& eps, int k) {
  int m = static_cast<int>(eps.size());
  auto xs = mutate_x_chart(chart(m), k, eps);
  auto xpl = trop_mutation_pl(TropType::X, k, eps);
  for (int i = 0; i < m; ++i) CHECK(pl_equal(xpl[i], tropicalize(xs[i])));

  auto as = mutate_a_chart(chart(m), k, eps);
  auto apl = trop_mutation_pl(TropType::A, k, eps);
  for (int i = 0; i < m; ++i) CHECK(pl_equal(apl[i], tropicalize(as[i])));

  std::vector<SFRat> b, x;
  for (int i = 0; i < 2 * m; ++i)
    (i < m ? b : x).push_back(SFRat::variable(2 * m, i));
  mutate_d_chart(b, x, k, eps);
  auto dpl = trop_mutation_pl(TropType::D, k, eps);
  for (int i = 0; i < m; ++i) {
    CHECK(pl_equal(dpl[i], tropicalize(b[i])));
    CHECK(pl_equal(dpl[m + i], tropicalize(x[i])));
  }
}

} // namespace

TEST_CASE("tropical mutation is the tropicalized rational mutation") {
  check_pl_matches_rational(IntMat{{0, 1}, {-1, 0}}, 0);
  check_pl_matches_rational(IntMat{{0, -2}, {2, 0}}, 1);
  check_pl_matches_rational(IntMat{{0, 1, -1}, {-1, 0, 2}, {1, -2, 0}}, 1);
}

TEST_CASE("tropical mutation evaluates pointwise like its pl form") {
  IntMat eps{{0, 2, -1}, {-2, 0, 1}, {1, -1, 0}};
  std::vector<Rational> pt{Rational(3, 2), Rational(-1), Rational(2)};

  auto ax = trop_mutate_x(pt, 0, eps);
  auto pl = trop_mutation_pl(TropType::X, 0, eps);
  for (int i = 0; i < 3; ++i) CHECK(ax[i] == pl_eval(pl[i], pt));

  auto aa = trop_mutate_a(pt, 0, eps);
  auto apl = trop_mutation_pl(TropType::A, 0, eps);
  for (int i = 0; i < 3; ++i) CHECK(aa[i] == pl_eval(apl[i], pt));

  std::vector<Rational> bx{Rational(1), Rational(0, 1), Rational(-2),
                           Rational(1, 2), Rational(5), Rational(-3)};
  auto dd = trop_mutate_d(bx, 2, eps);
  auto dpl = trop_mutation_pl(TropType::D, 2, eps);
  for (int i = 0; i < 6; ++i) CHECK(dd[i] == pl_eval(dpl[i], bx));
}

TEST_CASE("tropical mutations are involutive on half-integer points") {
  // The return trip happens in the mutated chart, whose exchange matrix has
  // row and column k negated.
  IntMat eps{{0, 3}, {-3, 0}};
  IntMat neg{{0, -3}, {3, 0}};

  TropPoint p{TropType::A, {Rational(1, 2), Rational(-7, 2)}};
  TropPoint q = trop_mutate(trop_mutate(p, 1, eps), 1, neg);
  CHECK(q.v == p.v);

  TropPoint x{TropType::X, {Rational(5), Rational(1, 2)}};
  TropPoint x2 = trop_mutate(trop_mutate(x, 0, eps), 0, neg);
  CHECK(x2.v == x.v);

  TropPoint d{TropType::D, {Rational(1), Rational(2), Rational(-1, 2), Rational(0)}};
  TropPoint d2 = trop_mutate(trop_mutate(d, 0, eps), 0, neg);
  CHECK(d2.v == d.v);

  CHECK_THROWS_AS(trop_mutate(p, 2, eps), Error);
}

TEST_CASE("tropical point json round trip") {
  TropPoint p{TropType::D, {Rational(1, 2), Rational(-3), Rational(0), Rational(7, 3)}};
  TropPoint r = trop_point_from_json(trop_point_to_json(p));
  CHECK(r.type == p.type);
  CHECK(r.v == p.v);
}
