#include "doctest.h"

#include <cmath>
#include <vector>

#include "ce/cluster.hpp"
#include "ce/error.hpp"
#include "ce/hyperbolic.hpp"
#include "ce/sfrat.hpp"

using namespace ce;

namespace {

DecoratedIdealPolygon sample_polygon() {
  return DecoratedIdealPolygon::make({{false, -3.0, 0.8},
                                      {false, -1.0, 2.0},
                                      {false, 0.5, 1.3},
                                      {false, 2.0, 0.6},
                                      {true, 0.0, 1.7}});
}

} // namespace

TEST_CASE("lambda lengths and horocycle crossings") {
  auto p = DecoratedIdealPolygon::make({{false, 0.0, 4.0}, {false, 1.0, 4.0},
                                        {false, 3.0, 0.25}});
  // Big horocycles overlap along the short geodesic, small ones stay apart.
  CHECK(lambda_length(p, 0, 1) == doctest::Approx(0.25));
  CHECK(lambda_length(p, 0, 1) < 1.0);
  CHECK(lambda_length(p, 1, 2) == doctest::Approx(2.0));
  CHECK(lambda_length(p, 1, 2) > 1.0);

  auto q = DecoratedIdealPolygon::make({{false, 0.0, 1.0}, {false, 2.0, 1.0},
                                        {true, 0.0, 3.0}});
  CHECK(lambda_length(q, 0, 2) == doctest::Approx(std::sqrt(3.0)));

  CHECK_THROWS_AS(DecoratedIdealPolygon::make({{false, 0.0, 1.0}, {false, 0.0, 1.0},
                                               {false, 1.0, 1.0}}),
                  Error);
  CHECK_THROWS_AS(DecoratedIdealPolygon::make({{true, 0.0, 1.0}, {false, 0.0, 1.0},
                                               {true, 1.0, 1.0}}),
                  Error);
  CHECK_THROWS_AS(DecoratedIdealPolygon::make({{false, 0.0, 1.0}, {false, 2.0, -1.0},
                                               {false, 3.0, 1.0}}),
                  Error);
}

TEST_CASE("quadrature route agrees with the closed form") {
  auto p = sample_polygon();
  for (int i = 0; i < p.n(); ++i)
    for (int j = i + 1; j < p.n(); ++j) {
      double closed = lambda_length(p, i, j);
      double arc = lambda_length_by_arc(p, i, j);
      CHECK(std::abs(arc - closed) / closed < 1e-7);
    }
}

TEST_CASE("exchange identity and cross-ratio independence") {
  auto p = sample_polygon();
  CHECK(ptolemy_check(p, {0, 1, 2, 3}) < 1e-12);
  CHECK(ptolemy_check(p, {0, 1, 3, 4}) < 1e-12);

  Triangulation t = fan_triangulation(5, 2);
  for (int k = 0; k < t.ndiag(); ++k) {
    CHECK(cross_ratio_check(p, t, k) < 1e-12);
    CHECK(x_from_lengths(p, t, k) > 0.0);
  }

  auto xs = x_vector(p, t);
  REQUIRE(static_cast<int>(xs.size()) == t.m());
  for (int k = 0; k < t.ndiag(); ++k)
    CHECK(xs[k] == doctest::Approx(x_from_lengths(p, t, k)));
  for (int s = t.ndiag(); s < t.m(); ++s) CHECK(xs[s] == 1.0);
}

TEST_CASE("lambda lengths are mobius invariant") {
  auto p = sample_polygon();
  auto q = mobius_image(p, 2.0, 1.0, 0.5, 3.0);
  REQUIRE(q.n() == p.n());
  for (int i = 0; i < p.n(); ++i)
    for (int j = i + 1; j < p.n(); ++j)
      CHECK(lambda_length(q, i, j) ==
            doctest::Approx(lambda_length(p, i, j)).epsilon(1e-9));
}

TEST_CASE("geometric flip matches the rational mutation numerically") {
  auto p = sample_polygon();
  Triangulation t = fan_triangulation(5);
  IntMat eps = exchange_from_triangulation(t).eps;

  auto xs = x_vector(p, t);
  std::vector<double> logs(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) logs[i] = std::log(xs[i]);

  int m = t.m();
  std::vector<SFRat> gens;
  for (int i = 0; i < m; ++i) gens.push_back(SFRat::variable(m, i));

  for (int k = 0; k < t.ndiag(); ++k) {
    auto flipped = x_vector(p, flip(t, k));
    auto formulas = mutate_x_chart(gens, k, eps);
    for (int i = 0; i < t.ndiag(); ++i) {
      double predicted = std::exp(formulas[i].log_evaluate(logs));
      CHECK(flipped[i] == doctest::Approx(predicted).epsilon(1e-9));
    }
  }
}

TEST_CASE("mirror decoration ratios satisfy the flip rule") {
  auto p = sample_polygon();
  DecoratedIdealPolygon pm = p;
  for (auto& v : pm.v) v.h *= 1.0 + 0.3 * v.x * v.x / (1.0 + v.x * v.x);
  pm = DecoratedIdealPolygon::make(pm.v);

  Triangulation t = fan_triangulation(5, 1);
  CHECK(double_b_check(p, pm, t) < 1e-12);
}
