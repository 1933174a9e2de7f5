#include "doctest.h"

#include "ce/error.hpp"
#include "ce/json_io.hpp"
#include "ce/matrix.hpp"
#include "ce/seed.hpp"

using namespace ce;

TEST_CASE("exchange matrix mutation follows the sign rule") {
  Seed s = Seed::make(2, {}, IntMat{{0, 1}, {-1, 0}});
  Seed t = mutate_matrix(s, 0);
  CHECK(t.eps == IntMat{{0, -1}, {1, 0}});
  CHECK(mutate_matrix(t, 0).eps == s.eps);

  Seed path = Seed::make(3, {}, IntMat{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  Seed path1 = mutate_matrix(path, 1);
  CHECK(path1.eps == IntMat{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});

  Seed fr = Seed::make(2, {1}, IntMat{{0, 1}, {-1, 0}});
  CHECK(fr.mutable_count() == 1);
  CHECK_THROWS_AS(mutate_matrix(fr, 1), Error);
  CHECK_THROWS_AS(mutate_matrix(s, 2), Error);
  CHECK_THROWS_AS(Seed::make(2, {}, IntMat{{0, 1}, {1, 0}}), Error);
}

TEST_CASE("lattice seed mutation matches the matrix rule") {
  Seed s = Seed::make(3, {}, IntMat{{0, 2, -1}, {-2, 0, 1}, {1, -1, 0}});
  LatticeSeed ls = LatticeSeed::standard(s);
  CHECK(ls.gram() == s.eps);

  LatticeSeed ls1 = mutate_lattice(ls, 2);
  CHECK(ls1.gram() == mutate_matrix(s, 2).eps);
  CHECK(ls1.base.eps == ls1.gram());

  // The dual basis stays dual through mutation.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long pair = 0;
      for (int k = 0; k < 3; ++k) pair += ls1.dual[i][k] * ls1.basis[j][k];
      CHECK(pair == (i == j ? 1 : 0));
    }

  LatticeSeed ls2 = mutate_lattice(ls1, 2);
  CHECK(ls2.basis == ls.basis);
  CHECK(ls2.dual == ls.dual);
}

TEST_CASE("doubled lattice form") {
  Seed s = Seed::make(2, {}, IntMat{{0, 3}, {-3, 0}});
  DoubledLattice d = double_seed(s);
  REQUIRE(d.form.size() == 4);
  IntMat expect{{0, 3, 1, 0}, {-3, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
  CHECK(d.form == expect);

  IntVec v1{1, 2}, p1{0, -1}, v2{3, 0}, p2{1, 1};
  long long direct = doubled_pairing(s.eps, v1, p1, v2, p2);
  IntVec a{1, 2, 0, -1}, b{3, 0, 1, 1};
  long long through_form = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) through_form += a[i] * d.form[i][j] * b[j];
  CHECK(direct == through_form);
  CHECK(doubled_pairing(s.eps, v1, p1, v1, p1) == 0);
}

TEST_CASE("principal compatible pair") {
  IntMat eps{{0, 1}, {-1, 0}};
  CompatiblePair p = principal_pair(eps);
  CHECK(p.m() == 4);
  CHECK(p.n() == 2);
  CHECK(p.d == IntVec{4, 4});
  CHECK(pair_is_compatible(p.lambda, p.b, p.d));

  IntMat prod(2, IntVec(4, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) prod[i][j] += p.b[k][i] * p.lambda[k][j];
  CHECK(prod == IntMat{{4, 0, 0, 0}, {0, 4, 0, 0}});

  CompatiblePair plus = mutate_pair(p, 0, 1);
  CompatiblePair minus = mutate_pair(p, 0, -1);
  CHECK(plus.lambda == minus.lambda);
  CHECK(plus.b == minus.b);
  CHECK(pair_is_compatible(plus.lambda, plus.b, plus.d));

  CompatiblePair back = mutate_pair(plus, 0, 1);
  CHECK(back.lambda == p.lambda);
  CHECK(back.b == p.b);

  IntMat zero(4, IntVec(4, 0));
  CHECK_FALSE(pair_is_compatible(zero, p.b, p.d));
}

TEST_CASE("rectangular b-matrix mutation extends the square rule") {
  IntMat eps{{0, 2}, {-2, 0}};
  IntMat b{{0, 2}, {-2, 0}, {1, 0}, {0, 1}};
  IntMat b1 = mutate_b_matrix(b, 0);
  Seed sq = mutate_matrix(Seed::make(2, {}, eps), 0);
  CHECK(IntMat{b1[0], b1[1]} == sq.eps);
  CHECK(mutate_b_matrix(b1, 0) == b);
}

TEST_CASE("seed and pair json round trips") {
  Seed s = Seed::make(3, {2}, IntMat{{0, 1, -2}, {-1, 0, 0}, {2, 0, 0}});
  Seed rs = seed_from_json(seed_to_json(s));
  CHECK(rs.m == s.m);
  CHECK(rs.frozen == s.frozen);
  CHECK(rs.eps == s.eps);

  CompatiblePair p = principal_pair(IntMat{{0, 1}, {-1, 0}});
  CompatiblePair rp = pair_from_json(pair_to_json(p));
  CHECK(rp.lambda == p.lambda);
  CHECK(rp.b == p.b);
  CHECK(rp.d == p.d);

  CHECK_THROWS_AS(seed_from_json(Json::parse("{\"m\": 2}")), Error);
}
