#include "doctest.h"

#include <algorithm>
#include <set>

#include "ce/cluster.hpp"
#include "ce/error.hpp"
#include "ce/json_io.hpp"
#include "ce/polygon.hpp"
#include "ce/seed.hpp"
#include "ce/snake.hpp"

using namespace ce;

TEST_CASE("triangulation slots and flips") {
  Triangulation t = fan_triangulation(6);
  CHECK(t.m() == 9);
  CHECK(t.ndiag() == 3);
  CHECK(t.sorted_diagonals() ==
        std::vector<Chord>{make_chord(6, 0, 2), make_chord(6, 0, 3), make_chord(6, 0, 4)});
  CHECK(t.triangles().size() == 4);

  int slot = t.slot_of(make_chord(6, 0, 3));
  REQUIRE(slot >= 0);
  auto q = t.quad(slot);
  CHECK(std::set<int>(q.begin(), q.end()) == std::set<int>{0, 2, 3, 4});

  Triangulation f = flip(t, slot);
  CHECK(f.edges[slot] == make_chord(6, 2, 4));
  CHECK(flip(f, slot).edges == t.edges);
  CHECK_THROWS_AS(flip(t, t.ndiag()), Error); // sides do not flip

  CHECK_THROWS_AS(Triangulation::make(5, {make_chord(5, 0, 2), make_chord(5, 1, 3)}), Error);
}

TEST_CASE("flip graph reaches every triangulation") {
  CHECK(all_triangulations(4).size() == 2);
  CHECK(all_triangulations(5).size() == 5);
  CHECK(all_triangulations(6).size() == 14);
  CHECK(all_triangulations(7).size() == 42);

  for (const Triangulation& t : all_triangulations(6)) {
    auto [word, arrived] = flip_path(fan_triangulation(6), t);
    Triangulation cur = fan_triangulation(6);
    for (int k : word) cur = flip(cur, k);
    CHECK(cur.sorted_diagonals() == t.sorted_diagonals());
    CHECK(arrived.sorted_diagonals() == t.sorted_diagonals());
  }
}

TEST_CASE("completion to a triangulation keeps the given arcs") {
  Chord c = make_chord(7, 1, 5);
  Triangulation t = complete_to_triangulation(7, {c});
  CHECK(t.slot_of(c) >= 0);
  CHECK(t.ndiag() == 4);
  CHECK_THROWS_AS(complete_to_triangulation(6, {make_chord(6, 0, 2), make_chord(6, 1, 3)}),
                  Error);
}

TEST_CASE("exchange matrices transform by matrix mutation under flips") {
  for (const Triangulation& t : all_triangulations(6)) {
    IntMat b = b_matrix(t);
    REQUIRE(b.size() == 9);
    REQUIRE(b[0].size() == 3);
    for (int k = 0; k < t.ndiag(); ++k)
      CHECK(b_matrix(flip(t, k)) == mutate_b_matrix(b, k));
  }
}

TEST_CASE("lambda matrices transform by pair mutation under flips") {
  for (const Triangulation& t : all_triangulations(5)) {
    CompatiblePair p = pair_from_triangulation(t);
    CHECK(p.d == IntVec(t.ndiag(), 4));
    CHECK(p.lambda == lambda_matrix(t));
    CHECK(pair_is_compatible(p.lambda, p.b, p.d));
    for (int k = 0; k < t.ndiag(); ++k) {
      CompatiblePair q = mutate_pair(p, k, 1);
      CompatiblePair geo = pair_from_triangulation(flip(t, k));
      CHECK(q.lambda == geo.lambda);
      CHECK(q.b == geo.b);
    }
  }
}

TEST_CASE("crossing sequences along an arc") {
  Triangulation t = fan_triangulation(5);
  Chord c13 = make_chord(5, 1, 3);
  auto seq = crossing_sequence(c13, t);
  CHECK(seq == std::vector<int>{t.slot_of(make_chord(5, 0, 2))});

  Chord c14 = make_chord(5, 1, 4);
  auto seq2 = crossing_sequence(c14, t);
  CHECK(seq2 == std::vector<int>{t.slot_of(make_chord(5, 0, 2)), t.slot_of(make_chord(5, 0, 3))});

  CHECK(crossing_sequence(make_chord(5, 0, 2), t).empty());
}

TEST_CASE("snake graphs count matchings like the f-polynomial") {
  Triangulation t = fan_triangulation(5);
  Chord c = make_chord(5, 1, 3);
  SnakeGraph g = snake_graph(t, c);
  CHECK(g.crossed.size() == 1);
  auto matchings = perfect_matchings(g);
  CHECK(matchings.size() == 2);
  int boundary = 0;
  for (const auto& m : matchings)
    if (matching_is_boundary(g, m)) ++boundary;
  CHECK(boundary == 2);

  // An arc already present has the empty snake graph and one matching.
  SnakeGraph trivialg = snake_graph(t, make_chord(5, 0, 3));
  CHECK(trivialg.crossed.empty());
  CHECK(perfect_matchings(trivialg).size() == 1);

  // Two crossings in a fan give the three matchings of a two-tile band.
  SnakeGraph g2 = snake_graph(t, make_chord(5, 1, 4));
  CHECK(g2.crossed.size() == 2);
  CHECK(perfect_matchings(g2).size() == 3);

  IntVec gv = msw_g_vector(t, c);
  CHECK(gv.size() == 7);
}

TEST_CASE("triangulation json round trip") {
  Triangulation t = complete_to_triangulation(8, {make_chord(8, 2, 6)});
  Triangulation r = triangulation_from_json(triangulation_to_json(t));
  CHECK(r.n == t.n);
  CHECK(r.edges == t.edges);
  CHECK_THROWS_AS(triangulation_from_json(Json::parse("{\"n\": 4, \"diagonals\": [[1, 2]]}")),
                  Error);
}
