#include "ce/snake.hpp"

#include <algorithm>
#include <numeric>

#include "ce/cluster.hpp"
#include "ce/error.hpp"

namespace ce {

namespace {

int find_root(std::vector<int>& up, int x) {
  while (up[x] != x) x = up[x] = up[up[x]];
  return x;
}

} // namespace

SnakeGraph snake_graph(const Triangulation& t, const Chord& c) {
  SnakeGraph g;
  g.crossed = crossing_sequence(c, t);
  int d = static_cast<int>(g.crossed.size());
  if (d == 0) return g;

  std::vector<std::array<int, 4>> quads;
  for (int j = 0; j < d; ++j) quads.push_back(t.quad(g.crossed[j]));

  // Glued edge between tiles j and j+1: the third edge of the triangle
  // carrying both crossed diagonals.
  auto tris = t.triangles();
  std::vector<Chord> glue;
  for (int j = 0; j + 1 < d; ++j) {
    Chord d1 = t.edges[g.crossed[j]], d2 = t.edges[g.crossed[j + 1]];
    Chord third{-1, -1};
    for (const auto& tr : tris) {
      Chord e01 = make_chord(t.n, tr[0], tr[1]);
      Chord e02 = make_chord(t.n, tr[0], tr[2]);
      Chord e12 = make_chord(t.n, tr[1], tr[2]);
      std::array<Chord, 3> es{e01, e02, e12};
      int hit1 = -1, hit2 = -1;
      for (int p = 0; p < 3; ++p) {
        if (es[p] == d1) hit1 = p;
        if (es[p] == d2) hit2 = p;
      }
      if (hit1 < 0 || hit2 < 0) continue;
      third = es[3 - hit1 - hit2];
      break;
    }
    require(third.u >= 0, "internal", "consecutive crossings share no triangle");
    glue.push_back(third);
  }

  std::vector<int> up(4 * d);
  std::iota(up.begin(), up.end(), 0);
  auto corner_of = [&](int j, int vertex) {
    for (int p = 0; p < 4; ++p)
      if (quads[j][p] == vertex) return 4 * j + p;
    fail("internal", "glued vertex missing from tile");
  };
  for (int j = 0; j + 1 < d; ++j)
    for (int vertex : {glue[j].u, glue[j].v}) {
      int a = find_root(up, corner_of(j, vertex));
      int b = find_root(up, corner_of(j + 1, vertex));
      if (a != b) up[a] = b;
    }
  std::vector<int> id(4 * d, -1);
  for (int x = 0; x < 4 * d; ++x) {
    int r = find_root(up, x);
    if (id[r] < 0) id[r] = g.nv++;
    id[x] = id[r];
  }

  for (int j = 0; j < d; ++j) {
    for (int p = 0; p < 4; ++p) {
      int q = (p + 1) % 4;
      Chord side = make_chord(t.n, quads[j][p], quads[j][q]);
      if (j > 0 && side == glue[j - 1]) continue; // already added by the previous tile
      int slot = t.slot_of(side);
      require(slot >= 0, "internal", "tile side is not an edge of the triangulation");
      bool glued = j + 1 < d && side == glue[j];
      g.edges.push_back(SnakeEdge{id[4 * j + p], id[4 * j + q], slot, glued});
    }
  }
  return g;
}

std::vector<std::vector<int>> perfect_matchings(const SnakeGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> used(g.nv, 0);
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    int u = -1;
    for (int v = 0; v < g.nv; ++v)
      if (!used[v]) {
        u = v;
        break;
      }
    if (u < 0) {
      std::vector<int> m = cur;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    for (size_t e = 0; e < g.edges.size(); ++e) {
      int w = -1;
      if (g.edges[e].a == u && !used[g.edges[e].b]) w = g.edges[e].b;
      if (g.edges[e].b == u && !used[g.edges[e].a]) w = g.edges[e].a;
      if (w < 0 || w == u) continue;
      used[u] = used[w] = 1;
      cur.push_back(static_cast<int>(e));
      self(self);
      cur.pop_back();
      used[u] = used[w] = 0;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

bool matching_is_boundary(const SnakeGraph& g, const std::vector<int>& matching) {
  for (int e : matching)
    if (g.edges[e].glued) return false;
  return true;
}

IntVec matching_degree(const SnakeGraph& g, const std::vector<int>& matching, int m) {
  IntVec deg(m, 0);
  for (int e : matching) deg[g.edges[e].label] += 1;
  for (int slot : g.crossed) deg[slot] -= 1;
  return deg;
}

IntVec msw_g_vector(const Triangulation& t, const Chord& c) {
  require(!is_side(t.n, c), "bad_arc", "boundary sides carry no cluster variable");
  int present = t.slot_of(c);
  if (present >= 0) {
    IntVec g(t.m(), 0);
    g[present] = 1;
    return g;
  }
  SnakeGraph g = snake_graph(t, c);
  auto matchings = perfect_matchings(g);
  std::vector<IntVec> candidates;
  for (const auto& mt : matchings)
    if (matching_is_boundary(g, mt)) candidates.push_back(matching_degree(g, mt, t.m()));
  require(candidates.size() == 2, "internal", "expected exactly two boundary matchings");

  Triangulation tc = complete_to_triangulation(t.n, {c});
  auto [word, final_t] = flip_path(t, tc);
  int l = final_t.slot_of(c);
  require(l >= 0 && l < t.ndiag(), "internal", "arc missing after flip replay");
  IntMat bfull = b_matrix(t);
  IntMat b0 = int_mat(t.ndiag(), t.ndiag());
  for (int i = 0; i < t.ndiag(); ++i)
    for (int j = 0; j < t.ndiag(); ++j) b0[i][j] = bfull[i][j];
  IntVec r = f_polynomial(b0, word, l).g;

  for (const IntVec& cand : candidates) {
    IntVec prefix(cand.begin(), cand.begin() + t.ndiag());
    if (prefix == r) return cand;
  }
  fail("gvector_mismatch", "no boundary matching reproduces the grading degree");
}

} // namespace ce
