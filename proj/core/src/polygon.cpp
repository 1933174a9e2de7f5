#include "ce/polygon.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ce/error.hpp"

namespace ce {

namespace {

int mod_n(int x, int n) { return ((x % n) + n) % n; }

// Strictly inside the counterclockwise open arc from u to v.
bool in_open_arc(int x, int u, int v, int n) {
  int t = mod_n(x - u, n);
  return t > 0 && t < mod_n(v - u, n);
}

} // namespace

Chord make_chord(int n, int a, int b) {
  require(n >= 4, "bad_polygon", "polygon needs at least 4 vertices");
  a = mod_n(a, n);
  b = mod_n(b, n);
  require(a != b, "bad_chord", "chord endpoints coincide");
  return Chord{std::min(a, b), std::max(a, b)};
}

bool is_side(int n, const Chord& c) {
  return mod_n(c.v - c.u, n) == 1 || mod_n(c.u - c.v, n) == 1;
}

int chord_crossing_number(const Chord& a, const Chord& b, int n) {
  bool cross = in_open_arc(b.u, a.u, a.v, n) != in_open_arc(b.v, a.u, a.v, n) &&
               b.u != a.u && b.u != a.v && b.v != a.u && b.v != a.v;
  return cross ? 1 : 0;
}

Triangulation Triangulation::make(int n, std::vector<Chord> diagonals) {
  require(n >= 4, "bad_polygon", "polygon needs at least 4 vertices");
  std::sort(diagonals.begin(), diagonals.end());
  diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
  require(static_cast<int>(diagonals.size()) == n - 3, "bad_triangulation",
          "need exactly n-3 diagonals");
  for (size_t i = 0; i < diagonals.size(); ++i) {
    require(!is_side(n, diagonals[i]), "bad_triangulation", "boundary side listed as diagonal");
    require(diagonals[i].u >= 0 && diagonals[i].v < n, "bad_chord", "vertex out of range");
    for (size_t j = i + 1; j < diagonals.size(); ++j)
      require(chord_crossing_number(diagonals[i], diagonals[j], n) == 0, "bad_triangulation",
              "diagonals cross");
  }
  Triangulation t;
  t.n = n;
  t.edges = std::move(diagonals);
  for (int i = 0; i < n; ++i) t.edges.push_back(make_chord(n, i, i + 1));
  std::sort(t.edges.begin() + (n - 3), t.edges.end());
  return t;
}

int Triangulation::slot_of(const Chord& c) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i] == c) return static_cast<int>(i);
  return -1;
}

std::vector<Chord> Triangulation::sorted_diagonals() const {
  std::vector<Chord> d(edges.begin(), edges.begin() + ndiag());
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
  // In convex position a 3-clique of edges always bounds an empty triangle,
  // so the faces are exactly the vertex triples with all three chords present.
  std::set<Chord> have(edges.begin(), edges.end());
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!have.count(Chord{a, b})) continue;
      for (int c = b + 1; c < n; ++c)
        if (have.count(Chord{a, c}) && have.count(Chord{b, c})) out.push_back({a, b, c});
    }
  require(static_cast<int>(out.size()) == n - 2, "internal", "face count mismatch");
  return out;
}

std::array<int, 4> Triangulation::quad(int slot) const {
  require(slot >= 0 && slot < ndiag(), "bad_direction", "quad wants a diagonal slot");
  Chord d = edges[slot];
  std::set<Chord> have(edges.begin(), edges.end());
  int apex_in = -1, apex_out = -1;
  for (int w = 0; w < n; ++w) {
    if (w == d.u || w == d.v) continue;
    if (!have.count(make_chord(n, d.u, w)) || !have.count(make_chord(n, d.v, w))) continue;
    (in_open_arc(w, d.u, d.v, n) ? apex_in : apex_out) = w;
  }
  require(apex_in >= 0 && apex_out >= 0, "internal", "diagonal lacks two triangles");
  return {d.u, apex_in, d.v, apex_out};
}

Triangulation fan_triangulation(int n, int apex) {
  std::vector<Chord> d;
  for (int i = 2; i < n - 1; ++i) d.push_back(make_chord(n, apex, apex + i));
  return Triangulation::make(n, d);
}

Triangulation complete_to_triangulation(int n, const std::vector<Chord>& arcs) {
  std::vector<Chord> d;
  for (const Chord& c : arcs) {
    if (is_side(n, c)) continue;
    d.push_back(c);
  }
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j)
      require(chord_crossing_number(d[i], d[j], n) == 0, "arcs_cross",
              "arcs do not fit one triangulation");
  for (int u = 0; u < n && static_cast<int>(d.size()) < n - 3; ++u)
    for (int v = u + 2; v < n && static_cast<int>(d.size()) < n - 3; ++v) {
      Chord c{u, v};
      if (is_side(n, c)) continue;
      bool ok = true;
      for (const Chord& e : d)
        if (chord_crossing_number(c, e, n) != 0) {
          ok = false;
          break;
        }
      if (ok && std::find(d.begin(), d.end(), c) == d.end()) d.push_back(c);
    }
  return Triangulation::make(n, d);
}

Triangulation flip(const Triangulation& t, int slot) {
  auto q = t.quad(slot);
  Triangulation out = t;
  out.edges[slot] = make_chord(t.n, q[1], q[3]);
  return out;
}

namespace {

std::vector<Chord> canon_key(const Triangulation& t) { return t.sorted_diagonals(); }

} // namespace

std::pair<std::vector<int>, Triangulation> flip_path(const Triangulation& from,
                                                     const Triangulation& to) {
  require(from.n == to.n, "bad_polygon", "flip path across different polygons");
  auto target = canon_key(to);
  std::map<std::vector<Chord>, std::pair<std::vector<Chord>, Chord>> parent;
  std::queue<std::vector<Chord>> q;
  auto start = canon_key(from);
  parent[start] = {start, Chord{-1, -1}};
  q.push(start);
  bool found = (start == target);
  while (!q.empty() && !found) {
    auto key = q.front();
    q.pop();
    Triangulation t = Triangulation::make(from.n, key);
    for (int s = 0; s < t.ndiag(); ++s) {
      auto nk = canon_key(flip(t, s));
      if (parent.count(nk)) continue;
      parent[nk] = {key, t.edges[s]};
      if (nk == target) {
        found = true;
        break;
      }
      q.push(nk);
    }
  }
  require(parent.count(target), "internal", "flip graph not connected");
  std::vector<Chord> chords; // flipped chords from target back to start
  for (auto key = target; key != start; key = parent[key].first)
    chords.push_back(parent[key].second);
  std::reverse(chords.begin(), chords.end());
  std::vector<int> word;
  Triangulation cur = from;
  for (const Chord& c : chords) {
    int s = cur.slot_of(c);
    require(s >= 0 && s < cur.ndiag(), "internal", "flip replay lost a chord");
    word.push_back(s);
    cur = flip(cur, s);
  }
  return {word, cur};
}

std::vector<Triangulation> all_triangulations(int n) {
  std::set<std::vector<Chord>> seen;
  std::vector<Triangulation> out;
  std::queue<Triangulation> q;
  Triangulation t0 = fan_triangulation(n);
  seen.insert(canon_key(t0));
  q.push(t0);
  while (!q.empty()) {
    Triangulation t = q.front();
    q.pop();
    out.push_back(t);
    for (int s = 0; s < t.ndiag(); ++s) {
      Triangulation t2 = flip(t, s);
      if (seen.insert(canon_key(t2)).second) q.push(Triangulation::make(n, canon_key(t2)));
    }
  }
  return out;
}

namespace {

// Edge slots incident to vertex v, sorted counterclockwise by the angular
// order of the opposite endpoint.
std::vector<int> star_slots(const Triangulation& t, int v) {
  std::vector<std::pair<int, int>> order;
  for (size_t s = 0; s < t.edges.size(); ++s) {
    const Chord& c = t.edges[s];
    if (c.u != v && c.v != v) continue;
    int w = c.u == v ? c.v : c.u;
    order.push_back({mod_n(w - v, t.n), static_cast<int>(s)});
  }
  std::sort(order.begin(), order.end());
  std::vector<int> out;
  for (auto& [key, s] : order) out.push_back(s);
  return out;
}

} // namespace

IntMat b_matrix(const Triangulation& t) {
  IntMat b = int_mat(t.m(), t.m());
  for (int v = 0; v < t.n; ++v) {
    auto star = star_slots(t, v);
    for (size_t p = 0; p + 1 < star.size(); ++p) {
      b[star[p]][star[p + 1]] += 1;
      b[star[p + 1]][star[p]] -= 1;
    }
  }
  return b;
}

IntMat lambda_matrix(const Triangulation& t) {
  IntMat l = int_mat(t.m(), t.m());
  for (int v = 0; v < t.n; ++v) {
    auto star = star_slots(t, v);
    for (size_t p = 0; p < star.size(); ++p)
      for (size_t q = p + 1; q < star.size(); ++q) {
        l[star[p]][star[q]] += 1;
        l[star[q]][star[p]] -= 1;
      }
  }
  return l;
}

Seed exchange_from_triangulation(const Triangulation& t) {
  std::vector<int> frozen;
  for (int s = t.ndiag(); s < t.m(); ++s) frozen.push_back(s);
  return Seed::make(t.m(), frozen, transpose(b_matrix(t)));
}

CompatiblePair pair_from_triangulation(const Triangulation& t) {
  IntMat bfull = b_matrix(t);
  IntMat b = int_mat(t.m(), t.ndiag());
  for (int i = 0; i < t.m(); ++i)
    for (int j = 0; j < t.ndiag(); ++j) b[i][j] = bfull[i][j];
  return CompatiblePair::make(lambda_matrix(t), b, IntVec(t.ndiag(), 4));
}

std::vector<int> crossing_sequence(const Chord& c, const Triangulation& t) {
  struct Hit {
    int alpha, beta, slot;
  };
  std::vector<Hit> hits;
  for (int s = 0; s < t.ndiag(); ++s) {
    const Chord& d = t.edges[s];
    if (chord_crossing_number(c, d, t.n) == 0) continue;
    int a = in_open_arc(d.u, c.u, c.v, t.n) ? d.u : d.v;
    int b = a == d.u ? d.v : d.u;
    hits.push_back({mod_n(a - c.u, t.n), mod_n(b - c.v, t.n), s});
  }
  // Walk from c.u: nearer entry vertex first; among chords entering at the
  // same vertex, the one whose far endpoint sits further counterclockwise
  // from c.v is crossed earlier.
  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
    return x.alpha < y.alpha || (x.alpha == y.alpha && x.beta > y.beta);
  });
  std::vector<int> out;
  for (const Hit& h : hits) out.push_back(h.slot);
  return out;
}

} // namespace ce
