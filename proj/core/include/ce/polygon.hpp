#pragma once

#include <array>
#include <utility>

#include "ce/seed.hpp"

namespace ce {

// Chord of the convex n-gon with vertices 0..n-1 counterclockwise; kept
// normalized with u < v. Adjacent endpoints give a boundary side, anything
// else a diagonal.
struct Chord {
  int u = 0, v = 0;

  bool operator==(const Chord& o) const { return u == o.u && v == o.v; }
  bool operator<(const Chord& o) const { return u < o.u || (u == o.u && v < o.v); }
};

Chord make_chord(int n, int a, int b);
bool is_side(int n, const Chord& c);

// 1 when the endpoint pairs strictly interleave around the circle.
int chord_crossing_number(const Chord& a, const Chord& b, int n);

// Triangulation of the n-gon. Edge slots are stable identifiers: the n-3
// diagonals occupy slots 0..n-4 and the n boundary sides the rest. A flip
// replaces the chord in its slot, so matrices indexed by slots track
// mutations without relabeling.
struct Triangulation {
  int n = 0;
  std::vector<Chord> edges;

  static Triangulation make(int n, std::vector<Chord> diagonals);
  int m() const { return 2 * n - 3; }
  int ndiag() const { return n - 3; }
  bool is_diagonal_slot(int slot) const { return slot < ndiag(); }
  int slot_of(const Chord& c) const; // -1 when absent
  std::vector<Chord> sorted_diagonals() const;

  std::vector<std::array<int, 3>> triangles() const;
  // The quadrilateral (u, a, v, b) counterclockwise around diagonal {u,v}.
  std::array<int, 4> quad(int slot) const;
};

Triangulation fan_triangulation(int n, int apex = 0);

// Extend the given pairwise non-crossing chords to a full triangulation by
// adding the lexicographically first compatible diagonals.
Triangulation complete_to_triangulation(int n, const std::vector<Chord>& arcs);

Triangulation flip(const Triangulation& t, int slot);

// Breadth-first flip word from one triangulation to another, replayed onto
// the slot arrangement of `from`; returns the word (diagonal slots) and the
// arrived-at triangulation carrying `to`'s chords in replay slot order.
std::pair<std::vector<int>, Triangulation> flip_path(const Triangulation& from,
                                                     const Triangulation& to);

std::vector<Triangulation> all_triangulations(int n);

// Skein-derived slot matrices: b from the immediate-clockwise rule at shared
// vertices, lambda from the full clockwise order. Columns/rows follow slots.
IntMat b_matrix(const Triangulation& t);
IntMat lambda_matrix(const Triangulation& t);

Seed exchange_from_triangulation(const Triangulation& t); // eps = b^t, sides frozen
CompatiblePair pair_from_triangulation(const Triangulation& t);

// Diagonal slots of t crossed by c, ordered along c starting from c's lower
// endpoint. Empty when c is an edge of t or a side.
std::vector<int> crossing_sequence(const Chord& c, const Triangulation& t);

} // namespace ce
