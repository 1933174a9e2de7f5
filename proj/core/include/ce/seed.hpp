#pragma once

#include "ce/matrix.hpp"

namespace ce {

// A seed in the combinatorial sense: m directions of which some are frozen,
// and a skew-symmetric exchange matrix. Indices are 0-based internally; the
// CLI and JSON layer add 1 at the boundary.
struct Seed {
  int m = 0;
  std::vector<char> frozen; // size m, nonzero entries are frozen directions
  IntMat eps;               // m x m, skew-symmetric

  static Seed make(int m, const std::vector<int>& frozen_idx, const IntMat& eps);
  bool is_frozen(int i) const { return frozen[i] != 0; }
  int mutable_count() const;
};

void check_direction(const Seed& s, int k); // k in range and not frozen

Seed mutate_matrix(const Seed& s, int k);

// Seed realized inside a fixed lattice: each e_i is a column in the ambient
// coordinates and the skew form lives on the ambient. The exchange matrix is
// not stored; it is always the Gram matrix of the current basis.
struct LatticeSeed {
  Seed base;          // base.eps mirrors gram() and is refreshed on mutation
  IntMat basis;       // basis[i] = e_i in ambient coordinates
  IntMat form;        // ambient skew form
  IntMat dual;        // dual[i] = f_i in dual coordinates (f_i(x) = dual[i].x)

  static LatticeSeed standard(const Seed& s); // e_i = coordinate basis, form = eps
  IntMat gram() const;
};

LatticeSeed mutate_lattice(const LatticeSeed& ls, int k);

// Skew form on the double Lambda (+) Lambda^dual in the basis {e_i, f_i}:
// pairing of (v1, phi1) with (v2, phi2) is (v1, v2) + phi2(v1) - phi1(v2).
struct DoubledLattice {
  int m = 0;
  IntMat form; // 2m x 2m
};

DoubledLattice double_seed(const Seed& s);
long long doubled_pairing(const IntMat& eps, const IntVec& v1, const IntVec& phi1,
                          const IntVec& v2, const IntVec& phi2);

// The quantum companion of an exchange matrix: a skew lambda with
// B^t lambda = (D | 0), D = diag(d). B is m x n with the mutable directions
// occupying the leading n indices.
struct CompatiblePair {
  IntMat lambda; // m x m skew
  IntMat b;      // m x n
  IntVec d;      // n nonzero entries (negative on the mirrored copy of a surface)

  static CompatiblePair make(const IntMat& lambda, const IntMat& b, const IntVec& d);
  int m() const { return static_cast<int>(b.size()); }
  int n() const { return b.empty() ? 0 : static_cast<int>(b[0].size()); }
};

bool pair_is_compatible(const IntMat& lambda, const IntMat& b, const IntVec& d);

CompatiblePair mutate_pair(const CompatiblePair& p, int k, int sign);

// Principal-coefficient pair for a mutable skew eps (n x n): b stacks eps on
// an identity block and lambda is chosen with d = (4, ..., 4). The 4 matches
// the omega-unit scaling used by the quantum tori.
CompatiblePair principal_pair(const IntMat& eps);

// Rectangular b-matrix mutation (rows may include frozen directions).
IntMat mutate_b_matrix(const IntMat& b, int k);

} // namespace ce
