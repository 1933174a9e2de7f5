#include "ce/seed.hpp"

#include <cstdlib>

#include "ce/error.hpp"

namespace ce {

Seed Seed::make(int m, const std::vector<int>& frozen_idx, const IntMat& eps) {
  require(m >= 0, "bad_seed", "negative rank");
  require(static_cast<int>(eps.size()) == m, "bad_seed", "exchange matrix row count");
  require(is_skew_symmetric(eps), "bad_seed", "exchange matrix must be skew-symmetric");
  Seed s;
  s.m = m;
  s.frozen.assign(m, 0);
  for (int i : frozen_idx) {
    require(i >= 0 && i < m, "bad_seed", "frozen index out of range");
    s.frozen[i] = 1;
  }
  s.eps = eps;
  return s;
}

int Seed::mutable_count() const {
  int n = 0;
  for (char f : frozen)
    if (!f) ++n;
  return n;
}

void check_direction(const Seed& s, int k) {
  require(k >= 0 && k < s.m, "bad_direction", "mutation index out of range");
  require(!s.is_frozen(k), "bad_direction", "cannot mutate a frozen direction");
}

Seed mutate_matrix(const Seed& s, int k) {
  check_direction(s, k);
  Seed out = s;
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.m; ++j) {
      if (i == k || j == k) {
        out.eps[i][j] = -s.eps[i][j];
      } else {
        out.eps[i][j] =
            s.eps[i][j] + (std::llabs(s.eps[i][k]) * s.eps[k][j] + s.eps[i][k] * std::llabs(s.eps[k][j])) / 2;
      }
    }
  return out;
}

LatticeSeed LatticeSeed::standard(const Seed& s) {
  LatticeSeed ls;
  ls.base = s;
  ls.basis = identity_mat(s.m);
  ls.form = s.eps;
  ls.dual = identity_mat(s.m);
  return ls;
}

IntMat LatticeSeed::gram() const {
  int m = base.m;
  IntMat g = int_mat(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g[i][j] = bilinear(form, basis[i], basis[j]);
  return g;
}

LatticeSeed mutate_lattice(const LatticeSeed& ls, int k) {
  check_direction(ls.base, k);
  int m = ls.base.m;
  IntMat eps = ls.gram();
  LatticeSeed out = ls;
  for (int c = 0; c < m; ++c) {
    out.basis[k][c] = -ls.basis[k][c];
    out.dual[k][c] = -ls.dual[k][c];
  }
  for (int i = 0; i < m; ++i) {
    if (i == k) continue;
    long long p = pos_part(eps[i][k]);
    for (int c = 0; c < m; ++c) out.basis[i][c] += p * ls.basis[k][c];
    long long q = pos_part(-eps[k][i]);
    for (int c = 0; c < m; ++c) out.dual[k][c] += q * ls.dual[i][c];
  }
  out.base.eps = out.gram();
  return out;
}

DoubledLattice double_seed(const Seed& s) {
  DoubledLattice d;
  d.m = s.m;
  d.form = int_mat(2 * s.m, 2 * s.m);
  for (int i = 0; i < s.m; ++i) {
    for (int j = 0; j < s.m; ++j) d.form[i][j] = s.eps[i][j];
    d.form[i][s.m + i] = 1;
    d.form[s.m + i][i] = -1;
  }
  return d;
}

long long doubled_pairing(const IntMat& eps, const IntVec& v1, const IntVec& phi1,
                          const IntVec& v2, const IntVec& phi2) {
  long long s = bilinear(eps, v1, v2);
  for (size_t i = 0; i < v1.size(); ++i) s += phi2[i] * v1[i] - phi1[i] * v2[i];
  return s;
}

bool pair_is_compatible(const IntMat& lambda, const IntMat& b, const IntVec& d) {
  if (!is_skew_symmetric(lambda)) return false;
  if (b.empty() || b.size() != lambda.size()) return false;
  int m = static_cast<int>(b.size());
  int n = static_cast<int>(b[0].size());
  if (static_cast<int>(d.size()) != n || n > m) return false;
  for (long long dj : d)
    if (dj == 0) return false;
  IntMat prod = mat_mul(transpose(b), lambda); // n x m
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      long long want = (j < n && i == j) ? d[i] : 0;
      if (prod[i][j] != want) return false;
    }
  return true;
}

CompatiblePair CompatiblePair::make(const IntMat& lambda, const IntMat& b, const IntVec& d) {
  require(pair_is_compatible(lambda, b, d), "incompatible_pair",
          "b^t lambda != (diag(d) | 0)");
  return CompatiblePair{lambda, b, d};
}

IntMat mutate_b_matrix(const IntMat& b, int k) {
  int m = static_cast<int>(b.size());
  int n = b.empty() ? 0 : static_cast<int>(b[0].size());
  require(k >= 0 && k < n, "bad_direction", "b-matrix mutation index");
  IntMat out = b;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        out[i][j] = b[i][j] + (std::llabs(b[i][k]) * b[k][j] + b[i][k] * std::llabs(b[k][j])) / 2;
      }
    }
  return out;
}

CompatiblePair mutate_pair(const CompatiblePair& p, int k, int sign) {
  require(sign == 1 || sign == -1, "bad_direction", "mutation sign must be +-1");
  require(k >= 0 && k < p.n(), "bad_direction", "pair mutation index");
  int m = p.m();
  IntMat e = identity_mat(m);
  for (int i = 0; i < m; ++i) e[i][k] = (i == k) ? -1 : pos_part(-sign * p.b[i][k]);
  IntMat lambda2 = mat_mul(mat_mul(transpose(e), p.lambda), e);
  IntMat b2 = mutate_b_matrix(p.b, k);
  return CompatiblePair::make(lambda2, b2, p.d);
}

CompatiblePair principal_pair(const IntMat& eps) {
  require(is_skew_symmetric(eps), "bad_seed", "principal pair needs a skew matrix");
  int n = static_cast<int>(eps.size());
  IntMat b = int_mat(2 * n, n);
  IntMat lambda = int_mat(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b[i][j] = eps[i][j];
      lambda[n + i][n + j] = -4 * eps[i][j];
    }
    b[n + i][i] = 1;
    lambda[i][n + i] = -4;
    lambda[n + i][i] = 4;
  }
  return CompatiblePair::make(lambda, b, IntVec(n, 4));
}

} // namespace ce
