#include "ce/matrix.hpp"

#include "ce/error.hpp"

namespace ce {

IntMat int_mat(int rows, int cols) {
  return IntMat(rows, IntVec(cols, 0));
}

IntMat identity_mat(int n) {
  IntMat a = int_mat(n, n);
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

IntMat transpose(const IntMat& a) {
  if (a.empty()) return a;
  IntMat t = int_mat(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  require(!a.empty() && !b.empty() && a[0].size() == b.size(), "shape_mismatch",
          "matrix product shapes");
  IntMat c = int_mat(static_cast<int>(a.size()), static_cast<int>(b[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IntVec mat_vec(const IntMat& a, const IntVec& v) {
  require(!a.empty() && a[0].size() == v.size(), "shape_mismatch", "matrix-vector shapes");
  IntVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

bool is_skew_symmetric(const IntMat& a) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != -a[j][i]) return false;
  }
  return true;
}

long long bilinear(const IntMat& a, const IntVec& v1, const IntVec& v2) {
  require(a.size() == v1.size() && a.size() == v2.size(), "shape_mismatch",
          "bilinear form shapes");
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (v1[i] == 0) continue;
    for (size_t j = 0; j < a.size(); ++j) s += v1[i] * a[i][j] * v2[j];
  }
  return s;
}

Int mat_det(const IntMat& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
  // Bareiss: every division below is exact.
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? Int(1) : Int(sign) * m[n - 1][n - 1];
}

std::optional<std::vector<Rational>> solve_rational(const IntMat& a,
                                                    const std::vector<Rational>& b) {
  require(a.size() == b.size(), "shape_mismatch", "linear system shapes");
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = Rational(a[i][j]);
    m[i][cols] = b[i];
  }
  std::vector<int> pivot_col(rows, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rational inv = Rational(1) / m[r][c];
    for (int j = c; j <= cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col[r] = c;
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

} // namespace ce
