#include "ce/tropical.hpp"

#include <algorithm>

#include "ce/error.hpp"

namespace ce {

namespace {

void check_k(size_t m, int k) {
  require(k >= 0 && static_cast<size_t>(k) < m, "bad_direction", "tropical mutation index");
}

} // namespace

std::vector<Rational> trop_mutate_a(const std::vector<Rational>& a, int k, const IntMat& eps) {
  check_k(eps.size(), k);
  require(a.size() == eps.size(), "arity_mismatch", "a-point size");
  Rational p(0), n(0);
  for (size_t j = 0; j < a.size(); ++j) {
    if (eps[k][j] > 0) p += Rational(eps[k][j]) * a[j];
    if (eps[k][j] < 0) n -= Rational(eps[k][j]) * a[j];
  }
  std::vector<Rational> out = a;
  out[k] = std::max(p, n) - a[k];
  return out;
}

std::vector<Rational> trop_mutate_x(const std::vector<Rational>& x, int k, const IntMat& eps) {
  check_k(eps.size(), k);
  require(x.size() == eps.size(), "arity_mismatch", "x-point size");
  std::vector<Rational> out = x;
  out[k] = -x[k];
  for (size_t i = 0; i < x.size(); ++i) {
    if (static_cast<int>(i) == k || eps[i][k] == 0) continue;
    Rational m = std::max(Rational(0), Rational(sgn(eps[i][k])) * x[k]);
    out[i] = x[i] + Rational(eps[i][k]) * m;
  }
  return out;
}

std::vector<Rational> trop_mutate_d(const std::vector<Rational>& bx, int k, const IntMat& eps) {
  size_t m = eps.size();
  check_k(m, k);
  require(bx.size() == 2 * m, "arity_mismatch", "d-point size");
  std::vector<Rational> b(bx.begin(), bx.begin() + static_cast<long>(m));
  std::vector<Rational> x(bx.begin() + static_cast<long>(m), bx.end());
  Rational p = x[k], n(0);
  for (size_t j = 0; j < m; ++j) {
    if (eps[k][j] > 0) p += Rational(eps[k][j]) * b[j];
    if (eps[k][j] < 0) n -= Rational(eps[k][j]) * b[j];
  }
  std::vector<Rational> nb = b;
  nb[k] = std::max(p, n) - std::max(Rational(0), x[k]) - b[k];
  std::vector<Rational> nx = trop_mutate_x(x, k, eps);
  std::vector<Rational> out;
  out.insert(out.end(), nb.begin(), nb.end());
  out.insert(out.end(), nx.begin(), nx.end());
  return out;
}

TropPoint trop_mutate(const TropPoint& pt, int k, const IntMat& eps) {
  TropPoint out = pt;
  switch (pt.type) {
    case TropType::A:
      out.v = trop_mutate_a(pt.v, k, eps);
      break;
    case TropType::X:
      out.v = trop_mutate_x(pt.v, k, eps);
      break;
    case TropType::D:
      out.v = trop_mutate_d(pt.v, k, eps);
      break;
  }
  return out;
}

namespace {

AffForm unit_form(int nvars, int idx, const Rational& s) {
  AffForm f{std::vector<Rational>(nvars, Rational(0)), Rational(0)};
  f.grad[idx] = s;
  return f;
}

PLExpr x_component_pl(int nvars, int x_offset, int i, int k, const IntMat& eps) {
  if (i == k) return pl_affine(unit_form(nvars, x_offset + k, Rational(-1)));
  PLExpr e = pl_affine(unit_form(nvars, x_offset + i, Rational(1)));
  long long c = eps[i][k];
  if (c == 0) return e;
  // c * max(0, sgn(c) x_k) = sgn(c) * max(0, c x_k), so store max(0, c x_k)
  // on the side given by the sign of c.
  MaxSet s{AffForm{std::vector<Rational>(nvars, Rational(0)), Rational(0)},
           unit_form(nvars, x_offset + k, Rational(c))};
  if (c > 0) {
    e.pos.push_back(s);
  } else {
    e.neg.push_back(s);
  }
  return e;
}

} // namespace

std::vector<PLExpr> trop_mutation_pl(TropType type, int k, const IntMat& eps) {
  int m = static_cast<int>(eps.size());
  check_k(eps.size(), k);
  std::vector<PLExpr> out;
  if (type == TropType::A) {
    for (int i = 0; i < m; ++i) {
      if (i != k) {
        out.push_back(pl_affine(unit_form(m, i, Rational(1))));
        continue;
      }
      AffForm p{std::vector<Rational>(m, Rational(0)), Rational(0)};
      AffForm n = p;
      for (int j = 0; j < m; ++j) {
        if (eps[k][j] > 0) p.grad[j] = eps[k][j];
        if (eps[k][j] < 0) n.grad[j] = -eps[k][j];
      }
      PLExpr e = pl_affine(unit_form(m, k, Rational(-1)));
      e.pos.push_back(MaxSet{p, n});
      out.push_back(e);
    }
    return out;
  }
  if (type == TropType::X) {
    for (int i = 0; i < m; ++i) out.push_back(x_component_pl(m, 0, i, k, eps));
    return out;
  }
  for (int i = 0; i < m; ++i) {
    if (i != k) {
      out.push_back(pl_affine(unit_form(2 * m, i, Rational(1))));
      continue;
    }
    AffForm p{std::vector<Rational>(2 * m, Rational(0)), Rational(0)};
    AffForm n = p;
    p.grad[m + k] = 1;
    for (int j = 0; j < m; ++j) {
      if (eps[k][j] > 0) p.grad[j] = eps[k][j];
      if (eps[k][j] < 0) n.grad[j] = -eps[k][j];
    }
    PLExpr e = pl_affine(unit_form(2 * m, k, Rational(-1)));
    e.pos.push_back(MaxSet{p, n});
    e.neg.push_back(MaxSet{AffForm{std::vector<Rational>(2 * m, Rational(0)), Rational(0)},
                           unit_form(2 * m, m + k, Rational(1))});
    out.push_back(e);
  }
  for (int i = 0; i < m; ++i) out.push_back(x_component_pl(2 * m, m, i, k, eps));
  return out;
}

} // namespace ce
