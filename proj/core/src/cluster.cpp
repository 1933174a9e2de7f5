#include "ce/cluster.hpp"

#include <algorithm>

#include "ce/error.hpp"

namespace ce {

Coeff coeff_one(SemifieldKind kind, int ny, int ambient) {
  Coeff c;
  c.kind = kind;
  if (kind == SemifieldKind::Trop) c.trop.assign(ny, 0);
  if (kind == SemifieldKind::Universal) c.value = SFRat::constant(ambient, 1);
  return c;
}

Coeff coeff_mul(const Coeff& a, const Coeff& b) {
  require(a.kind == b.kind, "semifield_mismatch", "multiplying across semifields");
  Coeff c = a;
  switch (a.kind) {
    case SemifieldKind::Trivial:
      break;
    case SemifieldKind::Trop:
      require(a.trop.size() == b.trop.size(), "semifield_mismatch", "tropical rank");
      for (size_t i = 0; i < c.trop.size(); ++i) c.trop[i] += b.trop[i];
      break;
    case SemifieldKind::Universal:
      c.value = a.value * b.value;
      break;
  }
  return c;
}

Coeff coeff_pow(const Coeff& a, int k) {
  Coeff c = a;
  switch (a.kind) {
    case SemifieldKind::Trivial:
      break;
    case SemifieldKind::Trop:
      for (long long& e : c.trop) e *= k;
      break;
    case SemifieldKind::Universal:
      c.value = a.value.pow(k);
      break;
  }
  return c;
}

Coeff coeff_oplus_one(const Coeff& a) {
  Coeff c = a;
  switch (a.kind) {
    case SemifieldKind::Trivial:
      break;
    case SemifieldKind::Trop:
      for (long long& e : c.trop) e = std::min(e, 0LL);
      break;
    case SemifieldKind::Universal:
      c.value = a.value + SFRat::constant(a.value.nvars(), 1);
      break;
  }
  return c;
}

SFRat coeff_to_sfrat(const Coeff& a, int ambient, int y_offset) {
  switch (a.kind) {
    case SemifieldKind::Trivial:
      return SFRat::constant(ambient, 1);
    case SemifieldKind::Trop: {
      Exp e(ambient, 0);
      for (size_t j = 0; j < a.trop.size(); ++j) e[y_offset + j] = static_cast<int>(a.trop[j]);
      return SFRat(LaurentPoly::monomial(e, 1));
    }
    case SemifieldKind::Universal:
      return a.value;
  }
  fail("semifield_mismatch", "unreachable");
}

LabeledSeed principal_seed(const IntMat& b) {
  int n = static_cast<int>(b.size());
  LabeledSeed s;
  s.kind = SemifieldKind::Trop;
  s.n = n;
  s.ambient = 2 * n;
  s.y_offset = n;
  s.b = b;
  for (int i = 0; i < n; ++i) {
    s.x.push_back(SFRat::variable(s.ambient, i));
    Coeff c = coeff_one(s.kind, n, s.ambient);
    c.trop[i] = 1;
    s.y.push_back(c);
  }
  return s;
}

LabeledSeed trivial_seed(const IntMat& b) {
  int n = static_cast<int>(b.size());
  LabeledSeed s;
  s.kind = SemifieldKind::Trivial;
  s.n = n;
  s.ambient = n;
  s.y_offset = n;
  s.b = b;
  for (int i = 0; i < n; ++i) {
    s.x.push_back(SFRat::variable(s.ambient, i));
    s.y.push_back(coeff_one(s.kind, n, s.ambient));
  }
  return s;
}

LabeledSeed mutate_labeled(const LabeledSeed& s, int k) {
  require(k >= 0 && k < s.n, "bad_direction", "labeled seed mutation index");
  LabeledSeed out = s;
  Coeff yk_oplus = coeff_oplus_one(s.y[k]);

  out.y[k] = coeff_pow(s.y[k], -1);
  for (int j = 0; j < s.n; ++j) {
    if (j == k) continue;
    Coeff c = coeff_mul(s.y[j], coeff_pow(s.y[k], static_cast<int>(pos_part(s.b[k][j]))));
    out.y[j] = coeff_mul(c, coeff_pow(yk_oplus, static_cast<int>(-s.b[k][j])));
  }

  SFRat pos = coeff_to_sfrat(s.y[k], s.ambient, s.y_offset);
  SFRat neg = SFRat::constant(s.ambient, 1);
  for (int i = 0; i < s.n; ++i) {
    if (s.b[i][k] > 0) pos = pos * s.x[i].pow(static_cast<int>(s.b[i][k]));
    if (s.b[i][k] < 0) neg = neg * s.x[i].pow(static_cast<int>(-s.b[i][k]));
  }
  SFRat denom = coeff_to_sfrat(yk_oplus, s.ambient, s.y_offset) * s.x[k];
  out.x[k] = (pos + neg) / denom;
  out.x[k].reduce();

  out.b = mutate_b_matrix(s.b, k);
  return out;
}

FPolyResult f_polynomial(const IntMat& b0, const std::vector<int>& word, int l) {
  int n = static_cast<int>(b0.size());
  require(l >= 0 && l < n, "bad_direction", "target cluster variable index");
  LabeledSeed s = principal_seed(b0);
  for (int k : word) s = mutate_labeled(s, k);

  auto laurent = s.x[l].to_laurent();
  require(laurent.has_value(), "internal", "principal cluster variable not Laurent");

  bool have_g = false;
  IntVec g(n, 0);
  LaurentPoly f(n);
  for (const auto& [e, c] : laurent->terms()) {
    IntVec deg(n, 0);
    for (int i = 0; i < n; ++i) deg[i] = e[i];
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) deg[i] -= b0[i][j] * e[n + j];
    if (!have_g) {
      g = deg;
      have_g = true;
    } else {
      require(deg == g, "internal", "principal cluster variable not homogeneous");
    }
    Exp ye(n);
    for (int j = 0; j < n; ++j) ye[j] = e[n + j];
    f.add_term(ye, c);
  }
  return FPolyResult{f, g};
}

SFRat separation_reconstruct(const LaurentPoly& f, const IntVec& g, SemifieldKind kind,
                             const IntMat& b0, const std::vector<SFRat>& xvals,
                             const std::vector<Coeff>& yvals) {
  int n = static_cast<int>(b0.size());
  require(f.nvars() == n && static_cast<int>(g.size()) == n, "arity_mismatch",
          "f-polynomial arity");
  require(static_cast<int>(xvals.size()) == n && static_cast<int>(yvals.size()) == n,
          "arity_mismatch", "initial data arity");
  int ambient = n == 0 ? 0 : xvals[0].nvars();
  int y_offset = ambient - n; // Trop generators occupy the trailing block

  std::vector<SFRat> yhat;
  for (int j = 0; j < n; ++j) {
    SFRat v = coeff_to_sfrat(yvals[j], ambient, y_offset);
    for (int i = 0; i < n; ++i)
      if (b0[i][j] != 0) v = v * xvals[i].pow(static_cast<int>(b0[i][j]));
    yhat.push_back(v);
  }
  SFRat num = substitute(f, yhat);

  SFRat den = SFRat::constant(ambient, 1);
  switch (kind) {
    case SemifieldKind::Trivial:
      break;
    case SemifieldKind::Trop: {
      bool first = true;
      IntVec acc;
      for (const auto& [e, c] : f.terms()) {
        (void)c;
        IntVec t(yvals[0].trop.size(), 0);
        for (int j = 0; j < n; ++j)
          for (size_t i = 0; i < t.size(); ++i) t[i] += e[j] * yvals[j].trop[i];
        if (first) {
          acc = t;
          first = false;
        } else {
          for (size_t i = 0; i < t.size(); ++i) acc[i] = std::min(acc[i], t[i]);
        }
      }
      Coeff total;
      total.kind = SemifieldKind::Trop;
      total.trop = acc;
      den = coeff_to_sfrat(total, ambient, y_offset);
      break;
    }
    case SemifieldKind::Universal: {
      std::vector<SFRat> yv;
      for (const Coeff& c : yvals) yv.push_back(c.value);
      den = substitute(f, yv);
      break;
    }
  }

  SFRat out = num / den;
  for (int i = 0; i < n; ++i)
    if (g[i] != 0) out = out * xvals[i].pow(static_cast<int>(g[i]));
  out.reduce();
  return out;
}

std::vector<SFRat> mutate_a_chart(const std::vector<SFRat>& a, int k, const IntMat& eps) {
  int m = static_cast<int>(eps.size());
  require(static_cast<int>(a.size()) == m, "arity_mismatch", "a-chart size");
  require(k >= 0 && k < m, "bad_direction", "a-chart mutation index");
  int ambient = a[k].nvars();
  SFRat pos = SFRat::constant(ambient, 1), neg = pos;
  for (int j = 0; j < m; ++j) {
    if (eps[k][j] > 0) pos = pos * a[j].pow(static_cast<int>(eps[k][j]));
    if (eps[k][j] < 0) neg = neg * a[j].pow(static_cast<int>(-eps[k][j]));
  }
  std::vector<SFRat> out = a;
  out[k] = (pos + neg) / a[k];
  out[k].reduce();
  return out;
}

std::vector<SFRat> mutate_x_chart(const std::vector<SFRat>& x, int k, const IntMat& eps) {
  int m = static_cast<int>(eps.size());
  require(static_cast<int>(x.size()) == m, "arity_mismatch", "x-chart size");
  require(k >= 0 && k < m, "bad_direction", "x-chart mutation index");
  int ambient = x[k].nvars();
  std::vector<SFRat> out = x;
  out[k] = x[k].inverse();
  SFRat one = SFRat::constant(ambient, 1);
  for (int i = 0; i < m; ++i) {
    if (i == k || eps[i][k] == 0) continue;
    SFRat base = one + x[k].pow(-sgn(eps[i][k]));
    out[i] = x[i] * base.pow(static_cast<int>(-eps[i][k]));
    out[i].reduce();
  }
  return out;
}

void mutate_d_chart(std::vector<SFRat>& bcoord, std::vector<SFRat>& xcoord, int k,
                    const IntMat& eps) {
  int m = static_cast<int>(eps.size());
  require(static_cast<int>(bcoord.size()) == m && static_cast<int>(xcoord.size()) == m,
          "arity_mismatch", "d-chart size");
  require(k >= 0 && k < m, "bad_direction", "d-chart mutation index");
  int ambient = xcoord[k].nvars();
  SFRat pos = xcoord[k], neg = SFRat::constant(ambient, 1);
  for (int j = 0; j < m; ++j) {
    if (eps[k][j] > 0) pos = pos * bcoord[j].pow(static_cast<int>(eps[k][j]));
    if (eps[k][j] < 0) neg = neg * bcoord[j].pow(static_cast<int>(-eps[k][j]));
  }
  SFRat one = SFRat::constant(ambient, 1);
  SFRat bk = (pos + neg) / ((one + xcoord[k]) * bcoord[k]);
  bk.reduce();
  std::vector<SFRat> xnew = mutate_x_chart(xcoord, k, eps);
  bcoord[k] = bk;
  xcoord = xnew;
}

} // namespace ce
