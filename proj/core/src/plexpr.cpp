#include "ce/plexpr.hpp"

#include <algorithm>

#include "ce/error.hpp"

namespace ce {

namespace {

AffForm aff_zero(int nvars) { return AffForm{std::vector<Rational>(nvars, Rational(0)), Rational(0)}; }

AffForm aff_add(const AffForm& a, const AffForm& b) {
  AffForm r = a;
  for (size_t i = 0; i < r.grad.size(); ++i) r.grad[i] += b.grad[i];
  r.c += b.c;
  return r;
}

AffForm aff_scale(const AffForm& a, const Rational& s) {
  AffForm r = a;
  for (Rational& g : r.grad) g *= s;
  r.c *= s;
  return r;
}

Rational aff_eval(const AffForm& a, const std::vector<Rational>& pt) {
  Rational v = a.c;
  for (size_t i = 0; i < a.grad.size(); ++i)
    if (a.grad[i] != 0) v += a.grad[i] * pt[i];
  return v;
}

bool grad_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

// Sort and keep, per gradient, only the largest constant.
void dedupe(MaxSet& s) {
  std::sort(s.begin(), s.end(), [](const AffForm& a, const AffForm& b) {
    if (grad_less(a.grad, b.grad)) return true;
    if (grad_less(b.grad, a.grad)) return false;
    return a.c > b.c;
  });
  MaxSet out;
  for (const AffForm& f : s) {
    if (!out.empty() && out.back().grad == f.grad) continue;
    out.push_back(f);
  }
  s = std::move(out);
}

// Phase-1 simplex feasibility of {x >= 0 : A x = b}, exact rationals,
// Bland's rule for both choices so it cannot cycle.
bool lp_feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  for (size_t r = 0; r < rows; ++r)
    if (b[r] < 0) {
      for (Rational& x : a[r]) x = -x;
      b[r] = -b[r];
    }
  size_t total = cols + rows;
  for (size_t r = 0; r < rows; ++r) {
    a[r].resize(total, Rational(0));
    a[r][cols + r] = 1;
  }
  std::vector<size_t> basis(rows);
  for (size_t r = 0; r < rows; ++r) basis[r] = cols + r;
  std::vector<Rational> d(total, Rational(0));
  Rational obj(0);
  for (size_t j = 0; j < total; ++j) {
    Rational s(0);
    for (size_t r = 0; r < rows; ++r) s += a[r][j];
    d[j] = (j >= cols ? Rational(1) : Rational(0)) - s;
  }
  for (size_t r = 0; r < rows; ++r) obj += b[r];
  while (true) {
    size_t enter = total;
    for (size_t j = 0; j < total; ++j)
      if (d[j] < 0) {
        enter = j;
        break;
      }
    if (enter == total) break;
    size_t leave = rows;
    Rational best(0);
    for (size_t r = 0; r < rows; ++r) {
      if (a[r][enter] <= 0) continue;
      Rational ratio = b[r] / a[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) return false;
    Rational piv = a[leave][enter];
    for (size_t j = 0; j < total; ++j) a[leave][j] /= piv;
    b[leave] /= piv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == leave || a[r][enter] == 0) continue;
      Rational f = a[r][enter];
      for (size_t j = 0; j < total; ++j) a[r][j] -= f * a[leave][j];
      b[r] -= f * b[leave];
    }
    if (d[enter] != 0) {
      Rational f = d[enter];
      for (size_t j = 0; j < total; ++j) d[j] -= f * a[leave][j];
      obj -= f * b[leave];
    }
    basis[leave] = enter;
  }
  return obj == 0;
}

// f <= max(g) everywhere iff f's lifted point is a convex combination of the
// g forms with at least the same constant.
bool in_hull(const MaxSet& g, const AffForm& f) {
  size_t n = f.grad.size();
  size_t t = g.size();
  std::vector<std::vector<Rational>> a(n + 2, std::vector<Rational>(t + 1, Rational(0)));
  std::vector<Rational> b(n + 2, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < t; ++j) a[i][j] = g[j].grad[i];
    b[i] = f.grad[i];
  }
  for (size_t j = 0; j < t; ++j) a[n][j] = 1;
  b[n] = 1;
  for (size_t j = 0; j < t; ++j) a[n + 1][j] = g[j].c;
  a[n + 1][t] = -1; // slack: combination constant may exceed f.c
  b[n + 1] = f.c;
  return lp_feasible(std::move(a), std::move(b));
}

void lp_prune(MaxSet& s) {
  if (s.size() < 2) return;
  for (size_t i = s.size(); i-- > 0;) {
    MaxSet rest;
    rest.reserve(s.size() - 1);
    for (size_t j = 0; j < s.size(); ++j)
      if (j != i) rest.push_back(s[j]);
    if (in_hull(rest, s[i])) s.erase(s.begin() + static_cast<long>(i));
  }
}

// Minkowski-expand base + sum of maxima into a single max set.
MaxSet expand(const std::vector<MaxSet>& sets, const AffForm& base) {
  MaxSet acc{base};
  for (const MaxSet& s : sets) {
    MaxSet next;
    next.reserve(acc.size() * s.size());
    for (const AffForm& x : acc)
      for (const AffForm& y : s) next.push_back(aff_add(x, y));
    dedupe(next);
    if (next.size() > 32) lp_prune(next);
    acc = std::move(next);
  }
  return acc;
}

} // namespace

PLExpr pl_constant(int nvars, const Rational& c) {
  PLExpr e;
  e.nvars = nvars;
  e.base = aff_zero(nvars);
  e.base.c = c;
  return e;
}

PLExpr pl_affine(const AffForm& f) {
  PLExpr e;
  e.nvars = static_cast<int>(f.grad.size());
  e.base = f;
  return e;
}

void pl_simplify(PLExpr& e) {
  auto clean = [&](std::vector<MaxSet>& sets, int sign) {
    std::vector<MaxSet> kept;
    for (MaxSet& s : sets) {
      require(!s.empty(), "internal", "empty max set");
      dedupe(s);
      if (s.size() == 1) {
        e.base = aff_add(e.base, sign > 0 ? s[0] : aff_scale(s[0], Rational(-1)));
      } else {
        kept.push_back(std::move(s));
      }
    }
    sets = std::move(kept);
  };
  clean(e.pos, 1);
  clean(e.neg, -1);
}

PLExpr tropicalize(const SFRat& r) {
  require(!r.is_zero(), "not_subtraction_free", "tropicalizing zero");
  PLExpr e;
  e.nvars = r.nvars();
  e.base = aff_zero(e.nvars);
  auto part = [&](const LaurentPoly& p) {
    MaxSet s;
    for (const auto& [exp, coeff] : p.terms()) {
      require(coeff > 0, "not_subtraction_free", "negative coefficient under tropicalization");
      AffForm f = aff_zero(e.nvars);
      for (int i = 0; i < e.nvars; ++i) f.grad[i] = exp[i];
      s.push_back(f);
    }
    return s;
  };
  e.pos.push_back(part(r.num()));
  e.neg.push_back(part(r.den()));
  pl_simplify(e);
  return e;
}

Rational pl_eval(const PLExpr& e, const std::vector<Rational>& pt) {
  require(static_cast<int>(pt.size()) == e.nvars, "arity_mismatch", "pl evaluation point");
  Rational v = aff_eval(e.base, pt);
  for (const MaxSet& s : e.pos) {
    Rational m = aff_eval(s[0], pt);
    for (size_t i = 1; i < s.size(); ++i) m = std::max(m, aff_eval(s[i], pt));
    v += m;
  }
  for (const MaxSet& s : e.neg) {
    Rational m = aff_eval(s[0], pt);
    for (size_t i = 1; i < s.size(); ++i) m = std::max(m, aff_eval(s[i], pt));
    v -= m;
  }
  return v;
}

PLExpr pl_neg(const PLExpr& e) {
  PLExpr r = e;
  r.base = aff_scale(e.base, Rational(-1));
  std::swap(r.pos, r.neg);
  return r;
}

PLExpr pl_add(const PLExpr& a, const PLExpr& b) {
  require(a.nvars == b.nvars, "arity_mismatch", "adding pl expressions");
  PLExpr r = a;
  r.base = aff_add(a.base, b.base);
  r.pos.insert(r.pos.end(), b.pos.begin(), b.pos.end());
  r.neg.insert(r.neg.end(), b.neg.begin(), b.neg.end());
  pl_simplify(r);
  return r;
}

PLExpr pl_sub(const PLExpr& a, const PLExpr& b) { return pl_add(a, pl_neg(b)); }

PLExpr pl_scale(const PLExpr& e, const Rational& s) {
  if (s == 0) return pl_constant(e.nvars, 0);
  PLExpr r;
  r.nvars = e.nvars;
  r.base = aff_scale(e.base, s);
  Rational m = s < 0 ? -s : s;
  auto scaled = [&](const std::vector<MaxSet>& sets) {
    std::vector<MaxSet> out;
    for (const MaxSet& set : sets) {
      MaxSet t;
      for (const AffForm& f : set) t.push_back(aff_scale(f, m));
      out.push_back(std::move(t));
    }
    return out;
  };
  r.pos = scaled(s > 0 ? e.pos : e.neg);
  r.neg = scaled(s > 0 ? e.neg : e.pos);
  return r;
}

PLExpr pl_max(const PLExpr& a, const PLExpr& b) {
  require(a.nvars == b.nvars, "arity_mismatch", "max of pl expressions");
  // max(a,b) = max(a+t, b+t) - t with t = the negative parts of both sides,
  // which makes each argument of the outer max a pure sum of maxima.
  std::vector<MaxSet> fa = a.pos, fb = b.pos;
  fa.insert(fa.end(), b.neg.begin(), b.neg.end());
  fb.insert(fb.end(), a.neg.begin(), a.neg.end());
  MaxSet f = expand(fa, a.base);
  MaxSet g = expand(fb, b.base);
  f.insert(f.end(), g.begin(), g.end());
  dedupe(f);
  lp_prune(f);
  PLExpr r;
  r.nvars = a.nvars;
  r.base = aff_zero(a.nvars);
  r.pos.push_back(std::move(f));
  r.neg = a.neg;
  r.neg.insert(r.neg.end(), b.neg.begin(), b.neg.end());
  pl_simplify(r);
  return r;
}

PLExpr pl_compose(const PLExpr& f, const std::vector<PLExpr>& args) {
  require(static_cast<int>(args.size()) == f.nvars, "arity_mismatch", "pl composition");
  int out_vars = args.empty() ? 0 : args[0].nvars;
  auto compose_aff = [&](const AffForm& a) {
    PLExpr acc = pl_constant(out_vars, a.c);
    for (size_t i = 0; i < args.size(); ++i)
      if (a.grad[i] != 0) acc = pl_add(acc, pl_scale(args[i], a.grad[i]));
    return acc;
  };
  PLExpr acc = compose_aff(f.base);
  auto fold_set = [&](const MaxSet& s) {
    PLExpr m = compose_aff(s[0]);
    for (size_t i = 1; i < s.size(); ++i) m = pl_max(m, compose_aff(s[i]));
    return m;
  };
  for (const MaxSet& s : f.pos) acc = pl_add(acc, fold_set(s));
  for (const MaxSet& s : f.neg) acc = pl_sub(acc, fold_set(s));
  return acc;
}

bool pl_equal(const PLExpr& a, const PLExpr& b) {
  PLExpr d = pl_sub(a, b);
  MaxSet f = expand(d.pos, d.base);
  MaxSet g = expand(d.neg, aff_zero(d.nvars));
  for (const AffForm& x : f)
    if (!in_hull(g, x)) return false;
  for (const AffForm& x : g)
    if (!in_hull(f, x)) return false;
  return true;
}

} // namespace ce
