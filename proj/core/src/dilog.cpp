#include "ce/dilog.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "ce/error.hpp"

namespace ce {

namespace {

IntVec unit_vec(int m, int k) {
  IntVec v(m, 0);
  v[k] = 1;
  return v;
}

long long coord(const IntVec& v, int k) { return v[k]; }

void check_series_pair(const QSeries& a, const QSeries& b) {
  require(same_torus(a.torus, b.torus), "torus_mismatch", "series over different tori");
  require(a.k == b.k, "series_mismatch", "series graded by different directions");
}

// Accumulate num/den += tn/td with a central scalar denominator.
void fraction_add(QTElem& num, OmegaScalar& den, const QTElem& tn, const OmegaScalar& td) {
  if (tn.is_zero()) return;
  if (td.is_one()) {
    if (den.is_one()) {
      num += tn;
    } else {
      num += tn.scaled(den);
    }
    return;
  }
  num = num.scaled(td);
  num += tn.scaled(den);
  den = den * td;
}

QTElem binomial(const QTorusPtr& t, const IntVec& w, int p) {
  QTElem b = QTElem::constant(t, OmegaScalar(1));
  b.add_term(w, OmegaScalar::q_power(2 * p + 1));
  return b;
}

} // namespace

QSeries qs_zero(QTorusPtr t, int k, int order) {
  require(order > 0, "series_mismatch", "series order must be positive");
  QSeries s;
  s.torus = std::move(t);
  s.k = k;
  s.order = order;
  s.base = 0;
  s.num.assign(order, QTElem(s.torus));
  s.den.assign(order, OmegaScalar(1));
  return s;
}

QSeries qs_one(QTorusPtr t, int k, int order) {
  QSeries s = qs_zero(std::move(t), k, order);
  s.num[0] = QTElem::constant(s.torus, OmegaScalar(1));
  return s;
}

QSeries qs_from_elem(const QTElem& e, int k, int order) {
  require(e.torus() != nullptr, "series_mismatch", "element without a torus");
  require(k >= 0 && k < e.rank(), "bad_direction", "grading direction out of range");
  QSeries s = qs_zero(e.torus(), k, order);
  if (e.is_zero()) return s;
  long long lo = coord(e.terms().begin()->first, k);
  long long hi = lo;
  for (const auto& [v, c] : e.terms()) {
    lo = std::min(lo, coord(v, k));
    hi = std::max(hi, coord(v, k));
  }
  require(hi - lo < order, "order_too_small", "element spreads past the truncation order");
  s.base = lo;
  for (const auto& [v, c] : e.terms()) s.num[coord(v, k) - lo].add_term(v, c);
  return s;
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
  check_series_pair(a, b);
  long long base = std::min(a.base, b.base);
  long long end = std::min(a.base + a.order, b.base + b.order);
  require(end > base, "order_too_small", "series windows do not overlap");
  QSeries s = qs_zero(a.torus, a.k, static_cast<int>(end - base));
  s.base = base;
  for (int g = 0; g < s.order; ++g) {
    long long c = base + g;
    if (c >= a.base && c < a.base + a.order)
      fraction_add(s.num[g], s.den[g], a.num[c - a.base], a.den[c - a.base]);
    if (c >= b.base && c < b.base + b.order)
      fraction_add(s.num[g], s.den[g], b.num[c - b.base], b.den[c - b.base]);
  }
  return s;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  check_series_pair(a, b);
  int order = std::min(a.order, b.order);
  QSeries s = qs_zero(a.torus, a.k, order);
  s.base = a.base + b.base;
  for (int g = 0; g < a.order; ++g) {
    if (a.num[g].is_zero()) continue;
    for (int h = 0; h < b.order && g + h < order; ++h) {
      if (b.num[h].is_zero()) continue;
      fraction_add(s.num[g + h], s.den[g + h], qt_mul(a.num[g], b.num[h]),
                   a.den[g] * b.den[h]);
    }
  }
  return s;
}

QSeries qs_inverse(const QSeries& a) {
  QSeries t = a;
  while (t.order > 0 && t.num.front().is_zero()) {
    t.num.erase(t.num.begin());
    t.den.erase(t.den.begin());
    t.base += 1;
    t.order -= 1;
  }
  require(t.order > 0, "div_zero", "inverting the zero series");
  require(t.num[0].is_monomial(), "not_a_unit", "series with a non-monomial lowest grade");

  QTElem n0inv = t.num[0].monomial_inverse();
  const OmegaScalar& d0 = t.den[0];
  QSeries s = qs_zero(t.torus, t.k, t.order);
  s.base = -t.base;
  s.num[0] = n0inv.scaled(d0);
  for (int g = 1; g < t.order; ++g) {
    QTElem acc(t.torus);
    OmegaScalar accd(1);
    for (int h = 1; h <= g; ++h)
      fraction_add(acc, accd, qt_mul(t.num[h], s.num[g - h]), t.den[h] * s.den[g - h]);
    s.num[g] = qt_mul(n0inv, acc).scaled(-d0);
    s.den[g] = accd;
  }
  return s;
}

QSeries qs_power_series(QTorusPtr t, int k, int order, const IntVec& w,
                        const std::vector<OmegaRat>& c) {
  require(w[k] == 1, "series_mismatch", "power series direction must have unit grade");
  require(static_cast<int>(c.size()) >= order, "order_too_small", "coefficient list too short");
  QSeries s = qs_zero(std::move(t), k, order);
  for (int n = 0; n < order; ++n) {
    IntVec v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[i] = n * w[i];
    s.num[n] = QTElem::monomial(s.torus, v, c[n].num);
    s.den[n] = c[n].den;
    require(!s.den[n].is_zero(), "div_zero", "zero denominator in series coefficient");
  }
  return s;
}

QSeries qs_scale_variable(const QSeries& a, int e) {
  QSeries s = a;
  for (int g = 0; g < s.order; ++g) {
    long long power = s.base + g;
    s.num[g] = s.num[g].scaled(OmegaScalar::omega_power(static_cast<int>(4 * e * power)));
  }
  return s;
}

bool qs_equal(const QSeries& a, const QSeries& b) {
  check_series_pair(a, b);
  long long lo = std::min(a.base, b.base);
  long long hi = std::min(a.base + a.order, b.base + b.order);
  for (long long c = lo; c < hi; ++c) {
    QTElem na(a.torus), nb(b.torus);
    OmegaScalar da(1), db(1);
    if (c >= a.base && c < a.base + a.order) {
      na = a.num[c - a.base];
      da = a.den[c - a.base];
    }
    if (c >= b.base && c < b.base + b.order) {
      nb = b.num[c - b.base];
      db = b.den[c - b.base];
    }
    if (!(na.scaled(db) == nb.scaled(da))) return false;
  }
  return true;
}

std::vector<OmegaRat> psi_coefficients(int order) {
  std::vector<OmegaRat> c;
  c.reserve(order);
  c.emplace_back(OmegaScalar(1), OmegaScalar(1));
  for (int n = 1; n < order; ++n) {
    OmegaRat step(OmegaScalar::q_power(1), OmegaScalar::q_power(2 * n) - OmegaScalar(1));
    c.push_back(c.back() * step);
  }
  return c;
}

QSeries psi_truncated(QTorusPtr t, int k, int order) {
  IntVec w = unit_vec(t->m, k);
  return qs_power_series(std::move(t), k, order, w, psi_coefficients(order));
}

IntVec xhat_vector(const QTorusPtr& t, int k) {
  require(t->m % 2 == 0, "bad_form", "double signature needs an even-rank torus");
  int m = t->m / 2;
  require(k >= 0 && k < m, "bad_direction", "mutable direction out of range");
  IntVec v(t->m, 0);
  v[k] = 1;
  for (int j = 0; j < m; ++j) {
    long long f = t->form[k][j];
    require(f % 4 == 0, "bad_form", "torus form is not in q-units");
    v[m + j] = f / 4;
  }
  return v;
}

QSeries ad_psi(const QTElem& gen, int k, int order, AdSignature sig) {
  require(gen.torus() != nullptr, "series_mismatch", "element without a torus");
  QSeries g = qs_from_elem(gen, k, order);
  QSeries p = psi_truncated(gen.torus(), k, order);
  if (sig == AdSignature::XOnly) return qs_mul(qs_mul(p, g), qs_inverse(p));
  QSeries ph = qs_power_series(gen.torus(), k, order, xhat_vector(gen.torus(), k),
                               psi_coefficients(order));
  QSeries inner = qs_mul(qs_mul(qs_inverse(ph), g), ph);
  return qs_mul(qs_mul(p, inner), qs_inverse(p));
}

QFraction qf_elem(const QTElem& e) { return QFraction{e, {}}; }

bool qfraction_equal(const QFraction& a, const QFraction& b) {
  QTElem lhs = a.num;
  for (const auto& f : b.inv) lhs = qt_mul(lhs, f);
  QTElem rhs = b.num;
  for (const auto& f : a.inv) rhs = qt_mul(rhs, f);
  return lhs == rhs;
}

QSeries qs_from_fraction(const QFraction& f, int k, int order) {
  QSeries s = qs_from_elem(f.num, k, order);
  for (const auto& factor : f.inv)
    s = qs_mul(s, qs_inverse(qs_from_elem(factor, k, order)));
  return s;
}

QFraction ad_psi_fraction(const QTElem& gen, int k, AdSignature sig) {
  const QTorusPtr& t = gen.torus();
  require(t != nullptr, "series_mismatch", "element without a torus");
  require(k >= 0 && k < t->m, "bad_direction", "mutable direction out of range");
  IntVec xk = unit_vec(t->m, k);
  IntVec xh;
  if (sig == AdSignature::DDouble) xh = xhat_vector(t, k);

  // Per term: polynomial tail factors and inverted factors, each a binomial
  // 1 + q^{2p+1} Y_w keyed by (w, p).
  using Key = std::pair<IntVec, int>;
  struct Part {
    IntVec v;
    OmegaScalar c;
    std::vector<Key> tail;
    std::set<Key> inv;
  };
  auto kappa = [&](const IntVec& w, const IntVec& v) {
    long long p4 = bilinear(t->form, w, v);
    require(p4 % 4 == 0, "bad_form", "torus form is not in q-units");
    return p4 / 4;
  };

  std::vector<Part> parts;
  std::set<Key> all_inv;
  for (const auto& [v, c] : gen.terms()) {
    Part part;
    part.v = v;
    part.c = c;
    long long kx = kappa(xk, v);
    for (long long p = 0; p < kx; ++p) part.tail.emplace_back(xk, static_cast<int>(p));
    for (long long p = kx; p < 0; ++p) part.inv.emplace(xk, static_cast<int>(p));
    if (sig == AdSignature::DDouble) {
      long long kh = kappa(xh, v);
      for (long long p = kh; p < 0; ++p) part.tail.emplace_back(xh, static_cast<int>(p));
      for (long long p = 0; p < kh; ++p) part.inv.emplace(xh, static_cast<int>(p));
    }
    all_inv.insert(part.inv.begin(), part.inv.end());
    parts.push_back(std::move(part));
  }

  QFraction out;
  out.num = QTElem(t);
  for (const auto& part : parts) {
    QTElem term = QTElem::monomial(t, part.v, part.c);
    for (const auto& key : part.tail) term = qt_mul(term, binomial(t, key.first, key.second));
    for (const auto& key : all_inv)
      if (part.inv.find(key) == part.inv.end())
        term = qt_mul(term, binomial(t, key.first, key.second));
    out.num += term;
  }
  for (const auto& key : all_inv) out.inv.push_back(binomial(t, key.first, key.second));
  return out;
}

QTElem mu_prime_monomial(const IntMat& eps, int k, int idx, AdSignature sig) {
  int m = static_cast<int>(eps.size());
  require(k >= 0 && k < m, "bad_direction", "mutation direction out of range");
  if (sig == AdSignature::XOnly) {
    require(idx >= 0 && idx < m, "bad_direction", "generator index out of range");
    QTorusPtr t = x_torus(eps);
    IntVec v(m, 0);
    if (idx == k) {
      v[k] = -1;
    } else {
      v[idx] = 1;
      v[k] = std::max(eps[idx][k], 0LL);
    }
    return QTElem::monomial(t, v);
  }
  require(idx >= 0 && idx < 2 * m, "bad_direction", "generator index out of range");
  QTorusPtr t = d_torus(eps);
  IntVec v(2 * m, 0);
  if (idx < m) {
    if (idx == k) {
      v[k] = -1;
    } else {
      v[idx] = 1;
      v[k] = std::max(eps[idx][k], 0LL);
    }
  } else {
    int i = idx - m;
    if (i == k) {
      for (int j = 0; j < m; ++j) v[m + j] = std::max(-eps[k][j], 0LL);
      v[m + k] = -1;
    } else {
      v[m + i] = 1;
    }
  }
  return QTElem::monomial(t, v);
}

QFraction mu_q_closed(const IntMat& eps, int k, int idx, AdSignature sig) {
  int m = static_cast<int>(eps.size());
  require(k >= 0 && k < m, "bad_direction", "mutation direction out of range");
  int rank = sig == AdSignature::XOnly ? m : 2 * m;
  require(idx >= 0 && idx < rank, "bad_direction", "generator index out of range");
  QTorusPtr t = sig == AdSignature::XOnly ? x_torus(eps) : d_torus(eps);
  IntVec xk = unit_vec(rank, k);

  if (idx >= m) {
    int i = idx - m;
    if (i != k) {
      IntVec v(rank, 0);
      v[m + i] = 1;
      return qf_elem(QTElem::monomial(t, v));
    }
    // (q X_k Bplus + Bminus) * B_k^{-1} * (1 + q^{-1} X_k)^{-1}
    IntVec plus(rank, 0), minus(rank, 0), bkinv(rank, 0);
    plus[k] = 1;
    for (int j = 0; j < m; ++j) {
      plus[m + j] = std::max(eps[k][j], 0LL);
      minus[m + j] = std::max(-eps[k][j], 0LL);
    }
    bkinv[m + k] = -1;
    QTElem num = QTElem::monomial(t, plus, OmegaScalar::q_power(1));
    num += QTElem::monomial(t, minus);
    num = qt_mul(num, QTElem::monomial(t, bkinv));
    QFraction out{num, {}};
    out.inv.push_back(binomial(t, xk, -1));
    return out;
  }

  if (idx == k) {
    IntVec v(rank, 0);
    v[k] = -1;
    return qf_elem(QTElem::monomial(t, v));
  }
  long long e = eps[idx][k];
  IntVec xi(rank, 0);
  xi[idx] = 1;
  if (e <= 0) {
    QTElem num = QTElem::monomial(t, xi);
    for (long long p = 0; p < -e; ++p) num = qt_mul(num, binomial(t, xk, static_cast<int>(p)));
    return qf_elem(num);
  }
  // X_i X_k^e with inverted factors (X_k + q^{2p+1}).
  IntVec xke(rank, 0);
  xke[k] = e;
  QFraction out{qt_mul(QTElem::monomial(t, xi), QTElem::monomial(t, xke)), {}};
  for (long long p = 0; p < e; ++p) {
    QTElem f = QTElem::monomial(t, xk);
    f += QTElem::constant(t, OmegaScalar::q_power(static_cast<int>(2 * p + 1)));
    out.inv.push_back(f);
  }
  return out;
}

QFraction mu_q_exact(const IntMat& eps, int k, int idx, AdSignature sig) {
  return ad_psi_fraction(mu_prime_monomial(eps, k, idx, sig), k, sig);
}

} // namespace ce
