#include "ce/qtorus.hpp"

#include <algorithm>
#include <sstream>

#include "ce/error.hpp"
#include "ce/seed.hpp"

namespace ce {

QTorusPtr make_torus(const IntMat& form_omega_units) {
  require(is_skew_symmetric(form_omega_units), "bad_form", "quantum torus form must be skew");
  auto t = std::make_shared<QTorus>();
  t->m = static_cast<int>(form_omega_units.size());
  t->form = form_omega_units;
  return t;
}

QTorusPtr x_torus(const IntMat& eps) {
  int m = static_cast<int>(eps.size());
  IntMat f = int_mat(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) f[i][j] = 4 * eps[i][j];
  return make_torus(f);
}

QTorusPtr d_torus(const IntMat& eps) {
  Seed s = Seed::make(static_cast<int>(eps.size()), {}, eps);
  DoubledLattice dl = double_seed(s);
  IntMat f = dl.form;
  for (auto& row : f)
    for (auto& v : row) v *= 4;
  return make_torus(f);
}

QTorusPtr frame_torus(const IntMat& lambda) {
  int m = static_cast<int>(lambda.size());
  IntMat f = int_mat(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) f[i][j] = -lambda[i][j];
  return make_torus(f);
}

QTorusPtr double_frame_torus(const IntMat& lambda) {
  int m = static_cast<int>(lambda.size());
  IntMat f = int_mat(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      f[i][j] = -lambda[i][j];
      f[m + i][m + j] = lambda[i][j];
    }
  return make_torus(f);
}

bool same_torus(const QTorusPtr& a, const QTorusPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->m == b->m && a->form == b->form;
}

QTElem QTElem::constant(QTorusPtr t, const OmegaScalar& c) {
  IntVec zero(t ? t->m : 0, 0);
  return monomial(std::move(t), zero, c);
}

QTElem QTElem::monomial(QTorusPtr t, const IntVec& v, const OmegaScalar& c) {
  QTElem e(std::move(t));
  e.add_term(v, c);
  return e;
}

void QTElem::add_term(const IntVec& v, const OmegaScalar& c) {
  require(static_cast<int>(v.size()) == rank(), "bad_exponent",
          "lattice vector length does not match the torus rank");
  if (c.is_zero()) return;
  auto it = terms_.find(v);
  if (it == terms_.end()) {
    terms_.emplace(v, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

const std::pair<const IntVec, OmegaScalar>& QTElem::leading() const {
  require(!terms_.empty(), "zero_poly", "leading term of the zero element");
  return *terms_.rbegin();
}

QTElem QTElem::operator+(const QTElem& o) const {
  QTElem r = *this;
  r += o;
  return r;
}

QTElem QTElem::operator-(const QTElem& o) const {
  QTElem r = *this;
  r -= o;
  return r;
}

QTElem& QTElem::operator+=(const QTElem& o) {
  if (!torus_) torus_ = o.torus_;
  require(same_torus(torus_, o.torus_), "torus_mismatch", "adding across tori");
  for (const auto& [v, c] : o.terms_) add_term(v, c);
  return *this;
}

QTElem& QTElem::operator-=(const QTElem& o) {
  if (!torus_) torus_ = o.torus_;
  require(same_torus(torus_, o.torus_), "torus_mismatch", "subtracting across tori");
  for (const auto& [v, c] : o.terms_) add_term(v, -c);
  return *this;
}

QTElem QTElem::operator*(const QTElem& o) const { return qt_mul(*this, o); }

bool QTElem::operator==(const QTElem& o) const {
  return same_torus(torus_, o.torus_) && terms_ == o.terms_;
}

QTElem QTElem::scaled(const OmegaScalar& c) const {
  QTElem r(torus_);
  if (c.is_zero()) return r;
  for (const auto& [v, cv] : terms_) r.terms_.emplace(v, cv * c);
  return r;
}

QTElem QTElem::pow(unsigned k) const {
  QTElem r = QTElem::constant(torus_, OmegaScalar(1));
  QTElem base = *this;
  while (k > 0) {
    if (k & 1u) r = qt_mul(r, base);
    base = qt_mul(base, base);
    k >>= 1u;
  }
  return r;
}

QTElem QTElem::monomial_inverse() const {
  require(terms_.size() == 1, "not_a_unit", "inverse of a non-monomial element");
  const auto& [v, c] = *terms_.begin();
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
  // form(v, -v) = 0, so Y_v Y_{-v} = Y_0 and no twist appears.
  OmegaScalar inv = OmegaScalar(1).exact_div(c);
  return monomial(torus_, w, inv);
}

QTElem QTElem::monomial_pow(long long k) const {
  require(terms_.size() == 1, "not_a_unit", "signed power of a non-monomial element");
  if (k >= 0) return pow(static_cast<unsigned>(k));
  return monomial_inverse().pow(static_cast<unsigned>(-k));
}

QTElem QTElem::star() const {
  QTElem r(torus_);
  for (const auto& [v, c] : terms_) r.terms_.emplace(v, c.star());
  return r;
}

bool QTElem::coeffs_nonneg() const {
  for (const auto& [v, c] : terms_)
    if (!c.nonneg()) return false;
  return true;
}

bool QTElem::coeffs_q_integral() const {
  for (const auto& [v, c] : terms_)
    if (!c.exponents_divisible_by(4)) return false;
  return true;
}

LaurentPoly QTElem::at_one() const {
  LaurentPoly p(rank());
  for (const auto& [v, c] : terms_) {
    Exp e(v.begin(), v.end());
    p.add_term(e, c.at_one());
  }
  return p;
}

IntVec QTElem::min_exponents() const {
  require(!terms_.empty(), "zero_poly", "exponent bound of the zero element");
  IntVec lo = terms_.begin()->first;
  for (const auto& [v, c] : terms_)
    for (size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], v[i]);
  return lo;
}

std::string QTElem::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")";
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      out << "*";
      if (i < names.size())
        out << names[i];
      else
        out << "Y" << (i + 1);
      if (v[i] != 1) out << "^" << v[i];
    }
  }
  return out.str();
}

QTElem qt_mul(const QTElem& a, const QTElem& b) {
  require(same_torus(a.torus(), b.torus()), "torus_mismatch", "multiplying across tori");
  QTElem r(a.torus());
  const QTorus& t = *a.torus();
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      IntVec w(u.size());
      for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
      r.add_term(w, (cu * cv).shifted(static_cast<int>(t.pairing(u, v))));
    }
  return r;
}

namespace {

bool at_least(const IntVec& v, const IntVec& lo) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] < lo[i]) return false;
  return true;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

} // namespace

QTElem left_divide(const QTElem& a, const QTElem& rhs) {
  require(!a.is_zero(), "div_zero", "left division by zero");
  require(same_torus(a.torus(), rhs.torus()), "torus_mismatch", "division across tori");
  QTElem quot(a.torus());
  if (rhs.is_zero()) return quot;

  // Strip the monomial content of both sides so every remaining exponent of
  // the dividend stays inside a fixed translate of the positive cone. Lex is
  // a well order there, and each step strictly lowers the lex-leading term,
  // so the loop terminates even on inexact input.
  IntVec ma = a.min_exponents();
  QTElem a0 = qt_mul(QTElem::monomial(a.torus(), vec_neg(ma)), a);
  QTElem rem = qt_mul(QTElem::monomial(a.torus(), vec_neg(ma)), rhs);
  IntVec lo = rem.min_exponents();

  const auto& [va, ca] = a0.leading();
  while (!rem.is_zero()) {
    const auto& [vr, cr] = rem.leading();
    IntVec vt = vec_sub(vr, va);
    require(at_least(vt, lo), "qt_division", "left division leaves a remainder");
    // a0 * (c Y_vt) contributes omega^{form(va, vt)} ca c at vr.
    OmegaScalar need = cr.shifted(-static_cast<int>(a.torus()->pairing(va, vt)));
    OmegaScalar ct;
    try {
      ct = need.exact_div(ca);
    } catch (const Error&) {
      fail("qt_division", "left division leaves a remainder");
    }
    QTElem term = QTElem::monomial(a.torus(), vt, ct);
    quot += term;
    rem -= qt_mul(a0, term);
  }
  return quot;
}

long long weyl_exponent(const IntMat& lambda, const IntVec& v) {
  long long s = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) s += lambda[i][j] * v[i] * v[j];
  return s;
}

QTElem conjugate_by_monomial(const QTElem& e, const IntVec& u) {
  QTElem out(e.torus());
  for (const auto& [v, c] : e.terms())
    out.add_term(v, c.shifted(2 * static_cast<int>(e.torus()->pairing(u, v))));
  return out;
}

QTElem monomial_transport(const QTElem& e, const IntMat& images, QTorusPtr target) {
  int src = e.rank();
  require(static_cast<int>(images.size()) == target->m, "shape_mismatch",
          "image matrix rows must match the target rank");
  for (const auto& row : images)
    require(static_cast<int>(row.size()) == src, "shape_mismatch",
            "image matrix columns must match the source rank");
  for (int i = 0; i < src; ++i) {
    IntVec ci(target->m), cj(target->m);
    for (int r = 0; r < target->m; ++r) ci[r] = images[r][i];
    for (int j = 0; j < src; ++j) {
      for (int r = 0; r < target->m; ++r) cj[r] = images[r][j];
      require(target->pairing(ci, cj) == e.torus()->form[i][j], "bad_form",
              "monomial map does not preserve commutation");
    }
  }
  QTElem out(target);
  for (const auto& [v, c] : e.terms()) out.add_term(mat_vec(images, v), c);
  return out;
}

} // namespace ce
