#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ce/laurent.hpp"
#include "ce/matrix.hpp"
#include "ce/omega.hpp"

namespace ce {

// Quantum torus over Z[omega, omega^{-1}]: the lattice Z^m carries a skew
// form measured in omega-units and the basis elements Y_v multiply by
//
//   Y_u * Y_v = omega^{form(u, v)} * Y_{u+v}.
//
// Every torus in the engine is an instance of this relation. Charts stated
// in q-units (q = omega^4) embed by scaling their form by 4; toric frames
// with matrix Lambda use form = -Lambda, so that the frame relation
// M(u)M(v) = omega^{-Lambda(u,v)} M(u+v) holds with M(v) = Y_v.
struct QTorus {
  int m = 0;
  IntMat form; // m x m skew, omega-units

  long long pairing(const IntVec& u, const IntVec& v) const { return bilinear(form, u, v); }
};

using QTorusPtr = std::shared_ptr<const QTorus>;

QTorusPtr make_torus(const IntMat& form_omega_units);

// Chart of X-coordinates for an exchange matrix: X_i = Y_{e_i} with
// X_i X_j = q^{2 eps_ij} X_j X_i.
QTorusPtr x_torus(const IntMat& eps);

// Chart of a seed on the double: rank 2m with X_i = Y_{e_i} (indices 0..m-1)
// and B_i = Y_{f_i} (indices m..2m-1). The form is the doubled pairing of the
// exchange matrix scaled to omega-units.
QTorusPtr d_torus(const IntMat& eps);

// Toric frame with matrix lambda: M(v) = Y_v, form = -lambda.
QTorusPtr frame_torus(const IntMat& lambda);

// Tensor product of the frame of a triangulated surface with the frame of
// its mirror: rank 2m with block form diag(-lambda, +lambda). Indices
// 0..m-1 address M(e_i) (x) 1 and indices m..2m-1 address 1 (x) M°(e_i).
QTorusPtr double_frame_torus(const IntMat& lambda);

bool same_torus(const QTorusPtr& a, const QTorusPtr& b);

// Element of a quantum torus: finite sum of terms c_v * Y_v. The map keeps
// terms in lexicographic order of the lattice vector, which doubles as the
// term order for leading-term arguments.
class QTErrorTag;
class QTElem {
 public:
  QTElem() = default;
  explicit QTElem(QTorusPtr t) : torus_(std::move(t)) {}

  static QTElem constant(QTorusPtr t, const OmegaScalar& c);
  static QTElem monomial(QTorusPtr t, const IntVec& v, const OmegaScalar& c = OmegaScalar(1));

  const QTorusPtr& torus() const { return torus_; }
  int rank() const { return torus_ ? torus_->m : 0; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  size_t term_count() const { return terms_.size(); }
  const std::map<IntVec, OmegaScalar>& terms() const { return terms_; }

  void add_term(const IntVec& v, const OmegaScalar& c);

  // Lex-largest term. Precondition: nonzero.
  const std::pair<const IntVec, OmegaScalar>& leading() const;

  QTElem operator+(const QTElem& o) const;
  QTElem operator-(const QTElem& o) const;
  QTElem operator*(const QTElem& o) const; // qt_mul
  QTElem& operator+=(const QTElem& o);
  QTElem& operator-=(const QTElem& o);
  bool operator==(const QTElem& o) const;
  bool operator!=(const QTElem& o) const { return !(*this == o); }

  QTElem scaled(const OmegaScalar& c) const;
  QTElem pow(unsigned k) const;

  // Inverse of a single-term element (monomials are units). Errors otherwise.
  QTElem monomial_inverse() const;
  // Integer power of a single-term element, negative allowed.
  QTElem monomial_pow(long long k) const;

  // The *-involution: omega -> omega^{-1} on coefficients, Y_v fixed. This is
  // the unique antiautomorphism with those values.
  QTElem star() const;

  bool coeffs_nonneg() const;
  bool coeffs_q_integral() const; // all omega-exponents divisible by 4

  // Classical limit omega = 1 as a commutative Laurent polynomial in the
  // lattice coordinates.
  LaurentPoly at_one() const;

  // Componentwise minimum of exponents over all terms.
  IntVec min_exponents() const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  QTorusPtr torus_;
  std::map<IntVec, OmegaScalar> terms_;
};

QTElem qt_mul(const QTElem& a, const QTElem& b);

// Exact solution Z of a * Z = rhs by leading-term elimination; exponents add
// under multiplication, so lex-leading monomials multiply predictably and the
// quotient is recovered term by term. Errors with "qt_division" when rhs is
// not left-divisible by a.
QTElem left_divide(const QTElem& a, const QTElem& rhs);

// omega-exponent sigma(v) in the reordering identity
//   Y_v = omega^{sigma(v)} * Y_{e_1}^{v_1} * ... * Y_{e_m}^{v_m}
// valid in a toric frame with matrix lambda (torus form = -lambda):
// sigma(v) = sum_{i<j} lambda_ij v_i v_j.
long long weyl_exponent(const IntMat& lambda, const IntVec& v);

// Y_u * e * Y_u^{-1}: each term Y_v picks up omega^{2 F(u, v)}.
QTElem conjugate_by_monomial(const QTElem& e, const IntVec& u);

// Push e through the monomial map Y_{e_i} -> Y_{images column i} into the
// target torus. The map must preserve commutation, i.e. the pullback of the
// target form along the column matrix must equal the source form; errors
// with "bad_form" otherwise. Coefficients are carried over unchanged.
QTElem monomial_transport(const QTElem& e, const IntMat& images, QTorusPtr target);

} // namespace ce
