#pragma once

#include <vector>

#include "ce/qtorus.hpp"

namespace ce {

// Truncated power series in one distinguished direction of a quantum torus.
// Grades are read off the k-th exponent: the slot s part collects exactly the
// terms whose k-th coordinate equals base + s, so multiplication is plain
// torus multiplication convolved over grades. Each grade carries a central
// scalar denominator because the dilogarithm coefficients are honestly
// rational in q; products of integral series keep denominator 1.
struct QSeries {
  QTorusPtr torus;
  int k = 0;
  int order = 0;    // grades 0 .. order-1 are stored
  long long base = 0; // k-th coordinate of grade 0
  std::vector<QTElem> num;
  std::vector<OmegaScalar> den;
};

QSeries qs_zero(QTorusPtr t, int k, int order);
QSeries qs_one(QTorusPtr t, int k, int order);

// Slice a torus element into grades. Errors when the k-th coordinates of the
// terms spread over more than `order` values.
QSeries qs_from_elem(const QTElem& e, int k, int order);

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QSeries& b);

// Multiplicative inverse; the lowest grade must be a single-term element.
QSeries qs_inverse(const QSeries& a);

// Series sum_n c_n * Y_w^n for a vector w with w_k = 1, graded by n.
QSeries qs_power_series(QTorusPtr t, int k, int order, const IntVec& w,
                        const std::vector<OmegaRat>& c);

// Substitution x -> q^e x: grade n picks up q^{e n}.
QSeries qs_scale_variable(const QSeries& a, int e);

// Value equality on the overlapping range of grades, cross-multiplied so the
// denominators never need to be inverted.
bool qs_equal(const QSeries& a, const QSeries& b);

// Taylor coefficients c_0..c_{order-1} of the quantum dilogarithm, pinned by
// c_0 = 1 and the functional equation Psi(q^2 x) = (1 + q x) Psi(x), which
// forces c_n = c_{n-1} * q / (q^{2n} - 1).
std::vector<OmegaRat> psi_coefficients(int order);

// The dilogarithm of the k-th coordinate direction as a series.
QSeries psi_truncated(QTorusPtr t, int k, int order);

// Which conjugator acts: Psi(X_k) alone on an X-torus, or the ratio
// Psi(X_k) Psi(Xhat_k)^{-1} on the torus of a seed on the double.
enum class AdSignature { XOnly, DDouble };

// Lattice vector of Xhat_k = X_k * prod_j B_j^{eps_kj} inside a d_torus; the
// exchange matrix is read back from the top-left block of the form.
IntVec xhat_vector(const QTorusPtr& t, int k);

// Conjugation of gen by the truncated dilogarithm, computed literally as
// Psi * gen * Psi^{-1} in the series algebra.
QSeries ad_psi(const QTElem& gen, int k, int order, AdSignature sig);

// Element with an explicit list of inverted binomial factors standing to its
// right: value = num * inv[0]^{-1} * inv[1]^{-1} * ... All factors kept in
// one list are required to commute with each other (they are binomials in
// X_k and Xhat_k throughout), so the list order carries no information and
// is kept sorted for determinism.
struct QFraction {
  QTElem num;
  std::vector<QTElem> inv;
};

QFraction qf_elem(const QTElem& e);

// Equality of values by clearing denominators: num_a * prod(inv_b) equals
// num_b * prod(inv_a). Valid because each side's factors commute.
bool qfraction_equal(const QFraction& a, const QFraction& b);

// Geometric expansion of the inverted factors to the given order.
QSeries qs_from_fraction(const QFraction& f, int k, int order);

// Exact form of the conjugation: for a single term c Y_v the commutation
// exponent kappa = (e_k, v) in q-units turns Ad into multiplication by the
// finite ratio Psi(q^{2 kappa} X_k) Psi(X_k)^{-1}, a product of |kappa|
// binomials or their inverses (and the matching Xhat factors on the double).
// Extended to sums over a common denominator.
QFraction ad_psi_fraction(const QTElem& gen, int k, AdSignature sig);

// Image of the i-th generator of the mutated chart under the monomial half
// of mutation in direction k, landing in the unmutated torus. Indices 0..m-1
// name X_i; with the DDouble signature indices m..2m-1 name B_{i-m}.
QTElem mu_prime_monomial(const IntMat& eps, int k, int idx, AdSignature sig);

// Closed form of quantum mutation on the same generator, as a numerator with
// explicit inverted binomial factors.
QFraction mu_q_closed(const IntMat& eps, int k, int idx, AdSignature sig);

// The composite Ad after the monomial map, kept exact. Equality with
// mu_q_closed is the content of the closed-form mutation theorem.
QFraction mu_q_exact(const IntMat& eps, int k, int idx, AdSignature sig);

} // namespace ce
