#include "doctest.h"

#include "ce/cluster.hpp"
#include "ce/dilog.hpp"
#include "ce/error.hpp"
#include "ce/qseed.hpp"
#include "ce/qtorus.hpp"
#include "ce/seed.hpp"
#include "ce/sfrat.hpp"

using namespace ce;

namespace {

const IntMat kB2{{0, 1}, {-1, 0}};

SFRat fraction_value(const QFraction& f) {
  SFRat v{f.num.at_one()};
  for (const QTElem& d : f.inv) v = v / SFRat{d.at_one()};
  return v;
}

} // namespace

TEST_CASE("quantum torus multiplication") {
  QTorusPtr t = x_torus(kB2);
  QTElem x1 = QTElem::monomial(t, {1, 0});
  QTElem x2 = QTElem::monomial(t, {0, 1});

  CHECK(x1 * x2 == QTElem::monomial(t, {1, 1}, OmegaScalar::omega_power(4)));
  CHECK(x1 * x2 == QTElem::monomial(t, {1, 1}, OmegaScalar::q_power(1)));
  // X1 X2 = q^2 X2 X1 when eps_12 = 1.
  CHECK(x1 * x2 == QTElem::monomial(t, {0, 0}, OmegaScalar::q_power(2)) * (x2 * x1));

  QTElem s = x1 + x2;
  CHECK(s.star() == x1.star() + x2.star());
  CHECK(s.at_one() == LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1));
  CHECK(s.min_exponents() == IntVec{0, 0});
  CHECK((s * s).coeffs_q_integral());

  // Conjugation by a frame monomial twists each term by omega^{2 F(u, v)}.
  QTElem c = conjugate_by_monomial(x2, {1, 0});
  CHECK(c == QTElem::monomial(t, {0, 1}, OmegaScalar::omega_power(8)));

  QTElem z = s * x1 + x2 * x2;
  CHECK(left_divide(s, s * z) == z);
  CHECK_THROWS_AS(left_divide(s, x1), Error);
}

TEST_CASE("weyl ordering and monomial transport") {
  IntMat lambda{{0, 1}, {-1, 0}};
  CHECK(weyl_exponent(lambda, {2, 3}) == 6);
  CHECK(weyl_exponent(lambda, {1, 0}) == 0);

  QTorusPtr t = frame_torus(lambda);
  QTElem m1 = QTElem::monomial(t, {1, 0});
  QTElem m2 = QTElem::monomial(t, {0, 1});
  // Frame relation M(u) M(v) = omega^{-lambda(u,v)} M(u+v).
  CHECK(m1 * m2 == QTElem::monomial(t, {1, 1}, OmegaScalar::omega_power(-1)));

  // Swapping the two directions reverses the form sign.
  QTorusPtr neg = x_torus(IntMat{{0, -1}, {1, 0}});
  QTorusPtr pos = x_torus(kB2);
  IntMat swap_cols{{0, 1}, {1, 0}};
  QTElem moved = monomial_transport(QTElem::monomial(pos, {1, 0}), swap_cols, neg);
  CHECK(moved == QTElem::monomial(neg, {0, 1}));
  CHECK_THROWS_AS(monomial_transport(QTElem::monomial(pos, {1, 0}),
                                     IntMat{{1, 0}, {0, 1}}, neg),
                  Error);
}

TEST_CASE("quantum seed mutation is involutive and periodic in rank two") {
  CompatiblePair p = principal_pair(kB2);
  QuantumSeedState st = initial_quantum_state(p);

  QuantumSeedState back = quantum_mutate_seed(quantum_mutate_seed(st, 0), 0);
  CHECK(back.pair.lambda == st.pair.lambda);
  CHECK(back.pair.b == st.pair.b);
  for (int i = 0; i < 4; ++i) CHECK(back.vars[i] == st.vars[i]);

  QuantumSeedState five = st;
  for (int k : {0, 1, 0, 1, 0}) five = quantum_mutate_seed(five, k);
  CHECK(five.vars[0] == st.vars[1]);
  CHECK(five.vars[1] == st.vars[0]);
  CHECK(five.vars[2] == st.vars[2]);
  CHECK(five.vars[3] == st.vars[3]);

  // The pair comes back with the two mutable indices exchanged.
  auto sigma = [](int i) { return i < 2 ? 1 - i : i; };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(five.pair.lambda[i][j] == p.lambda[sigma(i)][sigma(j)]);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) CHECK(five.pair.b[i][j] == p.b[sigma(i)][sigma(j)]);
}

TEST_CASE("quantum f-polynomials specialize to the classical ones") {
  QFPolyResult q1 = quantum_f_polynomial(kB2, {0}, 0);
  CHECK(q1.omega_shift == 0);
  CHECK(q1.g == IntVec{-1, 1});
  CHECK(q1.f.coeffs_nonneg());
  CHECK(q1.f.coeffs_q_integral());
  CHECK(q1.f.at_one() == f_polynomial(kB2, {0}, 0).f);

  QFPolyResult q2 = quantum_f_polynomial(kB2, {0, 1}, 1);
  CHECK(q2.omega_shift == 0);
  CHECK(q2.g == IntVec{-1, 0});
  CHECK(q2.f.at_one() == f_polynomial(kB2, {0, 1}, 1).f);
  CHECK(q2.f.term_count() == 3);
}

TEST_CASE("dilogarithm functional equation") {
  auto c = psi_coefficients(5);
  CHECK(c[0] == OmegaRat(OmegaScalar(1), OmegaScalar(1)));
  CHECK(c[1] == OmegaRat(OmegaScalar::q_power(1),
                         OmegaScalar::q_power(2) - OmegaScalar(1)));

  QTorusPtr t = x_torus(IntMat{{0}});
  int order = 6;
  QSeries psi = psi_truncated(t, 0, order);
  QTElem lin = QTElem::constant(t, OmegaScalar(1)) +
               QTElem::monomial(t, {1}, OmegaScalar::q_power(1));
  CHECK(qs_equal(qs_scale_variable(psi, 2), qs_mul(qs_from_elem(lin, 0, order), psi)));
  CHECK_FALSE(qs_equal(qs_scale_variable(psi, 4), qs_mul(qs_from_elem(lin, 0, order), psi)));
}

TEST_CASE("closed-form quantum mutation matches the conjugation") {
  IntMat eps{{0, 1}, {-1, 0}};
  for (int idx = 0; idx < 2; ++idx) {
    QFraction exact = mu_q_exact(eps, 0, idx, AdSignature::XOnly);
    QFraction closed = mu_q_closed(eps, 0, idx, AdSignature::XOnly);
    CHECK(qfraction_equal(exact, closed));
  }

  // Classical limit of the closed form is the rational mutation formula.
  std::vector<SFRat> x{SFRat::variable(2, 0), SFRat::variable(2, 1)};
  std::vector<SFRat> xm = mutate_x_chart(x, 0, eps);
  for (int idx = 0; idx < 2; ++idx) {
    SFRat v = fraction_value(mu_q_closed(eps, 0, idx, AdSignature::XOnly));
    CHECK(v.equals(xm[idx]));
  }

  // Same statement on the double, including the B generators.
  std::vector<SFRat> bd, xd;
  for (int i = 0; i < 2; ++i) xd.push_back(SFRat::variable(4, i));
  for (int i = 0; i < 2; ++i) bd.push_back(SFRat::variable(4, 2 + i));
  std::vector<SFRat> xd0 = xd, bd0 = bd;
  mutate_d_chart(bd, xd, 0, eps);
  for (int idx = 0; idx < 4; ++idx) {
    SFRat v = fraction_value(mu_q_closed(eps, 0, idx, AdSignature::DDouble));
    CHECK(v.equals(idx < 2 ? xd[idx] : bd[idx - 2]));
  }
}
