#pragma once

#include <vector>

#include "ce/qtorus.hpp"
#include "ce/seed.hpp"

namespace ce {

// Quantum cluster chart: a compatible pair together with the current cluster
// variables, each written in the frame torus of the initial seed. Mutation
// returns a fresh state; the torus pointer is shared.
struct QuantumSeedState {
  CompatiblePair pair;
  QTorusPtr torus;
  std::vector<QTElem> vars;
};

QuantumSeedState initial_quantum_state(const CompatiblePair& p);

// Weyl-ordered monomial of the current frame:
//   M(u) = omega^{sigma(u)} * vars_1^{u_1} * ... * vars_m^{u_m},
// sigma(u) = sum_{i<j} lambda_ij u_i u_j for the current pair matrix. This is
// the unique expression satisfying M(u)M(v) = omega^{-lambda(u,v)} M(u+v) on
// the basis variables. Negative exponents are valid only on variables that
// are still monomials (frozen directions).
QTElem frame_monomial(const QuantumSeedState& st, const IntVec& u);

// Exchange in direction k: the new variable solves
//   A_k * A'_k = omega^{c+} M(u+) + omega^{c-} M(u-)
// with u± = sum_i [±b_ik]_+ e_i and c± = -lambda(e_k, u±), the unique scalars
// making both summands frame monomials M(u± - e_k). The quotient is exact by
// the quantum Laurent property, so a division failure is an internal error.
QuantumSeedState quantum_mutate_seed(const QuantumSeedState& st, int k);

struct QFPolyResult {
  QTElem f;            // over the rank-n torus with form -4*b0
  IntVec g;            // extremal exponent, cluster block
  int omega_shift = 0; // bare omega power on the extremal term
};

// Principal-coefficient quantum cluster variable split as
//   A_l = omega^{shift} * F(Y_1, ..., Y_n) * M0(g),  Y_j = M0(btilde e_j),
// where F is normalized to F(0) = 1. The split exists and is unique because
// every exponent of A_l lies in g + btilde * Z_{>=0}^n; both the positivity
// and the q-integrality of the coefficients are asserted.
QFPolyResult quantum_f_polynomial(const IntMat& b0, const std::vector<int>& word, int l);

} // namespace ce
