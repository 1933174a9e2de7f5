#pragma once

#include "ce/lamination.hpp"
#include "ce/qseed.hpp"
#include "ce/sfrat.hpp"

namespace ce {

// Expansion of weighted arc systems in a reference chart. The chart is a
// triangulation t of the n-gon with m = 2n-3 edge slots, the first n-3
// mutable. Arc systems live on their own triangulation and are carried into
// the chart along a flip word; weights must be integers and may be negative
// only on boundary slots (curves retracting around one marked point).

// Total endpoint weight modulo 2 at each polygon vertex. The expansions
// below have integral exponents exactly when every entry is zero.
std::vector<int> endpoint_weight_parity(const MarkedArcSet& l);

// Solve sum_{i < nmut} h_i (row i of eps) = s for h supported on the mutable
// block, exactly over Q. The solution is returned doubled (size = rank of
// eps) so half-integral entries stay in integer storage. Errors with
// "outside_domain" when the system is inconsistent or a denominator exceeds
// two.
IntVec h_exponent_solve(const IntVec& s, const IntMat& eps, int nmut);

// One side of a canonical form: the chart expansion of a weighted arc
// system, split as
//   omega^{omega_exp} * factors[0] * ... * factors.back() * Y_g
// in the frame torus of the chart. factors holds one polynomial copy per
// unit of weight, slot ascending, each conjugated into its position in the
// product; boundary slots contribute to g only. sign_d selects the surface
// (+1) or its mirror (-1), which negates the chart form.
struct SideFactors {
  QTorusPtr frame;
  std::vector<QTElem> factors;
  IntVec g;
  long long omega_exp = 0;
};

SideFactors quantum_side_factors(const MarkedArcSet& l, const Triangulation& t, int sign_d);

// Same decomposition along the commutative route (chart mutation of rational
// functions and commutative factor extraction). Coefficients are plain
// integers and omega_exp is zero.
SideFactors classical_side_factors(const MarkedArcSet& l, const Triangulation& t, int sign_d);

// Quantum Laurent expansion of the arc system in the chart of t, written in
// the X-generators of the mutable block (torus form = 4 * mutable part of
// eps). Errors: "bad_lamination" for non-integral weights, "negative_weight"
// for a negative weight on a mutable slot, "outside_domain" when the
// expansion is not Laurent in the chart, "a0_parity" when odd endpoint
// parity forces half-integral exponents.
QTElem ia_q(const MarkedArcSet& l, const Triangulation& t);

// Classical counterpart as a rational function of X_1..X_{n-3}.
SFRat ia_classical(const MarkedArcSet& l, const Triangulation& t);

// Normal form of the double-torus expansion of a mirror pair of arc
// systems:
//   omega^{omega_exp} * den_factors[0]^{-1} * ... * den_factors.back()^{-1}
//     * num_factors[0] * ... * num_factors.back() * Y_mono
// on the doubled frame torus of the chart; the top block carries the chart
// frame, the bottom block the mirror frame. Denominator factors are
// polynomials in the X-generators, numerator factors in the mirrored ones.
// The monomial displays classically as B^{b_exp} X^{x_exp2 / 2}. Unmatched
// boundary weight between the two arc systems is read as loops sitting on
// one side of the doubled surface; a loop of odd weight makes entries of
// x_exp2 odd without losing exactness, since mono itself stays integral.
struct DoubleCanonicalForm {
  QTorusPtr torus;
  IntMat eps;    // full chart exchange matrix, kept for decoding
  int nmut = 0;  // mutable slot count of the chart
  long long omega_exp = 0;
  std::vector<QTElem> den_factors;
  std::vector<QTElem> num_factors;
  IntVec mono;   // size 2m
  IntVec b_exp;  // size m
  IntVec x_exp2; // size m, doubled
};

// Errors as ia_q, plus "outside_domain" when the endpoint totals of the two
// arc systems cannot be reconciled by boundary loops.
DoubleCanonicalForm id_q(const MarkedArcSet& c, const MarkedArcSet& cmirror,
                         const Triangulation& t);
DoubleCanonicalForm id_classical(const MarkedArcSet& c, const MarkedArcSet& cmirror,
                                 const Triangulation& t);

// Classical value of the normal form as a rational function in
// (B_1..B_m, X_1..X_m). Errors with "a0_parity" when x_exp2 has an odd
// entry; half-integral exponents have no rational-function meaning.
SFRat dcf_at_one(const DoubleCanonicalForm& f);

} // namespace ce
