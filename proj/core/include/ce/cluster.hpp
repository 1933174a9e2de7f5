#pragma once

#include "ce/matrix.hpp"
#include "ce/sfrat.hpp"

namespace ce {

// Coefficient semifields for labeled seed patterns. Trop carries a Laurent
// monomial in y with a (+) b = componentwise-min of exponents, Trivial is the
// one-element semifield, Universal is a subtraction-free rational function.
enum class SemifieldKind { Trivial, Trop, Universal };

struct Coeff {
  SemifieldKind kind = SemifieldKind::Trivial;
  IntVec trop;  // Trop: exponents of y_1..y_n
  SFRat value;  // Universal: element of the ambient function field
};

Coeff coeff_one(SemifieldKind kind, int ny, int ambient);
Coeff coeff_mul(const Coeff& a, const Coeff& b);
Coeff coeff_pow(const Coeff& a, int k);
Coeff coeff_oplus_one(const Coeff& a); // a (+) 1 in the semifield
SFRat coeff_to_sfrat(const Coeff& a, int ambient, int y_offset);

// Labeled seed (x, y, b). The x entries are rational functions of the initial
// cluster (and of y for non-trivial coefficients), so a chain of mutations
// yields each cluster variable expressed in the initial chart directly.
struct LabeledSeed {
  SemifieldKind kind = SemifieldKind::Trivial;
  int n = 0;        // mutable rank
  int ambient = 0;  // variable count of the SFRat entries
  int y_offset = 0; // ambient index of y_1 (Trop coefficients)
  IntMat b;         // n x n exchange matrix
  std::vector<SFRat> x;
  std::vector<Coeff> y;
};

LabeledSeed principal_seed(const IntMat& b); // Trop coefficients, y_j = generator j
LabeledSeed trivial_seed(const IntMat& b);

LabeledSeed mutate_labeled(const LabeledSeed& s, int k);

struct FPolyResult {
  LaurentPoly f; // polynomial in y_1..y_n
  IntVec g;
};

// Cluster variable x_l after mutating along word, split into its F-polynomial
// and g-vector. Checks homogeneity of the principal-coefficient variable
// under deg(x_i) = e_i, deg(y_j) = -(column j of b); failure means the
// mutation formulas are wrong, so it is an internal error.
FPolyResult f_polynomial(const IntMat& b0, const std::vector<int>& word, int l);

// F|_F(yhat) / F|_P(y) * x^g with yhat_j = y_j prod_i x_i^{b0_ij}. Inverse of
// the split above: reconstructs the cluster variable in any coefficient
// semifield from (F, g) and the initial data.
SFRat separation_reconstruct(const LaurentPoly& f, const IntVec& g, SemifieldKind kind,
                             const IntMat& b0, const std::vector<SFRat>& xvals,
                             const std::vector<Coeff>& yvals);

// Coefficient-free chart mutations. eps is the full m x m exchange matrix
// (frozen directions included); the coordinate vectors have one entry per
// direction and live in any common ambient variable set.
std::vector<SFRat> mutate_a_chart(const std::vector<SFRat>& a, int k, const IntMat& eps);
std::vector<SFRat> mutate_x_chart(const std::vector<SFRat>& x, int k, const IntMat& eps);
void mutate_d_chart(std::vector<SFRat>& bcoord, std::vector<SFRat>& xcoord, int k,
                    const IntMat& eps);

} // namespace ce
