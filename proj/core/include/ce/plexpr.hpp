#pragma once

#include "ce/sfrat.hpp"

namespace ce {

struct AffForm {
  std::vector<Rational> grad;
  Rational c;
};

// max over a nonempty set of affine forms (a convex PL function).
using MaxSet = std::vector<AffForm>;

// Piecewise-linear expression in difference-of-convex normal form:
//   base + sum_i max(pos_i) - sum_j max(neg_j).
// Tropicalized rational functions and their compositions with tropical
// mutation maps stay in this shape; equality is decided exactly.
struct PLExpr {
  int nvars = 0;
  AffForm base;
  std::vector<MaxSet> pos, neg;
};

PLExpr pl_constant(int nvars, const Rational& c);
PLExpr pl_affine(const AffForm& f);

// Tropicalization: each monomial becomes the linear form of its exponent
// vector (coefficients vanish in the log limit), sums become max, the
// quotient becomes a difference. Errors on negative coefficients.
PLExpr tropicalize(const SFRat& r);

Rational pl_eval(const PLExpr& e, const std::vector<Rational>& pt);

PLExpr pl_neg(const PLExpr& e);
PLExpr pl_add(const PLExpr& a, const PLExpr& b);
PLExpr pl_sub(const PLExpr& a, const PLExpr& b);
PLExpr pl_scale(const PLExpr& e, const Rational& s);
PLExpr pl_max(const PLExpr& a, const PLExpr& b);

// f with variable i replaced by args[i].
PLExpr pl_compose(const PLExpr& f, const std::vector<PLExpr>& args);

// Exact function equality. Both sides are expanded to single convex maxima
// and compared by mutual upper-envelope domination; each per-form domination
// query is a small rational linear program.
bool pl_equal(const PLExpr& a, const PLExpr& b);

// Drop redundant forms and fold singleton maxima into the affine base.
void pl_simplify(PLExpr& e);

} // namespace ce
