#pragma once

#include "ce/matrix.hpp"
#include "ce/plexpr.hpp"

namespace ce {

enum class TropType { A, X, D };

// Point of a cluster torus with values in the (max,+) rationals. A and X
// points have one coordinate per direction; a D point stores (b_1..b_m,
// x_1..x_m) back to back.
struct TropPoint {
  TropType type = TropType::A;
  std::vector<Rational> v;
};

std::vector<Rational> trop_mutate_a(const std::vector<Rational>& a, int k, const IntMat& eps);
std::vector<Rational> trop_mutate_x(const std::vector<Rational>& x, int k, const IntMat& eps);
std::vector<Rational> trop_mutate_d(const std::vector<Rational>& bx, int k, const IntMat& eps);

TropPoint trop_mutate(const TropPoint& pt, int k, const IntMat& eps);

// The same mutation as a vector of piecewise-linear coordinate functions
// (entry i gives new coordinate i in terms of the old chart), for composing
// with tropicalized expressions.
std::vector<PLExpr> trop_mutation_pl(TropType type, int k, const IntMat& eps);

} // namespace ce
