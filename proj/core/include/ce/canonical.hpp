#pragma once

#include "ce/matrix.hpp"
#include "ce/sfrat.hpp"

namespace ce {

// Pullbacks of the structure maps between the A-, X- and double tori, all
// realized as variable substitutions on rational functions. Variable layout
// per map (m = eps rank):
//   phi:  f(B_1..B_m, X_1..X_m)          -> g(A_1..A_m, A°_1..A°_m)
//   pi:   f(X_i (x) 1, 1 (x) X_i)        -> g(B_1..B_m, X_1..X_m)
//   p:    f(X_1..X_m)                    -> g(A_1..A_m)
//   j:    f(B_1..B_m, X_1..X_m)          -> g(X_1..X_m)      (all B_i = 1)
//   iota: f(B_1..B_m, X_1..X_m)          -> g(B_1..B_m, X_1..X_m)
enum class CanonicalMap { Phi, Pi, P, J, Iota };

CanonicalMap parse_canonical_map(const std::string& name);
SFRat canonical_pullback(CanonicalMap map, const SFRat& f, const IntMat& eps);

// {f,g} = sum eps_ij X_i X_j df/dX_i dg/dX_j on the X-torus.
SFRat poisson_bracket_x(const SFRat& f, const SFRat& g, const IntMat& eps);

// Double-torus version on variables (B_1..B_m, X_1..X_m): the X-part bracket
// plus the pairing {X_i, B_j} = delta_ij X_i B_j.
SFRat poisson_bracket_d(const SFRat& f, const SFRat& g, const IntMat& eps);

} // namespace ce
