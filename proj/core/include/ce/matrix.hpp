#pragma once

#include <optional>
#include <vector>

#include "ce/rational.hpp"

namespace ce {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>; // row-major

IntMat int_mat(int rows, int cols);
IntMat identity_mat(int n);
IntMat transpose(const IntMat& a);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& v);
bool is_skew_symmetric(const IntMat& a);

// v1^t A v2 for a square matrix A.
long long bilinear(const IntMat& a, const IntVec& v1, const IntVec& v2);

// Exact determinant (fraction-free elimination in big integers).
Int mat_det(const IntMat& a);

// Exact solution of A x = b over Q, free variables set to zero; nullopt when
// the system is inconsistent.
std::optional<std::vector<Rational>> solve_rational(const IntMat& a,
                                                    const std::vector<Rational>& b);

inline long long pos_part(long long x) { return x > 0 ? x : 0; }
inline int sgn(long long x) { return (x > 0) - (x < 0); }

} // namespace ce
