#include "ce/monodromy.hpp"

#include <array>

#include "ce/error.hpp"

namespace ce {

namespace {

using Mat2 = std::array<LaurentPoly, 4>; // row-major 2x2

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return Mat2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
              a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

} // namespace

LaurentPoly monodromy_trace(int nedges, const std::vector<std::pair<int, Turn>>& word,
                            int power) {
  require(nedges > 0, "bad_word", "edge count must be positive");
  require(!word.empty(), "bad_word", "monodromy word must be nonempty");
  require(power >= 0, "bad_word", "negative power");
  LaurentPoly zero(nedges), one = LaurentPoly::constant(nedges, 1);
  Mat2 rho{one, zero, zero, one};
  for (auto [edge, turn] : word) {
    require(edge >= 0 && edge < nedges, "bad_word", "edge index out of range");
    LaurentPoly h = LaurentPoly::variable(nedges, edge);       // X^{1/2}
    LaurentPoly hi = LaurentPoly::variable(nedges, edge, -1);  // X^{-1/2}
    Mat2 m = (turn == Turn::Right) ? Mat2{h, h, zero, hi} : Mat2{h, zero, hi, hi};
    rho = mat2_mul(rho, m);
  }
  Mat2 p{one, zero, zero, one};
  for (int i = 0; i < power; ++i) p = mat2_mul(p, rho);
  return p[0] + p[3];
}

} // namespace ce
