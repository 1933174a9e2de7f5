#pragma once

#include <optional>

#include "ce/laurent.hpp"

namespace ce {

// Rational function num/den in Laurent polynomials. Kept normalized by
// stripping the common integer content and common monomial factor and fixing
// the sign of the leading denominator coefficient; no polynomial gcd is ever
// computed, so equality goes through cross-multiplication. Mutation formulas
// only ever produce subtraction-free numerators and denominators, which the
// property tests check; the type itself stores general signed coefficients
// (derivatives and brackets need them).
class SFRat {
 public:
  SFRat() = default;
  explicit SFRat(const LaurentPoly& n) : num_(n), den_(LaurentPoly::constant(n.nvars(), 1)) {
    normalize();
  }
  SFRat(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) { normalize(); }

  static SFRat constant(int nvars, const Rational& c) {
    return SFRat(LaurentPoly::constant(nvars, c));
  }
  static SFRat variable(int nvars, int idx, int power = 1) {
    return SFRat(LaurentPoly::variable(nvars, idx, power));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  int nvars() const { return den_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  SFRat operator+(const SFRat& o) const;
  SFRat operator-(const SFRat& o) const;
  SFRat operator*(const SFRat& o) const;
  SFRat operator/(const SFRat& o) const;
  SFRat operator-() const;
  SFRat inverse() const;
  SFRat pow(int k) const;

  bool equals(const SFRat& o) const; // cross-multiplied exact equality

  // Laurent normal form if the denominator divides the numerator.
  std::optional<LaurentPoly> to_laurent() const;

  // If the Laurent reduction succeeds, replace this value by the reduced
  // representative (denominator becomes 1). Keeps mutation pipelines small.
  void reduce();

  SFRat derivative(int idx) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  double log_evaluate(const std::vector<double>& logs) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void normalize();

  LaurentPoly num_, den_;
};

// p with each variable replaced by the given value. Values must share one
// common arity; negative exponents invert (error on substituting zero there).
SFRat substitute(const LaurentPoly& p, const std::vector<SFRat>& values);
SFRat substitute(const SFRat& r, const std::vector<SFRat>& values);

} // namespace ce
