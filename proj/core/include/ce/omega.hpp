#pragma once

#include <map>
#include <string>

#include "ce/rational.hpp"

namespace ce {

// Integer Laurent polynomial in the formal unit omega, with q = omega^4.
// This is the coefficient ring of every quantum torus in the engine; tori
// presented in q-units embed by scaling all form values by 4.
class OmegaScalar {
 public:
  OmegaScalar() = default;
  OmegaScalar(long long c) { add(0, Int(c)); }         // NOLINT(runtime/explicit)
  OmegaScalar(const Int& c) { add(0, c); }             // NOLINT(runtime/explicit)

  static OmegaScalar omega_power(int e, const Int& c = 1);
  static OmegaScalar q_power(int e, const Int& c = 1) { return omega_power(4 * e, c); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_unit() const; // single term with coefficient +-1
  const std::map<int, Int>& coeffs() const { return c_; }

  void add(int e, const Int& c);

  OmegaScalar operator-() const;
  OmegaScalar operator+(const OmegaScalar& o) const;
  OmegaScalar operator-(const OmegaScalar& o) const;
  OmegaScalar operator*(const OmegaScalar& o) const;
  OmegaScalar& operator+=(const OmegaScalar& o);
  bool operator==(const OmegaScalar& o) const { return c_ == o.c_; }
  bool operator!=(const OmegaScalar& o) const { return !(*this == o); }

  OmegaScalar shifted(int e) const; // multiply by omega^e
  OmegaScalar pow(unsigned k) const;

  // The involution omega -> omega^{-1} (the coefficient part of *).
  OmegaScalar star() const;

  bool nonneg() const;
  bool exponents_divisible_by(int d) const;

  // Specialization omega = 1 (classical limit).
  Rational at_one() const;

  // Exact division in Z[omega, omega^{-1}]; error when not divisible.
  OmegaScalar exact_div(const OmegaScalar& o) const;

  std::string str() const;

 private:
  std::map<int, Int> c_; // exponent of omega -> integer coefficient
};

// Ratio of two OmegaScalars. Only used where genuinely rational functions of
// q appear (dilogarithm series coefficients); equality is cross-multiplied.
struct OmegaRat {
  OmegaScalar num, den;

  OmegaRat() : num(0), den(1) {}
  OmegaRat(OmegaScalar n, OmegaScalar d);

  OmegaRat operator+(const OmegaRat& o) const;
  OmegaRat operator-(const OmegaRat& o) const;
  OmegaRat operator*(const OmegaRat& o) const;
  bool operator==(const OmegaRat& o) const;
  bool is_zero() const { return num.is_zero(); }
};

} // namespace ce
