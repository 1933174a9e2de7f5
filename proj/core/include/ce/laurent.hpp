#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ce/rational.hpp"

namespace ce {

using Exp = std::vector<int>; // exponent vector, one entry per variable

// Multivariate Laurent polynomial over Q. Terms are kept in a std::map keyed
// by exponent vector, so iteration order is the lexicographic term order and
// serialization is deterministic. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() : nvars_(0) {}
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly variable(int nvars, int idx, int power = 1);
  static LaurentPoly monomial(const Exp& e, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  size_t term_count() const { return terms_.size(); }

  const std::map<Exp, Rational>& terms() const { return terms_; }

  // Lex-largest term. Precondition: nonzero.
  const std::pair<const Exp, Rational>& leading() const;

  void add_term(const Exp& e, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(const Exp& e) const; // multiply by x^e
  LaurentPoly pow(unsigned k) const;

  bool has_negative_coeff() const;
  bool coeffs_integral() const;

  // Componentwise minimum of exponents over all terms (the monomial content).
  Exp min_exponents() const;

  // Formal partial derivative in variable idx.
  LaurentPoly derivative(int idx) const;

  // Exact value at a rational point; all coordinates must be nonzero when a
  // variable appears with negative exponent.
  Rational evaluate(const std::vector<Rational>& point) const;

  // log of the value at the point (exp(logs[i]) per variable), computed in
  // log space so huge arguments do not overflow. Requires positive
  // coefficients.
  double log_evaluate(const std::vector<double>& logs) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  std::map<Exp, Rational> terms_;
};

// Quotient and error if o does not divide p in the Laurent ring. Division is
// lex long division on the monomial-content-stripped parts; lex is a
// translation-invariant well order on the shifted supports, so termination
// and failure detection are both exact.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& o);

std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& p, const LaurentPoly& o);

} // namespace ce
