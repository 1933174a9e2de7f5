#include "ce/sfrat.hpp"

#include <algorithm>

#include "ce/error.hpp"

namespace ce {

void SFRat::normalize() {
  require(!den_.is_zero(), "division_by_zero", "rational function with zero denominator");
  require(num_.nvars() == den_.nvars(), "arity_mismatch", "numerator/denominator arity");
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(den_.nvars(), 1);
    return;
  }
  // Shift both parts by the same monomial so the denominator sits in the
  // nonnegative cone with per-variable minimum exponent zero, then make it
  // lex-monic. Monomials are units here, so the value is unchanged.
  Exp shift = den_.min_exponents();
  for (int& e : shift) e = -e;
  if (std::any_of(shift.begin(), shift.end(), [](int e) { return e != 0; })) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  Rational lead = den_.leading().second;
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

SFRat SFRat::operator+(const SFRat& o) const {
  return SFRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

SFRat SFRat::operator-(const SFRat& o) const {
  return SFRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

SFRat SFRat::operator*(const SFRat& o) const {
  return SFRat(num_ * o.num_, den_ * o.den_);
}

SFRat SFRat::operator/(const SFRat& o) const {
  require(!o.is_zero(), "division_by_zero", "dividing by zero rational function");
  return SFRat(num_ * o.den_, den_ * o.num_);
}

SFRat SFRat::operator-() const { return SFRat(-num_, den_); }

SFRat SFRat::inverse() const {
  require(!is_zero(), "division_by_zero", "inverting zero rational function");
  return SFRat(den_, num_);
}

SFRat SFRat::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return SFRat(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

bool SFRat::equals(const SFRat& o) const { return num_ * o.den_ == o.num_ * den_; }

std::optional<LaurentPoly> SFRat::to_laurent() const {
  if (num_.is_zero()) return LaurentPoly(num_.nvars());
  return try_exact_divide(num_, den_);
}

void SFRat::reduce() {
  if (den_.is_monomial()) return;
  auto l = to_laurent();
  if (!l) return;
  num_ = *l;
  den_ = LaurentPoly::constant(num_.nvars(), 1);
  normalize();
}

SFRat SFRat::derivative(int idx) const {
  return SFRat(num_.derivative(idx) * den_ - num_ * den_.derivative(idx), den_ * den_);
}

Rational SFRat::evaluate(const std::vector<Rational>& point) const {
  Rational d = den_.evaluate(point);
  require(d != 0, "division_by_zero", "denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

double SFRat::log_evaluate(const std::vector<double>& logs) const {
  return num_.log_evaluate(logs) - den_.log_evaluate(logs);
}

std::string SFRat::str(const std::vector<std::string>& names) const {
  if (den_ == LaurentPoly::constant(den_.nvars(), 1)) return num_.str(names);
  return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

SFRat substitute(const LaurentPoly& p, const std::vector<SFRat>& values) {
  require(static_cast<int>(values.size()) == p.nvars(), "arity_mismatch",
          "substitution value count");
  int out_vars = values.empty() ? 0 : values[0].nvars();
  SFRat acc = SFRat(LaurentPoly(out_vars));
  for (const auto& [e, c] : p.terms()) {
    SFRat term = SFRat::constant(out_vars, c);
    for (size_t i = 0; i < values.size(); ++i) {
      if (e[i] != 0) term = term * values[i].pow(e[i]);
    }
    acc = acc + term;
  }
  return acc;
}

SFRat substitute(const SFRat& r, const std::vector<SFRat>& values) {
  return substitute(r.num(), values) / substitute(r.den(), values);
}

} // namespace ce
