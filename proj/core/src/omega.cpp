#include "ce/omega.hpp"

#include <sstream>

namespace ce {

OmegaScalar OmegaScalar::omega_power(int e, const Int& c) {
  OmegaScalar s;
  s.add(e, c);
  return s;
}

bool OmegaScalar::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

bool OmegaScalar::is_unit() const {
  if (c_.size() != 1) return false;
  const Int& v = c_.begin()->second;
  return v == 1 || v == -1;
}

void OmegaScalar::add(int e, const Int& c) {
  if (c == 0) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

OmegaScalar OmegaScalar::operator-() const {
  OmegaScalar out;
  for (const auto& [e, c] : c_) out.c_.emplace(e, -c);
  return out;
}

OmegaScalar OmegaScalar::operator+(const OmegaScalar& o) const {
  OmegaScalar out = *this;
  out += o;
  return out;
}

OmegaScalar& OmegaScalar::operator+=(const OmegaScalar& o) {
  for (const auto& [e, c] : o.c_) add(e, c);
  return *this;
}

OmegaScalar OmegaScalar::operator-(const OmegaScalar& o) const {
  OmegaScalar out = *this;
  for (const auto& [e, c] : o.c_) out.add(e, -c);
  return out;
}

OmegaScalar OmegaScalar::operator*(const OmegaScalar& o) const {
  OmegaScalar out;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) out.add(e1 + e2, c1 * c2);
  return out;
}

OmegaScalar OmegaScalar::shifted(int e) const {
  OmegaScalar out;
  for (const auto& [k, c] : c_) out.c_.emplace(k + e, c);
  return out;
}

OmegaScalar OmegaScalar::pow(unsigned k) const {
  OmegaScalar out(1);
  OmegaScalar base = *this;
  while (k) {
    if (k & 1) out = out * base;
    if (k >>= 1) base = base * base;
  }
  return out;
}

OmegaScalar OmegaScalar::star() const {
  OmegaScalar out;
  for (const auto& [e, c] : c_) out.c_.emplace(-e, c);
  return out;
}

bool OmegaScalar::nonneg() const {
  for (const auto& [e, c] : c_)
    if (c < 0) return false;
  return true;
}

bool OmegaScalar::exponents_divisible_by(int d) const {
  for (const auto& [e, c] : c_)
    if (e % d != 0) return false;
  return true;
}

Rational OmegaScalar::at_one() const {
  Int s = 0;
  for (const auto& [e, c] : c_) s += c;
  return Rational(s);
}

OmegaScalar OmegaScalar::exact_div(const OmegaScalar& o) const {
  require(!o.is_zero(), "div_zero", "division by zero scalar");
  OmegaScalar r = *this, q;
  const auto dl = *o.c_.rbegin();
  while (!r.is_zero()) {
    const auto rl = *r.c_.rbegin();
    require(rl.second % dl.second == 0, "not_divisible",
            "scalar division leaves a fractional coefficient");
    Int c = rl.second / dl.second;
    OmegaScalar t = omega_power(rl.first - dl.first, c);
    q += t;
    r = r - t * o;
    if (!r.is_zero() && r.c_.rbegin()->first >= rl.first)
      fail("not_divisible", "scalar division does not terminate");
  }
  return q;
}

std::string OmegaScalar::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = c > 0 ? c : Int(-c);
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      if (a != 1) os << "*";
      os << "w";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

OmegaRat::OmegaRat(OmegaScalar n, OmegaScalar d) : num(std::move(n)), den(std::move(d)) {
  require(!den.is_zero(), "div_zero", "zero denominator");
}

OmegaRat OmegaRat::operator+(const OmegaRat& o) const {
  return OmegaRat(num * o.den + o.num * den, den * o.den);
}

OmegaRat OmegaRat::operator-(const OmegaRat& o) const {
  return OmegaRat(num * o.den - o.num * den, den * o.den);
}

OmegaRat OmegaRat::operator*(const OmegaRat& o) const {
  return OmegaRat(num * o.num, den * o.den);
}

bool OmegaRat::operator==(const OmegaRat& o) const {
  return num * o.den == o.num * den;
}

} // namespace ce
