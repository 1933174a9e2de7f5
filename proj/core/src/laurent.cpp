#include "ce/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ce {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    require(q != 0, "bad_rational", "zero denominator in '" + s + "'");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    fail("bad_rational", "cannot parse rational '" + s + "'");
  }
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << num(r);
  if (den(r) != 1) os << "/" << den(r);
  return os.str();
}

double to_double(const Rational& r) { return static_cast<double>(r); }

Int int_pow(Int base, unsigned e) {
  Int out = 1;
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(Exp(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int idx, int power) {
  LaurentPoly p(nvars);
  Exp e(nvars, 0);
  e.at(idx) = power;
  p.add_term(e, 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exp& e, const Rational& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exp& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

const std::pair<const Exp, Rational>& LaurentPoly::leading() const {
  require(!terms_.empty(), "zero_poly", "leading term of the zero polynomial");
  return *terms_.rbegin();
}

void LaurentPoly::add_term(const Exp& e, const Rational& c) {
  if (c == 0) return;
  require(static_cast<int>(e.size()) == nvars_, "bad_exponent",
          "exponent arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  out += o;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  out -= o;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (is_zero()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (is_zero()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out(nvars_ ? nvars_ : o.nvars_);
  Exp e(out.nvars(), 0);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exp& s) const {
  LaurentPoly out(nvars_);
  Exp e(nvars_, 0);
  for (const auto& [e1, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + s[i];
    out.terms_.emplace(e, c);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1) out = out * base;
    if (k >>= 1) base = base * base;
  }
  return out;
}

bool LaurentPoly::has_negative_coeff() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return true;
  return false;
}

bool LaurentPoly::coeffs_integral() const {
  for (const auto& [e, c] : terms_)
    if (den(c) != 1) return false;
  return true;
}

Exp LaurentPoly::min_exponents() const {
  Exp m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

LaurentPoly LaurentPoly::derivative(int idx) const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exp d = e;
    d[idx] -= 1;
    out.add_term(d, c * e[idx]);
  }
  return out;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& point) const {
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      require(point[i] != 0 || e[i] > 0, "eval_domain",
              "negative exponent at a zero coordinate");
      Rational p(int_pow(num(point[i]), static_cast<unsigned>(std::abs(e[i]))),
                 int_pow(den(point[i]), static_cast<unsigned>(std::abs(e[i]))));
      if (e[i] < 0) p = 1 / p;
      t *= p;
    }
    out += t;
  }
  return out;
}

double LaurentPoly::log_evaluate(const std::vector<double>& logs) const {
  require(!terms_.empty(), "eval_domain", "log of zero polynomial");
  // log-sum-exp over the terms, anchored at the largest exponent.
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> vals;
  vals.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    require(c > 0, "eval_domain", "log evaluation needs positive coefficients");
    double v = std::log(to_double(c));
    for (int i = 0; i < nvars_; ++i) v += e[i] * logs[i];
    vals.push_back(v);
    best = std::max(best, v);
  }
  double acc = 0;
  for (double v : vals) acc += std::exp(v - best);
  return best + std::log(acc);
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = c > 0 ? c : Rational(-c);
    bool any_var = std::any_of(e.begin(), e.end(), [](int k) { return k != 0; });
    if (a != 1 || !any_var) os << rational_str(a);
    bool started = (a != 1 || !any_var);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (started) os << "*";
      started = true;
      if (static_cast<size_t>(i) < names.size()) os << names[i];
      else os << "x" << i + 1;
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& p, const LaurentPoly& o) {
  if (o.is_zero()) return std::nullopt;
  const int n = p.nvars();
  if (p.is_zero()) return LaurentPoly(n);

  // Strip monomial content so both operands live in the polynomial cone,
  // where lex long division terminates.
  Exp sp = p.min_exponents(), so = o.min_exponents();
  Exp neg(n);
  for (int i = 0; i < n; ++i) neg[i] = -sp[i];
  LaurentPoly r = p.shifted(neg);
  for (int i = 0; i < n; ++i) neg[i] = -so[i];
  LaurentPoly d = o.shifted(neg);

  LaurentPoly q(n);
  const auto& dl = d.leading();
  Exp t(n);
  while (!r.is_zero()) {
    const auto& rl = r.leading();
    for (int i = 0; i < n; ++i) {
      t[i] = rl.first[i] - dl.first[i];
      if (t[i] < 0) return std::nullopt;
    }
    LaurentPoly step = LaurentPoly::monomial(t, rl.second / dl.second);
    q += step;
    r -= step * d;
  }
  for (int i = 0; i < n; ++i) neg[i] = sp[i] - so[i];
  return q.shifted(neg);
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& o) {
  auto q = try_exact_divide(p, o);
  require(q.has_value(), "not_divisible", "exact division failed");
  return *q;
}

} // namespace ce
