#include "ce/canonical.hpp"

#include "ce/error.hpp"

namespace ce {

CanonicalMap parse_canonical_map(const std::string& name) {
  if (name == "phi") return CanonicalMap::Phi;
  if (name == "pi") return CanonicalMap::Pi;
  if (name == "p") return CanonicalMap::P;
  if (name == "j") return CanonicalMap::J;
  if (name == "iota") return CanonicalMap::Iota;
  fail("bad_map", "unknown canonical map: " + name);
}

namespace {

SFRat monomial_in(int ambient, const std::vector<std::pair<int, long long>>& factors) {
  Exp e(ambient, 0);
  for (auto [idx, pw] : factors) e[idx] += static_cast<int>(pw);
  return SFRat(LaurentPoly::monomial(e, 1));
}

} // namespace

SFRat canonical_pullback(CanonicalMap map, const SFRat& f, const IntMat& eps) {
  int m = static_cast<int>(eps.size());
  std::vector<SFRat> values;
  switch (map) {
    case CanonicalMap::Phi: {
      require(f.nvars() == 2 * m, "bad_map", "phi pullback expects a double-torus function");
      for (int i = 0; i < m; ++i)
        values.push_back(monomial_in(2 * m, {{m + i, 1}, {i, -1}})); // B_i -> A°_i / A_i
      for (int i = 0; i < m; ++i) {
        std::vector<std::pair<int, long long>> fac;
        for (int j = 0; j < m; ++j)
          if (eps[i][j] != 0) fac.push_back({j, eps[i][j]});
        values.push_back(monomial_in(2 * m, fac));
      }
      break;
    }
    case CanonicalMap::Pi: {
      require(f.nvars() == 2 * m, "bad_map", "pi pullback expects a product-torus function");
      for (int i = 0; i < m; ++i) values.push_back(monomial_in(2 * m, {{m + i, 1}}));
      for (int i = 0; i < m; ++i) {
        std::vector<std::pair<int, long long>> fac{{m + i, 1}};
        for (int j = 0; j < m; ++j)
          if (eps[i][j] != 0) fac.push_back({j, eps[i][j]});
        values.push_back(monomial_in(2 * m, fac));
      }
      break;
    }
    case CanonicalMap::P: {
      require(f.nvars() == m, "bad_map", "p pullback expects an x-torus function");
      for (int i = 0; i < m; ++i) {
        std::vector<std::pair<int, long long>> fac;
        for (int j = 0; j < m; ++j)
          if (eps[i][j] != 0) fac.push_back({j, eps[i][j]});
        values.push_back(monomial_in(m, fac));
      }
      break;
    }
    case CanonicalMap::J: {
      require(f.nvars() == 2 * m, "bad_map", "j pullback expects a double-torus function");
      for (int i = 0; i < m; ++i) values.push_back(SFRat::constant(m, 1));
      for (int i = 0; i < m; ++i) values.push_back(SFRat::variable(m, i));
      break;
    }
    case CanonicalMap::Iota: {
      require(f.nvars() == 2 * m, "bad_map", "iota expects a double-torus function");
      for (int i = 0; i < m; ++i) values.push_back(monomial_in(2 * m, {{i, -1}}));
      for (int i = 0; i < m; ++i) {
        std::vector<std::pair<int, long long>> fac{{m + i, 1}};
        for (int j = 0; j < m; ++j)
          if (eps[i][j] != 0) fac.push_back({j, eps[i][j]});
        values.push_back(monomial_in(2 * m, fac));
      }
      break;
    }
  }
  return substitute(f, values);
}

SFRat poisson_bracket_x(const SFRat& f, const SFRat& g, const IntMat& eps) {
  int m = static_cast<int>(eps.size());
  require(f.nvars() == m && g.nvars() == m, "arity_mismatch", "bracket on the x-torus");
  SFRat acc = SFRat(LaurentPoly(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (eps[i][j] == 0) continue;
      SFRat term = SFRat::constant(m, eps[i][j]) * SFRat::variable(m, i) *
                   SFRat::variable(m, j) * f.derivative(i) * g.derivative(j);
      if (!term.is_zero()) acc = acc + term;
    }
  acc.reduce();
  return acc;
}

SFRat poisson_bracket_d(const SFRat& f, const SFRat& g, const IntMat& eps) {
  int m = static_cast<int>(eps.size());
  require(f.nvars() == 2 * m && g.nvars() == 2 * m, "arity_mismatch",
          "bracket on the double torus");
  SFRat acc = SFRat(LaurentPoly(2 * m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (eps[i][j] == 0) continue;
      SFRat term = SFRat::constant(2 * m, eps[i][j]) * SFRat::variable(2 * m, m + i) *
                   SFRat::variable(2 * m, m + j) * f.derivative(m + i) * g.derivative(m + j);
      if (!term.is_zero()) acc = acc + term;
    }
  for (int i = 0; i < m; ++i) {
    SFRat w = SFRat::variable(2 * m, m + i) * SFRat::variable(2 * m, i);
    SFRat term = w * (f.derivative(m + i) * g.derivative(i) - f.derivative(i) * g.derivative(m + i));
    if (!term.is_zero()) acc = acc + term;
  }
  acc.reduce();
  return acc;
}

} // namespace ce
