#include "ce/qseed.hpp"

#include <algorithm>

#include "ce/error.hpp"

namespace ce {

QuantumSeedState initial_quantum_state(const CompatiblePair& p) {
  QuantumSeedState st;
  st.pair = p;
  st.torus = frame_torus(p.lambda);
  int m = p.m();
  st.vars.reserve(m);
  for (int i = 0; i < m; ++i) {
    IntVec v(m, 0);
    v[i] = 1;
    st.vars.push_back(QTElem::monomial(st.torus, v));
  }
  return st;
}

QTElem frame_monomial(const QuantumSeedState& st, const IntVec& u) {
  require(static_cast<int>(u.size()) == st.pair.m(), "arity_mismatch", "frame exponent size");
  OmegaScalar sigma =
      OmegaScalar::omega_power(static_cast<int>(weyl_exponent(st.pair.lambda, u)));
  QTElem out = QTElem::constant(st.torus, sigma);
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (u[i] > 0)
      out = qt_mul(out, st.vars[i].pow(static_cast<unsigned>(u[i])));
    else
      out = qt_mul(out, st.vars[i].monomial_pow(u[i]));
  }
  return out;
}

QuantumSeedState quantum_mutate_seed(const QuantumSeedState& st, int k) {
  require(k >= 0 && k < st.pair.n(), "bad_direction", "quantum mutation index");
  int m = st.pair.m();
  IntVec up(m, 0), um(m, 0), ek(m, 0);
  ek[k] = 1;
  for (int i = 0; i < m; ++i) {
    up[i] = pos_part(st.pair.b[i][k]);
    um[i] = pos_part(-st.pair.b[i][k]);
  }
  long long cp = -bilinear(st.pair.lambda, ek, up);
  long long cm = -bilinear(st.pair.lambda, ek, um);
  QTElem rhs = frame_monomial(st, up).scaled(OmegaScalar::omega_power(static_cast<int>(cp)));
  rhs += frame_monomial(st, um).scaled(OmegaScalar::omega_power(static_cast<int>(cm)));

  QuantumSeedState out;
  out.pair = mutate_pair(st.pair, k, 1);
  out.torus = st.torus;
  out.vars = st.vars;
  try {
    out.vars[k] = left_divide(st.vars[k], rhs);
  } catch (const Error&) {
    fail("internal", "quantum exchange is not Laurent over the initial frame");
  }
  return out;
}

QFPolyResult quantum_f_polynomial(const IntMat& b0, const std::vector<int>& word, int l) {
  int n = static_cast<int>(b0.size());
  require(l >= 0 && l < n, "bad_direction", "target variable index");
  CompatiblePair p = principal_pair(b0);
  QuantumSeedState st = initial_quantum_state(p);
  for (int k : word) st = quantum_mutate_seed(st, k);
  const QTElem& a = st.vars[l];

  // The coefficient block of the extremal exponent is the componentwise
  // minimum over all terms, and exactly one term attains it.
  IntVec bmin(n, 0);
  bool first = true;
  for (const auto& [v, c] : a.terms()) {
    for (int j = 0; j < n; ++j) bmin[j] = first ? v[n + j] : std::min(bmin[j], v[n + j]);
    first = false;
  }
  const IntVec* gfull = nullptr;
  for (const auto& [v, c] : a.terms()) {
    bool hit = true;
    for (int j = 0; j < n && hit; ++j) hit = v[n + j] == bmin[j];
    if (!hit) continue;
    require(gfull == nullptr, "internal", "extremal exponent is not unique");
    gfull = &v;
  }
  require(gfull != nullptr, "internal", "extremal exponent is not attained");

  const OmegaScalar& c0 = a.terms().at(*gfull);
  require(c0.is_unit() && c0.nonneg(), "internal", "extremal coefficient is not a power of omega");
  int shift = c0.coeffs().begin()->first;

  IntMat fform = int_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fform[i][j] = -4 * b0[i][j];
  QTElem f(make_torus(fform));

  for (const auto& [v, c] : a.terms()) {
    IntVec ae(n, 0);
    for (int j = 0; j < n; ++j) ae[j] = v[n + j] - (*gfull)[n + j];
    IntVec ba = mat_vec(p.b, ae);
    for (int i = 0; i < 2 * n; ++i)
      require(v[i] == (*gfull)[i] + ba[i], "internal", "exponent outside the expansion cone");
    long long tw = bilinear(p.lambda, ba, *gfull);
    f.add_term(ae, c.shifted(static_cast<int>(tw) - shift));
  }
  require(f.coeffs_nonneg(), "internal", "quantum F-polynomial has a negative coefficient");
  require(f.coeffs_q_integral(), "internal", "quantum F-polynomial not integral in q");

  QFPolyResult out;
  out.f = f;
  out.g.assign(gfull->begin(), gfull->begin() + n);
  out.omega_shift = shift;
  return out;
}

} // namespace ce
