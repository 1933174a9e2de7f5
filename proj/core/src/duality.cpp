#include "ce/duality.hpp"

#include <algorithm>

#include "ce/cluster.hpp"
#include "ce/error.hpp"

namespace ce {

namespace {

IntVec vneg(const IntVec& v) {
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

IntVec vsub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool qt_is_one(const QTElem& e) {
  if (e.term_count() != 1) return false;
  const auto& [v, c] = *e.terms().begin();
  if (!c.is_one()) return false;
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

void validate_arcs(const MarkedArcSet& l, const Triangulation& t) {
  require(l.tri.n == t.n, "bad_polygon", "arc system and chart sit on different polygons");
  require(static_cast<int>(l.w.size()) == l.tri.m(), "arity_mismatch",
          "one weight per edge slot");
  for (int s = 0; s < l.tri.m(); ++s) {
    require(den(l.w[s]) == 1, "bad_lamination", "arc weights must be integers");
    if (l.tri.is_diagonal_slot(s))
      require(l.w[s] >= 0, "negative_weight", "negative weight on a mutable slot");
  }
}

IntVec permuted_weights(const MarkedArcSet& l, const Triangulation& fin) {
  IntVec w(fin.m(), 0);
  for (int s = 0; s < fin.m(); ++s) {
    int src = l.tri.slot_of(fin.edges[s]);
    require(src >= 0, "internal", "replayed edge missing from the arc triangulation");
    w[s] = num(l.w[src]).convert_to<long long>();
  }
  return w;
}

CompatiblePair chart_pair(const Triangulation& t, int sign_d) {
  CompatiblePair p = pair_from_triangulation(t);
  if (sign_d >= 0) return p;
  IntMat neg = p.lambda;
  for (auto& row : neg)
    for (auto& x : row) x = -x;
  return CompatiblePair::make(neg, p.b, IntVec(p.n(), -4));
}

struct ChartChain {
  CompatiblePair pair0;
  QuantumSeedState st;
  IntVec wfin;
};

ChartChain quantum_chain(const MarkedArcSet& l, const Triangulation& t, int sign_d) {
  validate_arcs(l, t);
  ChartChain cc;
  cc.pair0 = chart_pair(t, sign_d);
  auto [word, fin] = flip_path(t, l.tri);
  cc.wfin = permuted_weights(l, fin);
  cc.st = initial_quantum_state(cc.pair0);
  for (int k : word) cc.st = quantum_mutate_seed(cc.st, k);
  return cc;
}

// Cone coordinates of a term list: every exponent must be the extremal one
// plus a nonnegative integer combination of the columns of b, and exactly
// one term sits at the extremal position.
struct ConeScan {
  size_t extremal = 0;
  std::vector<IntVec> a;
};

ConeScan scan_cone(const std::vector<IntVec>& exps, const IntMat& b) {
  require(!exps.empty(), "internal", "empty term list in factor extraction");
  int nd = b.empty() ? 0 : static_cast<int>(b[0].size());
  std::vector<std::vector<Rational>> xs;
  xs.reserve(exps.size());
  const IntVec& ref = exps.front();
  for (const auto& v : exps) {
    std::vector<Rational> rhs(v.size());
    for (size_t i = 0; i < v.size(); ++i) rhs[i] = Rational(v[i] - ref[i]);
    auto sol = solve_rational(b, rhs);
    require(sol.has_value(), "internal", "term outside the factor cone");
    xs.push_back(std::move(*sol));
  }
  std::vector<Rational> xmin = xs.front();
  for (const auto& x : xs)
    for (int i = 0; i < nd; ++i) xmin[i] = std::min(xmin[i], x[i]);

  ConeScan out;
  bool found = false;
  for (size_t idx = 0; idx < xs.size(); ++idx) {
    if (std::equal(xs[idx].begin(), xs[idx].begin() + nd, xmin.begin())) {
      require(!found, "internal", "extremal term is not unique");
      out.extremal = idx;
      found = true;
    }
  }
  require(found, "internal", "extremal term is not attained");

  out.a.reserve(xs.size());
  for (const auto& x : xs) {
    IntVec av(nd, 0);
    for (int i = 0; i < nd; ++i) {
      Rational d = x[i] - xmin[i];
      require(den(d) == 1 && d >= 0, "internal", "cone coordinate not a nonnegative integer");
      av[i] = num(d).convert_to<long long>();
    }
    out.a.push_back(std::move(av));
  }
  return out;
}

struct ArcFactor {
  QTElem f;
  IntVec g;
};

// Split a Laurent arc variable as f * Y_g with f a polynomial in the columns
// of the exchange matrix and Y_g the extremal monomial. The torus relation
// Y_w Y_g = omega^{-lambda(w, g)} Y_{w+g} fixes the coefficient twists.
ArcFactor arc_factor(const QTElem& a, const CompatiblePair& p) {
  std::vector<IntVec> exps;
  std::vector<OmegaScalar> cs;
  exps.reserve(a.term_count());
  for (const auto& [v, c] : a.terms()) {
    exps.push_back(v);
    cs.push_back(c);
  }
  ConeScan sc = scan_cone(exps, p.b);
  ArcFactor out;
  out.g = exps[sc.extremal];
  out.f = QTElem(a.torus());
  for (size_t i = 0; i < exps.size(); ++i) {
    IntVec w = vsub(exps[i], out.g);
    long long tw = bilinear(p.lambda, w, out.g);
    out.f.add_term(w, cs[i].shifted(static_cast<int>(tw)));
  }
  return out;
}

// Shared tail of the two side-factor routes: expand the slot product
//   prod_s A_s^{w_s} = omega^{-sigma} * (conjugated factor copies) * Y_g
// by pushing every extremal monomial to the right. Each copy of a slot
// factor is conjugated by the accumulated exponent in front of it; the
// collected scalar is sigma = sum_{s<s'} lambda(g_s, g_s') w_s w_s'.
SideFactors assemble_side(const QTorusPtr& frame, const IntMat& lambda,
                          const std::vector<QTElem>& fs, const std::vector<IntVec>& gs,
                          const IntVec& w, int nd, bool conjugate, long long alpha) {
  int m = static_cast<int>(w.size());
  SideFactors out;
  out.frame = frame;
  IntVec prefix(m, 0);
  for (int s = 0; s < m; ++s) {
    if (s < nd && w[s] > 0 && !qt_is_one(fs[s])) {
      for (long long j = 0; j < w[s]; ++j) {
        out.factors.push_back(conjugate ? conjugate_by_monomial(fs[s], prefix) : fs[s]);
        for (int i = 0; i < m; ++i) prefix[i] += gs[s][i];
      }
    } else {
      for (int i = 0; i < m; ++i) prefix[i] += w[s] * gs[s][i];
    }
  }
  out.g = prefix;
  long long sigma = 0;
  for (int s = 0; s < m; ++s) {
    if (w[s] == 0) continue;
    for (int s2 = s + 1; s2 < m; ++s2) {
      if (w[s2] == 0) continue;
      sigma += w[s] * w[s2] * bilinear(lambda, gs[s], gs[s2]);
    }
  }
  out.omega_exp = alpha - sigma;
  return out;
}

IntVec unit_vec(int m, int i) {
  IntVec v(m, 0);
  v[i] = 1;
  return v;
}

struct ClassicalChain {
  Seed chart;
  std::vector<LaurentPoly> avals;
  IntVec wfin;
};

ClassicalChain classical_chain(const MarkedArcSet& l, const Triangulation& t) {
  validate_arcs(l, t);
  ClassicalChain cc;
  cc.chart = exchange_from_triangulation(t);
  auto [word, fin] = flip_path(t, l.tri);
  cc.wfin = permuted_weights(l, fin);
  int m = t.m();
  std::vector<SFRat> a;
  a.reserve(m);
  for (int i = 0; i < m; ++i) a.push_back(SFRat::variable(m, i));
  Seed cur = cc.chart;
  for (int k : word) {
    a = mutate_a_chart(a, k, cur.eps);
    cur = mutate_matrix(cur, k);
  }
  cc.avals.reserve(m);
  for (int s = 0; s < m; ++s) {
    auto lp = a[s].to_laurent();
    require(lp.has_value(), "internal", "chart expansion is not Laurent");
    cc.avals.push_back(std::move(*lp));
  }
  return cc;
}

// Classical slot factor from a commutative Laurent expansion; coefficients
// must come out as nonnegative integers.
struct ClassicalFactor {
  std::vector<IntVec> a;     // cone coordinates per term
  std::vector<Int> coeff;    // matching coefficients
  IntVec g;
  size_t extremal = 0;
};

ClassicalFactor classical_factor(const LaurentPoly& lp, const IntMat& b) {
  std::vector<IntVec> exps;
  std::vector<Int> cs;
  exps.reserve(lp.term_count());
  for (const auto& [e, c] : lp.terms()) {
    require(den(c) == 1 && c > 0, "internal", "chart expansion coefficient not a positive integer");
    exps.push_back(IntVec(e.begin(), e.end()));
    cs.push_back(num(c));
  }
  ConeScan sc = scan_cone(exps, b);
  ClassicalFactor out;
  out.g = exps[sc.extremal];
  out.a = std::move(sc.a);
  out.coeff = std::move(cs);
  out.extremal = sc.extremal;
  return out;
}

Exp to_exp(const IntVec& v) {
  Exp e(v.size());
  for (size_t i = 0; i < v.size(); ++i) e[i] = static_cast<int>(v[i]);
  return e;
}

DoubleCanonicalForm assemble_double(const SideFactors& s, const SideFactors& mir,
                                    const Triangulation& t, long long extra_omega,
                                    bool conjugate) {
  int m = t.m();
  DoubleCanonicalForm out;
  out.torus = double_frame_torus(lambda_matrix(t));
  out.eps = exchange_from_triangulation(t).eps;
  out.nmut = t.ndiag();
  IntMat top = int_mat(2 * m, m), bot = int_mat(2 * m, m);
  for (int j = 0; j < m; ++j) {
    top[j][j] = 1;
    bot[m + j][j] = 1;
  }
  IntVec negg = vneg(s.g);
  for (auto it = s.factors.rbegin(); it != s.factors.rend(); ++it) {
    QTElem d = conjugate ? conjugate_by_monomial(*it, negg) : *it;
    out.den_factors.push_back(monomial_transport(d, top, out.torus));
  }
  for (const auto& f : mir.factors)
    out.num_factors.push_back(monomial_transport(f, bot, out.torus));
  out.omega_exp = extra_omega - s.omega_exp + mir.omega_exp;
  out.mono = negg;
  out.mono.insert(out.mono.end(), mir.g.begin(), mir.g.end());
  out.b_exp = mir.g;
  out.x_exp2 = h_exponent_solve(vsub(mir.g, s.g), out.eps, out.nmut);
  return out;
}

IntVec vertex_totals(const MarkedArcSet& l) {
  IntVec tot(l.tri.n, 0);
  for (int s = 0; s < l.tri.m(); ++s) {
    require(den(l.w[s]) == 1, "bad_lamination", "arc weights must be integers");
    long long w = num(l.w[s]).convert_to<long long>();
    if (w == 0) continue;
    tot[l.tri.edges[s].u] += w;
    tot[l.tri.edges[s].v] += w;
  }
  return tot;
}

// Recovers the net weight M_v of the boundary loop around each marked point
// from the per-vertex difference of endpoint totals, which satisfies
// delta_v = M_{v-1} + M_v around the boundary cycle. Propagating from M_0 = x
// gives M_v = c_v + (-1)^v x; an odd polygon pins x, an even one needs the
// alternating sum of delta to vanish and leaves x free, fixed here by
// minimising the total loop weight.
IntVec net_loop_weights(const IntVec& delta) {
  int n = static_cast<int>(delta.size());
  std::vector<long long> c(n, 0);
  for (int v = 1; v < n; ++v) c[v] = delta[v] - c[v - 1];
  long long x = 0;
  if (n % 2 == 1) {
    long long twice = delta[0] - c[n - 1];
    require(twice % 2 == 0, "outside_domain",
            "boundary weights do not close up into loops");
    x = twice / 2;
  } else {
    require(c[n - 1] == delta[0], "outside_domain",
            "boundary weights do not close up into loops");
    std::vector<long long> pts(n);
    for (int v = 0; v < n; ++v) pts[v] = (v % 2 == 0) ? -c[v] : c[v];
    std::sort(pts.begin(), pts.end());
    auto total = [&](long long y) {
      long long s = 0;
      for (int v = 0; v < n; ++v) s += std::llabs(c[v] + (v % 2 == 0 ? y : -y));
      return s;
    };
    x = pts[(n - 1) / 2];
    for (long long cand : {pts[n / 2], 0LL}) {
      if (total(cand) < total(x) || (total(cand) == total(x) && std::llabs(cand) < std::llabs(x)))
        x = cand;
    }
  }
  IntVec m(n);
  for (int v = 0; v < n; ++v) m[v] = c[v] + (v % 2 == 0 ? x : -x);
  return m;
}

struct LoopSplit {
  MarkedArcSet primary;
  MarkedArcSet mirror;
  IntVec sloop; // loop weight around each marked point, primary side
  IntVec mloop; // same for the mirror side
};

MarkedArcSet strip_side_weight(const MarkedArcSet& l, const IntVec& loops) {
  MarkedArcSet out = l;
  int n = l.tri.n;
  for (int v = 0; v < n; ++v) {
    if (loops[v] == 0) continue;
    int s = l.tri.slot_of(make_chord(n, v, (v + 1) % n));
    require(s >= 0, "internal", "boundary chord missing from triangulation");
    out.w[s] -= loops[v];
  }
  return out;
}

// Unmatched boundary weight between the two arc systems encodes loops that
// sit entirely on one side of the doubled surface. They carry no arc factor,
// only a half-integral crossing monomial, so they are split off before the
// frame computation and multiplied back in afterwards.
LoopSplit split_boundary_loops(const MarkedArcSet& c, const MarkedArcSet& cm) {
  require(c.tri.n == cm.tri.n, "bad_polygon",
          "the two arc systems sit on different polygons");
  int n = c.tri.n;
  IntVec tc = vertex_totals(c), tm = vertex_totals(cm);
  IntVec delta(n);
  for (int v = 0; v < n; ++v) delta[v] = tc[v] - tm[v];
  IntVec net = net_loop_weights(delta);
  LoopSplit out{c, cm, IntVec(n, 0), IntVec(n, 0)};
  for (int v = 0; v < n; ++v) {
    if (net[v] > 0)
      out.sloop[v] = net[v];
    else
      out.mloop[v] = -net[v];
  }
  out.primary = strip_side_weight(c, out.sloop);
  out.mirror = strip_side_weight(cm, out.mloop);
  return out;
}

// A loop of weight k around a marked point contributes X_i^{-k/2} on the
// primary side and Xhat_i^{+k/2} on the mirror side, one factor for each
// chart edge i ending at that point. The frame vector of Xhat_i is the
// mirror row (0, eps_i), so both kinds of loop shift the normal-form
// monomial by an integral lattice vector even though the displayed
// X-exponents pick up odd entries.
void merge_loop_monomials(DoubleCanonicalForm& out, const Triangulation& t,
                          const IntVec& sloop, const IntVec& mloop) {
  int m = t.m();
  for (int v = 0; v < t.n; ++v) {
    for (int side = 0; side < 2; ++side) {
      long long k = side == 0 ? sloop[v] : mloop[v];
      if (k == 0) continue;
      IntVec rowsum(m, 0);
      for (int i = 0; i < m; ++i) {
        if (t.edges[i].u != v && t.edges[i].v != v) continue;
        out.x_exp2[i] += side == 0 ? -k : k;
        for (int j = 0; j < m; ++j) rowsum[j] += out.eps[i][j];
      }
      IntVec u(2 * m, 0);
      for (int j = 0; j < m; ++j) {
        require((k * rowsum[j]) % 2 == 0, "internal",
                "loop monomial left the frame lattice");
        long long h = k * rowsum[j] / 2;
        if (side == 0) {
          u[j] = -h;
        } else {
          u[m + j] = h;
          out.b_exp[j] += h;
        }
      }
      out.omega_exp += out.torus->pairing(out.mono, u);
      for (int j = 0; j < 2 * m; ++j) out.mono[j] += u[j];
    }
  }
}

} // namespace

std::vector<int> endpoint_weight_parity(const MarkedArcSet& l) {
  std::vector<int> par(l.tri.n, 0);
  for (int s = 0; s < l.tri.m(); ++s) {
    long long w = num(l.w[s]).convert_to<long long>() % 2;
    if (w == 0) continue;
    par[l.tri.edges[s].u] ^= 1;
    par[l.tri.edges[s].v] ^= 1;
  }
  return par;
}

IntVec h_exponent_solve(const IntVec& s, const IntMat& eps, int nmut) {
  int m = static_cast<int>(eps.size());
  require(static_cast<int>(s.size()) == m, "arity_mismatch", "exponent vector size");
  IntMat b = int_mat(m, nmut);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < nmut; ++i) b[j][i] = eps[i][j];
  std::vector<Rational> rhs(m);
  for (int j = 0; j < m; ++j) rhs[j] = Rational(s[j]);
  auto sol = solve_rational(b, rhs);
  require(sol.has_value(), "outside_domain", "exponent is not in the chart lattice");
  IntVec h2(m, 0);
  for (int i = 0; i < nmut; ++i) {
    Rational d2 = (*sol)[i] * 2;
    require(den(d2) == 1, "outside_domain", "exponent is not half-integral");
    h2[i] = num(d2).convert_to<long long>();
  }
  return h2;
}

SideFactors quantum_side_factors(const MarkedArcSet& l, const Triangulation& t, int sign_d) {
  ChartChain cc = quantum_chain(l, t, sign_d);
  int m = t.m(), nd = t.ndiag();
  std::vector<QTElem> fs(m);
  std::vector<IntVec> gs(m);
  for (int s = 0; s < m; ++s) {
    if (s < nd && cc.wfin[s] > 0) {
      ArcFactor af = arc_factor(cc.st.vars[s], cc.pair0);
      fs[s] = af.f;
      gs[s] = af.g;
    } else {
      gs[s] = unit_vec(m, s);
    }
  }
  long long alpha = weyl_exponent(cc.st.pair.lambda, cc.wfin);
  return assemble_side(cc.st.torus, cc.pair0.lambda, fs, gs, cc.wfin, nd, true, alpha);
}

SideFactors classical_side_factors(const MarkedArcSet& l, const Triangulation& t, int sign_d) {
  ClassicalChain cc = classical_chain(l, t);
  CompatiblePair p = chart_pair(t, sign_d);
  QTorusPtr frame = frame_torus(p.lambda);
  int m = t.m(), nd = t.ndiag();
  std::vector<QTElem> fs(m);
  std::vector<IntVec> gs(m);
  for (int s = 0; s < m; ++s) {
    if (s < nd && cc.wfin[s] > 0) {
      ClassicalFactor cf = classical_factor(cc.avals[s], p.b);
      QTElem f(frame);
      for (size_t i = 0; i < cf.a.size(); ++i)
        f.add_term(mat_vec(p.b, cf.a[i]), OmegaScalar(cf.coeff[i]));
      fs[s] = f;
      gs[s] = cf.g;
    } else {
      gs[s] = unit_vec(m, s);
    }
  }
  return assemble_side(frame, p.lambda, fs, gs, cc.wfin, nd, false, 0);
}

QTElem ia_q(const MarkedArcSet& l, const Triangulation& t) {
  validate_arcs(l, t);
  for (int p : endpoint_weight_parity(l))
    require(p == 0, "a0_parity", "odd endpoint weight total at a marked point");
  ChartChain cc = quantum_chain(l, t, 1);
  QTElem val = frame_monomial(cc.st, cc.wfin);
  Seed chart = exchange_from_triangulation(t);
  int nd = t.ndiag();
  IntMat eps_mut = int_mat(nd, nd);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j) eps_mut[i][j] = chart.eps[i][j];
  QTElem out(x_torus(eps_mut));
  for (const auto& [v, c] : val.terms()) {
    IntVec h2 = h_exponent_solve(v, chart.eps, nd);
    IntVec h(nd, 0);
    for (int i = 0; i < nd; ++i) {
      require(h2[i] % 2 == 0, "a0_parity", "endpoint parity forces half-integral exponents");
      h[i] = h2[i] / 2;
    }
    out.add_term(h, c);
  }
  return out;
}

SFRat ia_classical(const MarkedArcSet& l, const Triangulation& t) {
  validate_arcs(l, t);
  for (int p : endpoint_weight_parity(l))
    require(p == 0, "a0_parity", "odd endpoint weight total at a marked point");
  ClassicalChain cc = classical_chain(l, t);
  CompatiblePair p = pair_from_triangulation(t);
  int m = t.m(), nd = t.ndiag();
  IntVec gsum(m, 0);
  SFRat out = SFRat::constant(nd, 1);
  for (int s = 0; s < m; ++s) {
    long long w = cc.wfin[s];
    if (w == 0) continue;
    if (s < nd) {
      ClassicalFactor cf = classical_factor(cc.avals[s], p.b);
      for (int i = 0; i < m; ++i) gsum[i] += w * cf.g[i];
      LaurentPoly f(nd);
      for (size_t i = 0; i < cf.a.size(); ++i)
        f.add_term(to_exp(cf.a[i]), Rational(cf.coeff[i]));
      bool trivial = f.term_count() == 1 && f.terms().begin()->first == Exp(nd, 0) &&
                     f.terms().begin()->second == 1;
      if (!trivial) out = out * SFRat(f).pow(static_cast<int>(w));
    } else {
      gsum[s] += w;
    }
  }
  IntVec h2 = h_exponent_solve(gsum, cc.chart.eps, nd);
  Exp h(nd, 0);
  for (int i = 0; i < nd; ++i) {
    require(h2[i] % 2 == 0, "a0_parity", "endpoint parity forces half-integral exponents");
    h[i] = static_cast<int>(h2[i] / 2);
  }
  return out * SFRat(LaurentPoly::monomial(h, 1));
}

DoubleCanonicalForm id_q(const MarkedArcSet& c, const MarkedArcSet& cmirror,
                         const Triangulation& t) {
  LoopSplit ls = split_boundary_loops(c, cmirror);
  SideFactors s = quantum_side_factors(ls.primary, t, 1);
  SideFactors mir = quantum_side_factors(ls.mirror, t, -1);
  long long nl = bilinear(lambda_matrix(t), s.g, mir.g);
  DoubleCanonicalForm out = assemble_double(s, mir, t, -nl, true);
  merge_loop_monomials(out, t, ls.sloop, ls.mloop);
  return out;
}

DoubleCanonicalForm id_classical(const MarkedArcSet& c, const MarkedArcSet& cmirror,
                                 const Triangulation& t) {
  LoopSplit ls = split_boundary_loops(c, cmirror);
  SideFactors s = classical_side_factors(ls.primary, t, 1);
  SideFactors mir = classical_side_factors(ls.mirror, t, -1);
  DoubleCanonicalForm out = assemble_double(s, mir, t, 0, false);
  merge_loop_monomials(out, t, ls.sloop, ls.mloop);
  return out;
}

SFRat dcf_at_one(const DoubleCanonicalForm& f) {
  int m2 = f.torus->m;
  int m = m2 / 2;
  int nd = f.nmut;
  // Exponents of factor terms decode through the chart matrix back to the
  // cone coordinates they were built from.
  auto cone_exp = [&](const IntVec& w) {
    IntVec h2 = h_exponent_solve(w, f.eps, nd);
    IntVec a(nd, 0);
    for (int i = 0; i < nd; ++i) {
      require(h2[i] % 2 == 0, "internal", "factor exponent is not integral");
      a[i] = h2[i] / 2;
    }
    return a;
  };
  LaurentPoly numer = LaurentPoly::constant(2 * m, 1);
  LaurentPoly denom = numer;
  for (const auto& d : f.den_factors) {
    LaurentPoly p(2 * m);
    for (const auto& [v, c] : d.terms()) {
      IntVec a = cone_exp(IntVec(v.begin(), v.begin() + m));
      Exp e(2 * m, 0);
      for (int i = 0; i < nd; ++i) e[m + i] = static_cast<int>(a[i]);
      p.add_term(e, c.at_one());
    }
    denom = denom * p;
  }
  for (const auto& g : f.num_factors) {
    LaurentPoly p(2 * m);
    for (const auto& [v, c] : g.terms()) {
      IntVec w(v.begin() + m, v.end());
      IntVec a = cone_exp(w);
      Exp e(2 * m, 0);
      for (int j = 0; j < m; ++j) e[j] = static_cast<int>(w[j]);
      for (int i = 0; i < nd; ++i) e[m + i] += static_cast<int>(a[i]);
      p.add_term(e, c.at_one());
    }
    numer = numer * p;
  }
  Exp mono(2 * m, 0);
  for (int j = 0; j < m; ++j) mono[j] = static_cast<int>(f.b_exp[j]);
  for (int i = 0; i < m; ++i) {
    require(f.x_exp2[i] % 2 == 0, "a0_parity", "half-integral exponent has no classical value");
    mono[m + i] = static_cast<int>(f.x_exp2[i] / 2);
  }
  return SFRat(numer.shifted(mono), denom);
}

} // namespace ce
