#include "ce/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "ce/cluster.hpp"
#include "ce/dilog.hpp"
#include "ce/duality.hpp"
#include "ce/error.hpp"
#include "ce/hyperbolic.hpp"
#include "ce/plexpr.hpp"
#include "ce/qseed.hpp"
#include "ce/snake.hpp"
#include "ce/tropical.hpp"

namespace ce {

namespace {

using SteadyClock = std::chrono::steady_clock;

double seconds_since(SteadyClock::time_point t0) {
  return std::chrono::duration<double>(SteadyClock::now() - t0).count();
}

// Every suite draws from its own stream so the set of suites that happen to
// run, and the order they run in, never changes what any one suite sees.
uint64_t derive_seed(uint64_t seed, const std::string& tag) {
  uint64_t h = 1469598103934665603ull;
  for (char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h ^ (seed * 0x9e3779b97f4a7c15ull + 1);
}

long long rint(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

double runif(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

CheckResult finish(const std::string& name, bool pass, const std::string& detail,
                   SteadyClock::time_point t0) {
  return CheckResult{name, pass, detail, seconds_since(t0)};
}

CheckResult caught(const std::string& name, const Error& e, SteadyClock::time_point t0) {
  return finish(name, false, "unexpected error " + e.code() + ": " + e.what(), t0);
}

int thread_cap(int jobs) {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("CE_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) cap = v;
  }
  return std::min(cap, std::max(jobs, 1));
}

// Negate row and column k; the exchange matrix a chart sees after its own
// mutation, needed to express mu_k o mu_k honestly.
IntMat flip_sign_rowcol(const IntMat& eps, int k) {
  IntMat out = eps;
  int m = static_cast<int>(eps.size());
  for (int i = 0; i < m; ++i) {
    out[k][i] = -out[k][i];
    out[i][k] = -out[i][k];
  }
  return out;
}

IntMat mutable_block(const IntMat& b, int nd) {
  IntMat out;
  for (int i = 0; i < nd; ++i) out.push_back(IntVec(b[i].begin(), b[i].begin() + nd));
  return out;
}

std::vector<Chord> all_diagonals(int n) {
  std::vector<Chord> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 2; v < n; ++v) {
      if (u == 0 && v == n - 1) continue;
      out.push_back(Chord{u, v});
    }
  return out;
}

std::vector<int> random_word(std::mt19937_64& rng, int nd, int len) {
  std::vector<int> w;
  int last = -1;
  for (int i = 0; i < len; ++i) {
    int k = static_cast<int>(rint(rng, 0, nd - 1));
    if (nd > 1)
      while (k == last) k = static_cast<int>(rint(rng, 0, nd - 1));
    w.push_back(k);
    last = k;
  }
  return w;
}

// Side weights t_v on the boundary chord {v, v+1} with t_{v-1} + t_v = -d_v,
// so the combined endpoint weight vanishes at every marked point. Around the
// cycle the recursion leaves one free alternating parameter; for odd n it is
// pinned (and integral, since the alternating sum of d has the parity of the
// total sum), for even n the system is solvable only when the alternating
// sum of d vanishes.
std::optional<IntVec> a0_side_completion(int n, const IntVec& d) {
  IntVec p(n, 0);
  for (int v = 1; v < n; ++v) p[v] = -d[v] - p[v - 1];
  if (n % 2 == 1) {
    long long twice = -d[0] - p[n - 1];
    if (twice % 2 != 0) return std::nullopt;
    long long x = twice / 2;
    IntVec t(n, 0);
    for (int v = 0; v < n; ++v) t[v] = p[v] + (v % 2 == 0 ? x : -x);
    return t;
  }
  if (p[n - 1] != -d[0]) return std::nullopt;
  return p;
}

IntVec diagonal_endpoint_totals(int n, const std::map<std::pair<int, int>, long long>& w) {
  IntVec d(n, 0);
  for (const auto& [uv, k] : w) {
    d[uv.first] += k;
    d[uv.second] += k;
  }
  return d;
}

// Weighted chord collection in endpoint normal form: the diagonals are
// completed to a triangulation and every weight lands on its slot. Throws
// "arcs_cross" through complete_to_triangulation when the diagonals overlap.
MarkedArcSet arcs_from_chords(int n, const std::map<std::pair<int, int>, long long>& w) {
  std::vector<Chord> diags;
  for (const auto& [uv, k] : w) {
    Chord c{uv.first, uv.second};
    if (k != 0 && !is_side(n, c)) diags.push_back(c);
  }
  Triangulation tri = complete_to_triangulation(n, diags);
  MarkedArcSet out{tri, std::vector<Rational>(tri.m(), Rational(0))};
  for (const auto& [uv, k] : w) {
    int slot = tri.slot_of(Chord{uv.first, uv.second});
    require(slot >= 0, "internal", "completed triangulation lost an arc");
    out.w[slot] += Rational(k);
  }
  return out;
}

SFRat fraction_at_one(const QFraction& f) {
  int nvars = f.num.at_one().nvars();
  SFRat val(f.num.at_one());
  for (const QTElem& b : f.inv) val = val / SFRat(b.at_one());
  (void)nvars;
  return val;
}

// Tropicalization of the canonical-form display in the variables
// (B_1..B_m, X_1..X_m): the monomial becomes the base form (half-integral X
// entries allowed), each inverted factor a max-set on the negative side and
// each numerator factor one on the positive side. Mirrors the exponent
// decode of dcf_at_one.
PLExpr dcf_tropical(const DoubleCanonicalForm& f) {
  int m = f.torus->m / 2;
  int nd = f.nmut;
  auto zero_form = [&] { return AffForm{std::vector<Rational>(2 * m, Rational(0)), Rational(0)}; };
  PLExpr e;
  e.nvars = 2 * m;
  e.base = zero_form();
  for (int j = 0; j < m; ++j) e.base.grad[j] = Rational(f.b_exp[j]);
  for (int i = 0; i < m; ++i) e.base.grad[m + i] = Rational(f.x_exp2[i]) / 2;
  auto cone = [&](const IntVec& w) {
    IntVec h2 = h_exponent_solve(w, f.eps, nd);
    std::vector<Rational> a(nd);
    for (int i = 0; i < nd; ++i) a[i] = Rational(h2[i]) / 2;
    return a;
  };
  for (const QTElem& d : f.den_factors) {
    MaxSet s;
    for (const auto& [v, c] : d.terms()) {
      (void)c;
      AffForm fm = zero_form();
      auto a = cone(IntVec(v.begin(), v.begin() + m));
      for (int i = 0; i < nd; ++i) fm.grad[m + i] = a[i];
      s.push_back(fm);
    }
    e.neg.push_back(s);
  }
  for (const QTElem& g : f.num_factors) {
    MaxSet s;
    for (const auto& [v, c] : g.terms()) {
      (void)c;
      AffForm fm = zero_form();
      IntVec w(v.begin() + m, v.end());
      auto a = cone(w);
      for (int j = 0; j < m; ++j) fm.grad[j] = Rational(w[j]);
      for (int i = 0; i < nd; ++i) fm.grad[m + i] += a[i];
      s.push_back(fm);
    }
    e.pos.push_back(s);
  }
  pl_simplify(e);
  return e;
}

long long maxset_cost(const PLExpr& e) {
  long long prod = 1;
  for (const MaxSet& s : e.pos) {
    prod *= static_cast<long long>(s.size());
    if (prod > 1000000) return prod;
  }
  for (const MaxSet& s : e.neg) {
    prod *= static_cast<long long>(s.size());
    if (prod > 1000000) return prod;
  }
  return prod;
}

} // namespace

IntMat random_seed_matrix(std::mt19937_64& rng, int m, int bound) {
  IntMat e = int_mat(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      long long v = rint(rng, -bound, bound);
      e[i][j] = v;
      e[j][i] = -v;
    }
  return e;
}

Triangulation random_triangulation(std::mt19937_64& rng, int n) {
  Triangulation t = fan_triangulation(n, static_cast<int>(rint(rng, 0, n - 1)));
  if (t.ndiag() == 0) return t;
  for (int i = 0; i < 3 * n; ++i)
    t = flip(t, static_cast<int>(rint(rng, 0, t.ndiag() - 1)));
  return t;
}

DiskLamination random_lamination(std::mt19937_64& rng, int n, int max_curves) {
  int count = static_cast<int>(rint(rng, 1, max_curves));
  std::vector<SegmentCurve> cs;
  for (int i = 0; i < count; ++i) {
    SegmentCurve c;
    c.s1 = static_cast<int>(rint(rng, 0, n - 1));
    c.s2 = c.s1;
    while (c.s2 == c.s1) c.s2 = static_cast<int>(rint(rng, 0, n - 1));
    c.w = Rational(rint(rng, 1, 3));
    if (rint(rng, 0, 3) == 0) c.w /= 2;
    if (curve_is_special(n, c) && rint(rng, 0, 3) == 0) c.w = -c.w;
    cs.push_back(c);
  }
  return DiskLamination::make(n, cs);
}

CheckResult check_involutivity(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "involutivity";
  std::mt19937_64 rng(derive_seed(seed, name));
  int trials = level == VerifyLevel::Desk ? 500 : 50;
  std::ostringstream bad;
  try {
    for (int trial = 0; trial < trials; ++trial) {
      // Matrix mutation with frozen bookkeeping.
      int m = static_cast<int>(rint(rng, 2, 8));
      IntMat eps = random_seed_matrix(rng, m, 2);
      std::vector<int> frozen_idx;
      for (int i = 1; i < m; ++i)
        if (rint(rng, 0, 2) == 0) frozen_idx.push_back(i);
      Seed s = Seed::make(m, frozen_idx, eps);
      std::vector<int> mut;
      for (int i = 0; i < m; ++i)
        if (!s.is_frozen(i)) mut.push_back(i);
      int k = mut[rint(rng, 0, static_cast<long long>(mut.size()) - 1)];
      Seed s2 = mutate_matrix(mutate_matrix(s, k), k);
      if (s2.eps != s.eps || s2.frozen != s.frozen) {
        bad << "matrix trial " << trial;
        break;
      }

      // The same seed realized in a lattice with its skew form.
      LatticeSeed ls = LatticeSeed::standard(s);
      LatticeSeed ls1 = mutate_lattice(ls, k);
      LatticeSeed ls2 = mutate_lattice(ls1, k);
      if (ls2.basis != ls.basis || ls2.dual != ls.dual || ls2.base.eps != ls.base.eps ||
          ls1.base.eps != ls1.gram()) {
        bad << "lattice trial " << trial;
        break;
      }

      // Labeled seeds over the trivial and tropical semifields.
      int mm = static_cast<int>(rint(rng, 2, 5));
      IntMat bs = random_seed_matrix(rng, mm, 2);
      bool seeds_ok = true;
      for (int which = 0; which < 2 && seeds_ok; ++which) {
        LabeledSeed L = which == 0 ? trivial_seed(bs) : principal_seed(bs);
        int kk = static_cast<int>(rint(rng, 0, mm - 1));
        LabeledSeed L2 = mutate_labeled(mutate_labeled(L, kk), kk);
        seeds_ok = L2.b == L.b;
        for (int i = 0; i < mm && seeds_ok; ++i) seeds_ok = L2.x[i].equals(L.x[i]);
        for (int j = 0; j < mm && seeds_ok; ++j)
          seeds_ok = L2.y[j].kind == L.y[j].kind && L2.y[j].trop == L.y[j].trop;
      }
      if (!seeds_ok) {
        bad << "labeled-seed trial " << trial;
        break;
      }

      // Coordinate charts: X and the double (B, X).
      int mc = static_cast<int>(rint(rng, 2, 5));
      IntMat e1 = random_seed_matrix(rng, mc, 2);
      int kc = static_cast<int>(rint(rng, 0, mc - 1));
      IntMat e2 = flip_sign_rowcol(e1, kc);
      std::vector<SFRat> gen;
      for (int i = 0; i < mc; ++i) gen.push_back(SFRat::variable(mc, i));
      auto xx = mutate_x_chart(mutate_x_chart(gen, kc, e1), kc, e2);
      bool chart_ok = true;
      for (int i = 0; i < mc && chart_ok; ++i) chart_ok = xx[i].equals(gen[i]);
      if (!chart_ok) {
        bad << "x-chart trial " << trial;
        break;
      }
      std::vector<SFRat> xc, bc;
      for (int i = 0; i < mc; ++i) {
        xc.push_back(SFRat::variable(2 * mc, i));
        bc.push_back(SFRat::variable(2 * mc, mc + i));
      }
      std::vector<SFRat> xc0 = xc, bc0 = bc;
      mutate_d_chart(bc, xc, kc, e1);
      mutate_d_chart(bc, xc, kc, e2);
      for (int i = 0; i < mc && chart_ok; ++i)
        chart_ok = xc[i].equals(xc0[i]) && bc[i].equals(bc0[i]);
      if (!chart_ok) {
        bad << "d-chart trial " << trial;
        break;
      }

      // Tropical points of all three types.
      std::vector<Rational> va, vx, vd;
      for (int i = 0; i < mc; ++i) va.push_back(Rational(rint(rng, -12, 12)) / 2);
      for (int i = 0; i < mc; ++i) vx.push_back(Rational(rint(rng, -12, 12)) / 2);
      for (int i = 0; i < 2 * mc; ++i) vd.push_back(Rational(rint(rng, -12, 12)) / 2);
      bool trop_ok = trop_mutate_a(trop_mutate_a(va, kc, e1), kc, e2) == va &&
                     trop_mutate_x(trop_mutate_x(vx, kc, e1), kc, e2) == vx &&
                     trop_mutate_d(trop_mutate_d(vd, kc, e1), kc, e2) == vd;
      if (!trop_ok) {
        bad << "tropical trial " << trial;
        break;
      }

      // Compatible pairs away from the initial seed.
      int nq = static_cast<int>(rint(rng, 2, 4));
      CompatiblePair p = principal_pair(random_seed_matrix(rng, nq, 2));
      int steps = static_cast<int>(rint(rng, 0, 2));
      for (int i = 0; i < steps; ++i)
        p = mutate_pair(p, static_cast<int>(rint(rng, 0, nq - 1)),
                        rint(rng, 0, 1) == 0 ? 1 : -1);
      int kq = static_cast<int>(rint(rng, 0, nq - 1));
      CompatiblePair p2 = mutate_pair(mutate_pair(p, kq, 1), kq, 1);
      if (p2.lambda != p.lambda || p2.b != p.b || p2.d != p.d) {
        bad << "pair trial " << trial;
        break;
      }

      // Quantum seeds: variables and pair must both return.
      int ns = static_cast<int>(rint(rng, 2, 4));
      QuantumSeedState st = initial_quantum_state(principal_pair(random_seed_matrix(rng, ns, 1)));
      if (rint(rng, 0, 1) == 0)
        st = quantum_mutate_seed(st, static_cast<int>(rint(rng, 0, ns - 1)));
      int kqs = static_cast<int>(rint(rng, 0, ns - 1));
      QuantumSeedState st2 = quantum_mutate_seed(quantum_mutate_seed(st, kqs), kqs);
      bool q_ok = st2.pair.lambda == st.pair.lambda && st2.pair.b == st.pair.b;
      for (size_t i = 0; i < st.vars.size() && q_ok; ++i) q_ok = st2.vars[i] == st.vars[i];
      if (!q_ok) {
        bad << "quantum-seed trial " << trial;
        break;
      }
    }
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
  std::string why = bad.str();
  std::ostringstream d;
  d << trials << " trials over 8 mutation families";
  return finish(name, why.empty(), why.empty() ? d.str() : why, t0);
}

CheckResult check_flip_census(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "flip-census";
  (void)seed;
  const std::map<int, size_t> expected{{4, 2},  {5, 5},   {6, 14},  {7, 42},
                                       {8, 132}, {9, 429}, {10, 1430}};
  int nmax = level == VerifyLevel::Desk ? 10 : 7;
  std::ostringstream bad, good;
  try {
    for (int n = 4; n <= nmax; ++n) {
      std::set<std::vector<Chord>> seen;
      std::vector<Triangulation> queue{fan_triangulation(n)};
      seen.insert(queue[0].sorted_diagonals());
      while (!queue.empty()) {
        Triangulation t = queue.back();
        queue.pop_back();
        for (int k = 0; k < t.ndiag(); ++k) {
          Triangulation t2 = flip(t, k);
          if (seen.insert(t2.sorted_diagonals()).second) queue.push_back(t2);
        }
      }
      if (seen.size() != expected.at(n)) {
        bad << "n=" << n << " reached " << seen.size() << " triangulations, expected "
            << expected.at(n);
        break;
      }
      if (n <= 8 && all_triangulations(n).size() != expected.at(n)) {
        bad << "all_triangulations(" << n << ") disagrees with the flip census";
        break;
      }
      good << (n > 4 ? " " : "") << seen.size();
    }
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
  std::string why = bad.str();
  return finish(name, why.empty(), why.empty() ? "counts " + good.str() : why, t0);
}

CheckResult check_laurent_positivity(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "laurent-positivity";
  std::mt19937_64 rng(derive_seed(seed, name));
  int trials = level == VerifyLevel::Desk ? 150 : 25;
  std::ostringstream bad;
  try {
    for (int trial = 0; trial < trials; ++trial) {
      int n = static_cast<int>(rint(rng, 4, 9));
      Triangulation t = random_triangulation(rng, n);
      int nd = t.ndiag();
      IntMat b0 = mutable_block(b_matrix(t), nd);
      LabeledSeed L = trivial_seed(b0);
      for (int k : random_word(rng, nd, static_cast<int>(rint(rng, 1, 12))))
        L = mutate_labeled(L, k);
      for (int i = 0; i < nd; ++i) {
        auto lp = L.x[i].to_laurent();
        if (!lp || lp->has_negative_coeff() || !lp->coeffs_integral()) {
          bad << "trial " << trial << " n=" << n << " variable " << i + 1
              << (lp ? " has bad coefficients" : " is not Laurent");
          break;
        }
      }
      if (!bad.str().empty()) break;
    }
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
  std::string why = bad.str();
  std::ostringstream d;
  d << trials << " random charts, words up to length 12";
  return finish(name, why.empty(), why.empty() ? d.str() : why, t0);
}

CheckResult check_separation(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "separation";
  std::mt19937_64 rng(derive_seed(seed, name));
  int nmax = level == VerifyLevel::Desk ? 9 : 6;
  std::ostringstream bad;
  int cases = 0;
  try {
    for (int n = 4; n <= nmax && bad.str().empty(); ++n) {
      Triangulation t0r = random_triangulation(rng, n);
      int nd = t0r.ndiag();
      int m = t0r.m();
      IntMat bfull = b_matrix(t0r);
      IntMat bmut = mutable_block(bfull, nd);
      for (const Chord& c : all_diagonals(n)) {
        auto [word, arrived] = flip_path(t0r, complete_to_triangulation(n, {c}));
        int l = arrived.slot_of(c);
        require(l >= 0 && l < nd, "internal", "arc lost along the flip path");
        FPolyResult r = f_polynomial(bmut, word, l);

        // Tropical coefficients: the principal pattern itself.
        LabeledSeed ls = principal_seed(bmut);
        for (int k : word) ls = mutate_labeled(ls, k);
        std::vector<SFRat> xp;
        for (int i = 0; i < nd; ++i) xp.push_back(SFRat::variable(2 * nd, i));
        std::vector<Coeff> yp;
        for (int j = 0; j < nd; ++j) {
          Coeff cj = coeff_one(SemifieldKind::Trop, nd, 2 * nd);
          cj.trop[j] = 1;
          yp.push_back(cj);
        }
        if (!ls.x[l].equals(separation_reconstruct(r.f, r.g, SemifieldKind::Trop, bmut, xp, yp))) {
          bad << "principal route fails at n=" << n << " arc {" << c.u + 1 << "," << c.v + 1
              << "}";
          break;
        }

        // Geometric coefficients: boundary variables enter as universal
        // semifield elements, the direct side is the chart mutation chain.
        std::vector<SFRat> xs;
        for (int i = 0; i < m; ++i) xs.push_back(SFRat::variable(m, i));
        std::vector<SFRat> xg(xs.begin(), xs.begin() + nd);
        std::vector<Coeff> yg;
        for (int j = 0; j < nd; ++j) {
          Coeff cj = coeff_one(SemifieldKind::Universal, nd, m);
          Exp e(m, 0);
          for (int i = nd; i < m; ++i) e[i] = static_cast<int>(bfull[i][j]);
          cj.value = SFRat(LaurentPoly::monomial(e, 1));
          yg.push_back(cj);
        }
        Seed sd = exchange_from_triangulation(t0r);
        std::vector<SFRat> chain = xs;
        for (int k : word) {
          chain = mutate_a_chart(chain, k, sd.eps);
          sd = mutate_matrix(sd, k);
        }
        if (!chain[l].equals(
                separation_reconstruct(r.f, r.g, SemifieldKind::Universal, bmut, xg, yg))) {
          bad << "geometric route fails at n=" << n << " arc {" << c.u + 1 << "," << c.v + 1
              << "}";
          break;
        }

        // Trivial coefficients for completeness.
        std::vector<Coeff> yt(nd, coeff_one(SemifieldKind::Trivial, nd, nd));
        std::vector<SFRat> xt;
        for (int i = 0; i < nd; ++i) xt.push_back(SFRat::variable(nd, i));
        LabeledSeed lt = trivial_seed(bmut);
        for (int k : word) lt = mutate_labeled(lt, k);
        if (!lt.x[l].equals(
                separation_reconstruct(r.f, r.g, SemifieldKind::Trivial, bmut, xt, yt))) {
          bad << "trivial route fails at n=" << n << " arc {" << c.u + 1 << "," << c.v + 1 << "}";
          break;
        }
        ++cases;
      }
    }
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
  std::string why = bad.str();
  std::ostringstream d;
  d << cases << " arcs, three coefficient semifields each";
  return finish(name, why.empty(), why.empty() ? d.str() : why, t0);
}

CheckResult check_snake_oracle(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "snake-oracle";
  (void)seed;
  int nmax = level == VerifyLevel::Desk ? 8 : 6;
  std::ostringstream bad;
  int cases = 0;
  try {
    for (int n = 4; n <= nmax && bad.str().empty(); ++n) {
      auto diags = all_diagonals(n);
      for (const Triangulation& t : all_triangulations(n)) {
        int nd = t.ndiag();
        IntMat bmut = mutable_block(b_matrix(t), nd);
        for (const Chord& c : diags) {
          std::vector<int> word;
          int l;
          if (t.slot_of(c) >= 0) {
            l = t.slot_of(c);
          } else {
            auto path = flip_path(t, complete_to_triangulation(n, {c}));
            word = path.first;
            l = path.second.slot_of(c);
          }
          FPolyResult r = f_polynomial(bmut, word, l);
          auto g = snake_graph(t, c);
          auto matchings = perfect_matchings(g);
          if (matchings.size() != r.f.term_count()) {
            bad << "matching count " << matchings.size() << " vs " << r.f.term_count()
                << " F-terms, n=" << n << " arc {" << c.u + 1 << "," << c.v + 1 << "}";
            break;
          }
          bool unit = true;
          for (const auto& [e, coeff] : r.f.terms()) {
            (void)e;
            if (!(coeff == Rational(1))) unit = false;
          }
          if (!unit) {
            bad << "non-unit F coefficient at n=" << n << " arc {" << c.u + 1 << "," << c.v + 1
                << "}";
            break;
          }
          IntVec mg = msw_g_vector(t, c);
          if (IntVec(mg.begin(), mg.begin() + nd) != r.g) {
            bad << "matching g-vector disagrees at n=" << n << " arc {" << c.u + 1 << ","
                << c.v + 1 << "}";
            break;
          }
          ++cases;
        }
        if (!bad.str().empty()) break;
      }
    }
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
  std::string why = bad.str();
  std::ostringstream d;
  d << cases << " chart/arc pairs";
  return finish(name, why.empty(), why.empty() ? d.str() : why, t0);
}

CheckResult check_tropical_geometric(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "tropical-geometric";
  std::mt19937_64 rng(derive_seed(seed, name));
  int trials = level == VerifyLevel::Desk ? 1000 : 100;
  std::ostringstream bad;
  try {
    for (int trial = 0; trial < trials; ++trial) {
      int n = static_cast<int>(rint(rng, 4, 10));
      Triangulation t = random_triangulation(rng, n);
      int nd = t.ndiag();
      int m = t.m();
      IntMat eps = exchange_from_triangulation(t).eps;
      int k = static_cast<int>(rint(rng, 0, nd - 1));
      Triangulation t2 = flip(t, k);

      DiskLamination lc = random_lamination(rng, n, 4);
      DiskLamination lm = random_lamination(rng, n, 4);

      // A-points carry a coordinate on every edge.
      auto ta = trop_mutate_a(a_coords(lc, t), k, eps);
      if (ta != a_coords(lc, t2)) {
        bad << "a-coordinates disagree, trial " << trial << " n=" << n;
        break;
      }

      // X-points live on the diagonals only; the local rule is closed there.
      IntMat epsm = mutable_block(eps, nd);
      auto xall = x_coords(lc, t);
      std::vector<Rational> xv(xall.begin(), xall.begin() + nd);
      auto tx = trop_mutate_x(xv, k, epsm);
      auto x2 = x_coords(lc, t2);
      bool x_ok = true;
      for (int j = 0; j < nd; ++j) x_ok = x_ok && tx[j] == x2[j];
      if (!x_ok) {
        bad << "x-coordinates disagree, trial " << trial << " n=" << n;
        break;
      }

      // Doubled points (b, x): b on every edge from the weight difference of
      // the pair, x from the primary lamination; side x entries are not
      // geometric and stay out of the comparison.
      std::vector<Rational> bx;
      auto ac = a_coords(lc, t);
      auto am = a_coords(lm, t);
      for (int i = 0; i < m; ++i) bx.push_back(am[i] - ac[i]);
      for (int i = 0; i < m; ++i) bx.push_back(xall[i]);
      auto td = trop_mutate_d(bx, k, eps);
      auto ac2 = a_coords(lc, t2);
      auto am2 = a_coords(lm, t2);
      auto x22 = x_coords(lc, t2);
      bool d_ok = true;
      for (int i = 0; i < m; ++i) d_ok = d_ok && td[i] == am2[i] - ac2[i];
      for (int j = 0; j < nd; ++j) d_ok = d_ok && td[m + j] == x22[j];
      if (!d_ok) {
        bad << "doubled coordinates disagree, trial " << trial << " n=" << n;
        break;
      }
    }
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
  std::string why = bad.str();
  std::ostringstream d;
  d << trials << " random flips, three coordinate types";
  return finish(name, why.empty(), why.empty() ? d.str() : why, t0);
}

namespace {

bool classical_limit_matches(const QFraction& f, const IntMat& eps, int k, int idx,
                             AdSignature sig) {
  int m = static_cast<int>(eps.size());
  SFRat val = fraction_at_one(f);
  if (sig == AdSignature::XOnly) {
    std::vector<SFRat> xs;
    for (int i = 0; i < m; ++i) xs.push_back(SFRat::variable(m, i));
    return val.equals(mutate_x_chart(xs, k, eps)[idx]);
  }
  std::vector<SFRat> xc, bc;
  for (int i = 0; i < m; ++i) {
    xc.push_back(SFRat::variable(2 * m, i));
    bc.push_back(SFRat::variable(2 * m, m + i));
  }
  mutate_d_chart(bc, xc, k, eps);
  return val.equals(idx < m ? xc[idx] : bc[idx - m]);
}

} // namespace

CheckResult check_dilog(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "dilog";
  std::mt19937_64 rng(derive_seed(seed, name));
  std::ostringstream bad;
  int cases = 0;
  try {
    // The defining functional equation, one order beyond the closed-form
    // comparisons below.
    {
      int order = level == VerifyLevel::Desk ? 12 : 8;
      QTorusPtr t1 = x_torus(int_mat(1, 1));
      QSeries psi = psi_truncated(t1, 0, order);
      QTElem shifted = QTElem::constant(t1, OmegaScalar(1)) +
                       QTElem::monomial(t1, IntVec{1}, OmegaScalar::q_power(1));
      if (!qs_equal(qs_scale_variable(psi, 2), qs_mul(qs_from_elem(shifted, 0, order), psi)))
        bad << "functional equation fails at order " << order;
      ++cases;
    }
    // Conjugation against the closed forms on rank 2, every generator, both
    // signatures, exchange entries up to 3.
    int order = level == VerifyLevel::Desk ? 10 : 6;
    int cmax = level == VerifyLevel::Desk ? 3 : 2;
    for (int c = 1; c <= cmax && bad.str().empty(); ++c) {
      IntMat eps = int_mat(2, 2);
      eps[0][1] = c;
      eps[1][0] = -c;
      for (int k = 0; k < 2 && bad.str().empty(); ++k) {
        for (AdSignature sig : {AdSignature::XOnly, AdSignature::DDouble}) {
          int gens = sig == AdSignature::XOnly ? 2 : 4;
          for (int idx = 0; idx < gens; ++idx) {
            QFraction exact = mu_q_exact(eps, k, idx, sig);
            QFraction closed = mu_q_closed(eps, k, idx, sig);
            if (!qfraction_equal(exact, closed)) {
              bad << "exact/closed forms differ, c=" << c << " k=" << k + 1
                  << " generator " << idx + 1;
              break;
            }
            QSeries ad = ad_psi(mu_prime_monomial(eps, k, idx, sig), k, order, sig);
            if (!qs_equal(ad, qs_from_fraction(closed, k, order))) {
              bad << "series conjugation differs, c=" << c << " k=" << k + 1
                  << " generator " << idx + 1;
              break;
            }
            if (!classical_limit_matches(closed, eps, k, idx, sig)) {
              bad << "classical limit differs, c=" << c << " k=" << k + 1
                  << " generator " << idx + 1;
              break;
            }
            ++cases;
          }
          if (!bad.str().empty()) break;
        }
      }
    }
    // Two rank-3 spot checks at a lower order.
    for (int trial = 0; trial < 2 && bad.str().empty(); ++trial) {
      IntMat eps = random_seed_matrix(rng, 3, 2);
      int k = static_cast<int>(rint(rng, 0, 2));
      for (AdSignature sig : {AdSignature::XOnly, AdSignature::DDouble}) {
        int idx = static_cast<int>(rint(rng, 0, sig == AdSignature::XOnly ? 2 : 5));
        QFraction closed = mu_q_closed(eps, k, idx, sig);
        if (!qfraction_equal(mu_q_exact(eps, k, idx, sig), closed) ||
            !qs_equal(ad_psi(mu_prime_monomial(eps, k, idx, sig), k, 6, sig),
                      qs_from_fraction(closed, k, 6)) ||
            !classical_limit_matches(closed, eps, k, idx, sig)) {
          bad << "rank-3 spot check fails, trial " << trial;
          break;
        }
        ++cases;
      }
    }
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
  std::string why = bad.str();
  std::ostringstream d;
  d << cases << " identities (functional equation, closed forms, classical limits)";
  return finish(name, why.empty(), why.empty() ? d.str() : why, t0);
}

CheckResult check_compatibility(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "compatibility";
  std::mt19937_64 rng(derive_seed(seed, name));
  int nmax = level == VerifyLevel::Desk ? 9 : 7;
  int random_pairs = level == VerifyLevel::Desk ? 100 : 20;
  std::ostringstream bad;
  int cases = 0;
  try {
    for (int n = 4; n <= nmax && bad.str().empty(); ++n) {
      for (const Triangulation& t : all_triangulations(n)) {
        CompatiblePair p = pair_from_triangulation(t);
        int nd = p.n(), m = p.m();
        IntMat prod = mat_mul(transpose(p.b), p.lambda);
        bool ok = pair_is_compatible(p.lambda, p.b, p.d);
        for (int i = 0; i < nd && ok; ++i)
          for (int j = 0; j < m && ok; ++j) ok = prod[i][j] == (i == j ? 4 : 0);
        for (int i = 0; i < nd && ok; ++i) ok = p.d[i] == 4;
        if (!ok) {
          bad << "triangulation pair fails at n=" << n;
          break;
        }
        ++cases;
      }
    }
    for (int trial = 0; trial < random_pairs && bad.str().empty(); ++trial) {
      int nq = static_cast<int>(rint(rng, 2, 4));
      CompatiblePair p = principal_pair(random_seed_matrix(rng, nq, 2));
      int steps = static_cast<int>(rint(rng, 0, 3));
      for (int i = 0; i < steps; ++i)
        p = mutate_pair(p, static_cast<int>(rint(rng, 0, nq - 1)),
                        rint(rng, 0, 1) == 0 ? 1 : -1);
      int k = static_cast<int>(rint(rng, 0, nq - 1));
      CompatiblePair pa = mutate_pair(p, k, 1);
      CompatiblePair pb = mutate_pair(p, k, -1);
      if (pa.lambda != pb.lambda || pa.b != pb.b || pa.d != pb.d) {
        bad << "pair mutation depends on the tropical sign, trial " << trial;
        break;
      }
      if (!pair_is_compatible(pa.lambda, pa.b, pa.d)) {
        bad << "mutated pair loses compatibility, trial " << trial;
        break;
      }
    }
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
  std::string why = bad.str();
  std::ostringstream d;
  d << cases << " triangulation pairs, " << random_pairs << " sign-independence trials";
  return finish(name, why.empty(), why.empty() ? d.str() : why, t0);
}

CheckResult check_quantum_fpoly(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "quantum-fpoly";
  std::mt19937_64 rng(derive_seed(seed, name));
  int nmax = level == VerifyLevel::Desk ? 8 : 6;
  std::ostringstream bad;
  int cases = 0;
  try {
    for (int n = 4; n <= nmax && bad.str().empty(); ++n) {
      std::vector<Triangulation> charts{fan_triangulation(n)};
      charts.push_back(random_triangulation(rng, n));
      if (level == VerifyLevel::Desk) charts.push_back(random_triangulation(rng, n));
      for (const Triangulation& t : charts) {
        int nd = t.ndiag();
        IntMat bmut = mutable_block(b_matrix(t), nd);
        for (const Chord& c : all_diagonals(n)) {
          std::vector<int> word;
          int l;
          if (t.slot_of(c) >= 0) {
            l = t.slot_of(c);
          } else {
            auto path = flip_path(t, complete_to_triangulation(n, {c}));
            word = path.first;
            l = path.second.slot_of(c);
          }
          QFPolyResult qr = quantum_f_polynomial(bmut, word, l);
          FPolyResult r = f_polynomial(bmut, word, l);
          if (qr.omega_shift != 0) {
            bad << "nonzero omega shift at n=" << n << " arc {" << c.u + 1 << "," << c.v + 1
                << "}";
            break;
          }
          if (!qr.f.coeffs_nonneg() || !qr.f.coeffs_q_integral()) {
            bad << "coefficients leave Z>=0[q,1/q] at n=" << n << " arc {" << c.u + 1 << ","
                << c.v + 1 << "}";
            break;
          }
          if (!(qr.f.at_one() == r.f) || qr.g != r.g) {
            bad << "q=1 specialization disagrees at n=" << n << " arc {" << c.u + 1 << ","
                << c.v + 1 << "}";
            break;
          }
          ++cases;
        }
        if (!bad.str().empty()) break;
      }
    }
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
  std::string why = bad.str();
  std::ostringstream d;
  d << cases << " quantum F-polynomials against the classical split";
  return finish(name, why.empty(), why.empty() ? d.str() : why, t0);
}

namespace {

// Integer-weight arc system on the chart of `carrier` with prescribed
// diagonal weights and the boundary weights completing it to zero endpoint
// totals; empty when no completion exists.
std::optional<MarkedArcSet> completed_arcs(const Triangulation& carrier,
                                           const std::map<int, long long>& diag_weights) {
  int n = carrier.n;
  std::map<std::pair<int, int>, long long> w;
  IntVec d(n, 0);
  for (const auto& [slot, k] : diag_weights) {
    const Chord& c = carrier.edges[slot];
    w[{c.u, c.v}] += k;
    d[c.u] += k;
    d[c.v] += k;
  }
  auto sides = a0_side_completion(n, d);
  if (!sides) return std::nullopt;
  MarkedArcSet out{carrier, std::vector<Rational>(carrier.m(), Rational(0))};
  for (const auto& [slot, k] : diag_weights) out.w[slot] += Rational(k);
  for (int v = 0; v < n; ++v) {
    int slot = carrier.slot_of(make_chord(n, v, (v + 1) % n));
    require(slot >= 0, "internal", "boundary side missing from its own chart");
    out.w[slot] += Rational((*sides)[v]);
  }
  return out;
}

bool ia_case_ok(const MarkedArcSet& l, const Triangulation& t, std::string& why) {
  int nd = t.ndiag();
  IntMat eps = exchange_from_triangulation(t).eps;
  auto av = a_coords(lamination_from_arcs(l), t);
  IntVec aint(t.m(), 0);
  for (int i = 0; i < t.m(); ++i) {
    if (den(av[i]) != 1) {
      why = "a-coordinate not integral on a balanced arc system";
      return false;
    }
    aint[i] = static_cast<long long>(num(av[i]));
  }
  QTElem q = ia_q(l, t);
  if (!q.coeffs_nonneg() || !q.coeffs_q_integral()) {
    why = "coefficients leave Z>=0[q,1/q]";
    return false;
  }
  if (!(q.star() == q)) {
    why = "expansion is not *-invariant";
    return false;
  }
  auto cl = ia_classical(l, t).to_laurent();
  if (!cl || !(q.at_one() == *cl)) {
    why = "classical limit disagrees with the commutative route";
    return false;
  }
  IntVec top(aint.begin(), aint.begin() + nd);
  long long s = 0;
  for (int i = 0; i < nd; ++i)
    for (int j = i + 1; j < nd; ++j) s += eps[i][j] * top[i] * top[j];
  bool saw_top = false;
  for (const auto& [v, coeff] : q.terms()) {
    if (v == top) {
      saw_top = true;
      if (!(coeff == OmegaScalar::q_power(-s))) {
        why = "leading coefficient differs from the predicted q-power";
        return false;
      }
      continue;
    }
    for (int i = 0; i < nd; ++i)
      if (v[i] > top[i]) {
        why = "a term exceeds the crossing exponent";
        return false;
      }
  }
  if (!saw_top) {
    why = "crossing exponent is missing from the expansion";
    return false;
  }
  return true;
}

} // namespace

CheckResult check_ia_map(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "ia-map";
  std::mt19937_64 rng(derive_seed(seed, name));
  int nmax = level == VerifyLevel::Desk ? 8 : 6;
  int multi = level == VerifyLevel::Desk ? 200 : 40;
  std::ostringstream bad;
  int singles = 0, performed = 0;
  try {
    // Every single arc that balances: the even/odd endpoint pattern admits a
    // boundary completion exactly when the endpoints have opposite parity on
    // even polygons, always on odd ones.
    const std::map<int, int> completable{{4, 0}, {5, 5}, {6, 3}, {7, 14}, {8, 8}};
    for (int n = 4; n <= nmax && bad.str().empty(); ++n) {
      int found = 0;
      for (const Chord& c : all_diagonals(n)) {
        Triangulation carrier = complete_to_triangulation(n, {c});
        auto l = completed_arcs(carrier, {{carrier.slot_of(c), 1}});
        if (!l) continue;
        ++found;
        for (int rep = 0; rep < 2; ++rep) {
          Triangulation t = random_triangulation(rng, n);
          std::string why;
          if (!ia_case_ok(*l, t, why)) {
            bad << why << " (single arc {" << c.u + 1 << "," << c.v + 1 << "}, n=" << n << ")";
            break;
          }
          ++singles;
        }
        if (!bad.str().empty()) break;
      }
      if (found != completable.at(n)) {
        bad << "completable single-arc count " << found << " at n=" << n << ", expected "
            << completable.at(n);
      }
      // Unbalanced single arcs must be rejected, not expanded.
      if (bad.str().empty()) {
        Chord c = all_diagonals(n)[0];
        Triangulation carrier = complete_to_triangulation(n, {c});
        MarkedArcSet raw{carrier, std::vector<Rational>(carrier.m(), Rational(0))};
        raw.w[carrier.slot_of(c)] = Rational(1);
        Triangulation t = random_triangulation(rng, n);
        for (int which = 0; which < 2; ++which) {
          bool rejected = false;
          try {
            if (which == 0)
              ia_q(raw, t);
            else
              ia_classical(raw, t);
          } catch (const Error& e) {
            rejected = e.code() == "a0_parity";
          }
          if (!rejected) {
            bad << "odd endpoint parity not rejected at n=" << n;
            break;
          }
        }
      }
    }
    // Random multi-arc systems with balancing boundary weights.
    int attempts = 0;
    while (performed < multi && attempts < multi * 12 && bad.str().empty()) {
      ++attempts;
      int n = static_cast<int>(rint(rng, 4, nmax));
      Triangulation carrier = random_triangulation(rng, n);
      std::map<int, long long> dw;
      int picks = static_cast<int>(rint(rng, 1, 3));
      for (int i = 0; i < picks; ++i)
        dw[static_cast<int>(rint(rng, 0, carrier.ndiag() - 1))] += rint(rng, 1, 2);
      auto l = completed_arcs(carrier, dw);
      if (!l) continue;
      Triangulation t = random_triangulation(rng, n);
      std::string why;
      if (!ia_case_ok(*l, t, why)) {
        bad << why << " (multi-arc case " << performed << ", n=" << n << ")";
        break;
      }
      ++performed;
    }
    if (bad.str().empty() && performed < (3 * multi) / 4)
      bad << "only " << performed << " balanced multi-arc systems of " << multi << " requested";
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
  std::string why = bad.str();
  std::ostringstream d;
  d << singles << " single-arc and " << performed << " multi-arc expansions";
  return finish(name, why.empty(), why.empty() ? d.str() : why, t0);
}

namespace {

struct DoubledCase {
  MarkedArcSet c, cm;
  IntVec loops; // signed loop weight injected at each marked point
};

// Mirror pairs of arc systems whose endpoint totals differ only by loops
// around marked points: alternating even cycles contribute equal totals on
// both sides, matched boundary pairs cancel, explicit one-sided loops make
// the difference and are recorded.
std::optional<DoubledCase> random_doubled_case(std::mt19937_64& rng, int n) {
  std::map<std::pair<int, int>, long long> wc, wm;
  int cycles = static_cast<int>(rint(rng, 1, 2));
  for (int cy = 0; cy < cycles; ++cy) {
    int len = 2 * static_cast<int>(rint(rng, 1, 2));
    std::vector<int> segs(len);
    segs[0] = static_cast<int>(rint(rng, 0, n - 1));
    for (int i = 1; i < len; ++i) {
      segs[i] = segs[i - 1];
      while (segs[i] == segs[i - 1] || (i == len - 1 && segs[i] == segs[0]))
        segs[i] = static_cast<int>(rint(rng, 0, n - 1));
    }
    for (int i = 0; i < len; ++i) {
      int a = (segs[i] + 1) % n;
      int b = (segs[(i + 1) % len] + 1) % n;
      Chord ch = make_chord(n, a, b);
      (i % 2 == 0 ? wc : wm)[{ch.u, ch.v}] += 1;
    }
  }
  if (rint(rng, 0, 1) == 0) {
    int v = static_cast<int>(rint(rng, 0, n - 1));
    long long s = rint(rng, 0, 1) == 0 ? 1 : -1;
    Chord side = make_chord(n, v, (v + 1) % n);
    wc[{side.u, side.v}] += s;
    wm[{side.u, side.v}] += s;
  }
  IntVec loops(n, 0);
  int inj = static_cast<int>(rint(rng, 0, 2));
  for (int i = 0; i < inj; ++i) {
    int v = static_cast<int>(rint(rng, 0, n - 1));
    long long k = rint(rng, 1, 2);
    long long sign = rint(rng, 0, 1) == 0 ? 1 : -1;
    Chord side = make_chord(n, v, (v + 1) % n);
    (sign > 0 ? wc : wm)[{side.u, side.v}] += k;
    loops[v] += sign * k;
  }
  try {
    return DoubledCase{arcs_from_chords(n, wc), arcs_from_chords(n, wm), loops};
  } catch (const Error&) {
    return std::nullopt; // crossing diagonals, caller resamples
  }
}

} // namespace

CheckResult check_id_map(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "id-map";
  std::mt19937_64 rng(derive_seed(seed, name));
  int trials = level == VerifyLevel::Desk ? 100 : 20;
  int nmax = level == VerifyLevel::Desk ? 7 : 6;
  std::ostringstream bad;
  int performed = 0, trop_done = 0;
  try {
    int attempts = 0;
    while (performed < trials && attempts < trials * 12 && bad.str().empty()) {
      ++attempts;
      int n = static_cast<int>(rint(rng, 4, nmax));
      auto dcase = random_doubled_case(rng, n);
      if (!dcase) continue;
      Triangulation t = random_triangulation(rng, n);
      int nd = t.ndiag();
      DoubleCanonicalForm dq, dc;
      try {
        dq = id_q(dcase->c, dcase->cm, t);
        dc = id_classical(dcase->c, dcase->cm, t);
      } catch (const Error& e) {
        if (e.code() == "outside_domain" && n % 2 == 0) continue;
        throw;
      }

      // Normal-form shape: the commutative route lands on the same
      // factor-by-factor data with all omega bookkeeping at zero.
      bool shape = dc.omega_exp == 0 && dq.mono == dc.mono && dq.b_exp == dc.b_exp &&
                   dq.x_exp2 == dc.x_exp2 &&
                   dq.den_factors.size() == dc.den_factors.size() &&
                   dq.num_factors.size() == dc.num_factors.size();
      for (size_t i = 0; i < dq.den_factors.size() && shape; ++i)
        shape = dq.den_factors[i].at_one() == dc.den_factors[i].at_one();
      for (size_t i = 0; i < dq.num_factors.size() && shape; ++i)
        shape = dq.num_factors[i].at_one() == dc.num_factors[i].at_one();
      if (!shape) {
        bad << "normal forms disagree between routes, case " << performed << " n=" << n;
        break;
      }

      // Exponent parity is read off the injected loops: each slot picks up
      // the loop weights at its two endpoints, and everything is even
      // exactly when all loop parities agree.
      bool all_even = true;
      bool parity_ok = true;
      for (int i = 0; i < t.m(); ++i) {
        const Chord& e = t.edges[i];
        if ((dq.x_exp2[i] - dcase->loops[e.u] - dcase->loops[e.v]) % 2 != 0) parity_ok = false;
        if (dq.x_exp2[i] % 2 != 0) all_even = false;
      }
      bool constant_parity = true;
      for (int v = 1; v < n; ++v)
        if (((dcase->loops[v] - dcase->loops[0]) % 2 + 2) % 2 != 0) constant_parity = false;
      if (!parity_ok || all_even != constant_parity) {
        bad << "exponent parity disagrees with the loop pattern, case " << performed
            << " n=" << n;
        break;
      }
      bool threw = false;
      try {
        dcf_at_one(dq);
      } catch (const Error& e) {
        threw = e.code() == "a0_parity";
        if (!threw) throw;
      }
      if (threw == all_even) {
        bad << "classical value and exponent parity disagree, case " << performed
            << " n=" << n;
        break;
      }

      // Chart independence of the tropicalized expansion across one flip.
      int k = static_cast<int>(rint(rng, 0, nd - 1));
      Triangulation t2 = flip(t, k);
      DoubleCanonicalForm dq2 = id_q(dcase->c, dcase->cm, t2);
      PLExpr nt = dcf_tropical(dq);
      PLExpr nt2 = dcf_tropical(dq2);
      if (maxset_cost(nt) <= 20000 && maxset_cost(nt2) <= 20000) {
        IntMat eps = exchange_from_triangulation(t).eps;
        if (!pl_equal(pl_compose(nt2, trop_mutation_pl(TropType::D, k, eps)), nt)) {
          bad << "tropical expansion depends on the chart, case " << performed << " n=" << n;
          break;
        }
        ++trop_done;
      }
      ++performed;
    }
    if (bad.str().empty() && performed < (3 * trials) / 4)
      bad << "only " << performed << " doubled cases of " << trials << " requested";
    if (bad.str().empty() && trop_done * 5 < performed * 3)
      bad << "tropical comparison ran on " << trop_done << " of " << performed << " cases";

    // Endpoint totals that no loop pattern reconciles must be rejected.
    if (bad.str().empty()) {
      std::map<std::pair<int, int>, long long> wc, wm;
      wc[{1, 3}] = 1;
      wm[{0, 1}] = 0;
      bool rejected = false;
      try {
        id_q(arcs_from_chords(6, wc), arcs_from_chords(6, wm), fan_triangulation(6));
      } catch (const Error& e) {
        rejected = e.code() == "outside_domain";
      }
      if (!rejected) bad << "irreconcilable endpoint totals not rejected";
    }
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
  std::string why = bad.str();
  std::ostringstream d;
  d << performed << " doubled arc systems, " << trop_done << " tropical chart comparisons";
  return finish(name, why.empty(), why.empty() ? d.str() : why, t0);
}

HyperbolicResiduals hyperbolic_residuals(int trials, uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, "hyperbolic"));
  HyperbolicResiduals out;
  out.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    int n = static_cast<int>(rint(rng, 4, 12));
    bool use_inf = runif(rng, 0.0, 1.0) < 0.3;
    int finite = use_inf ? n - 1 : n;
    std::vector<double> xs(finite);
    for (;;) {
      for (int i = 0; i < finite; ++i) xs[i] = runif(rng, -10.0, 10.0);
      std::sort(xs.begin(), xs.end());
      bool ok = true;
      for (int i = 1; i < finite; ++i) ok = ok && xs[i] - xs[i - 1] > 1e-3;
      if (ok) break;
    }
    auto horo = [&] { return std::exp(runif(rng, std::log(0.1), std::log(10.0))); };
    std::vector<DecoratedVertex> vs;
    for (int i = 0; i < finite; ++i) vs.push_back(DecoratedVertex{false, xs[i], horo()});
    if (use_inf) vs.push_back(DecoratedVertex{true, 0.0, horo()});
    DecoratedIdealPolygon p = DecoratedIdealPolygon::make(vs);

    std::vector<DecoratedVertex> vm = vs;
    for (auto& v : vm) v.h = horo();
    DecoratedIdealPolygon pm = DecoratedIdealPolygon::make(vm);

    Triangulation t = random_triangulation(rng, n);
    for (int k = 0; k < t.ndiag(); ++k) {
      out.ptolemy = std::max(out.ptolemy, ptolemy_check(p, t.quad(k)));
      out.cross_ratio = std::max(out.cross_ratio, cross_ratio_check(p, t, k));
    }
    for (int extra = 0; extra < 2; ++extra) {
      std::set<int> pick;
      while (static_cast<int>(pick.size()) < 4)
        pick.insert(static_cast<int>(rint(rng, 0, n - 1)));
      std::array<int, 4> q{};
      int i = 0;
      for (int v : pick) q[i++] = v;
      out.ptolemy = std::max(out.ptolemy, ptolemy_check(p, q));
    }
    out.flip = std::max(out.flip, double_b_check(p, pm, t));
  }
  return out;
}

CheckResult check_hyperbolic(VerifyLevel level, uint64_t seed) {
  auto t0 = SteadyClock::now();
  const std::string name = "hyperbolic";
  int trials = level == VerifyLevel::Desk ? 1000 : 100;
  try {
    HyperbolicResiduals r = hyperbolic_residuals(trials, seed);
    bool pass = std::isfinite(r.ptolemy) && std::isfinite(r.cross_ratio) &&
                std::isfinite(r.flip) && r.ptolemy < 1e-9 && r.cross_ratio < 1e-9 &&
                r.flip < 1e-9;
    std::ostringstream d;
    d.precision(3);
    d << std::scientific << "max residuals over " << trials << " trials: exchange "
      << r.ptolemy << ", cross-ratio " << r.cross_ratio << ", flip " << r.flip;
    return finish(name, pass, d.str(), t0);
  } catch (const Error& e) {
    return caught(name, e, t0);
  }
}

std::vector<CheckResult> run_all_checks(VerifyLevel level, uint64_t seed) {
  using Suite = std::function<CheckResult(VerifyLevel, uint64_t)>;
  std::vector<std::pair<std::string, Suite>> suites{
      {"compatibility", check_compatibility},
      {"dilog", check_dilog},
      {"flip-census", check_flip_census},
      {"hyperbolic", check_hyperbolic},
      {"ia-map", check_ia_map},
      {"id-map", check_id_map},
      {"involutivity", check_involutivity},
      {"laurent-positivity", check_laurent_positivity},
      {"quantum-fpoly", check_quantum_fpoly},
      {"separation", check_separation},
      {"snake-oracle", check_snake_oracle},
      {"tropical-geometric", check_tropical_geometric},
  };
  std::vector<CheckResult> out(suites.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= suites.size()) return;
      try {
        out[i] = suites[i].second(level, seed);
      } catch (const Error& e) {
        out[i] = CheckResult{suites[i].first, false,
                             "escaped error " + e.code() + ": " + e.what(), 0.0};
      } catch (const std::exception& e) {
        out[i] = CheckResult{suites[i].first, false, std::string("escaped: ") + e.what(), 0.0};
      }
    }
  };
  int threads = thread_cap(static_cast<int>(suites.size()));
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  std::sort(out.begin(), out.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

} // namespace ce
