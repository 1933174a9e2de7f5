#include "ce/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

#include "ce/error.hpp"

namespace ce {

namespace {

constexpr double kCoincident = 1e-9;

double simpson_slice(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson(F&& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson_slice(a, m, fa, flm, fm);
  double right = simpson_slice(m, b, fm, frm, fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(F&& f, double a, double b) {
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = simpson_slice(a, b, fa, fm, fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, 1e-13, 40);
}

void check_vertex(const DecoratedIdealPolygon& p, int i) {
  require(i >= 0 && i < p.n(), "bad_polygon", "vertex index out of range");
}

// Exit point of the horocycle at one endpoint of the geodesic semicircle
// with center c and radius r, as an angle in (0, pi). left picks the
// endpoint at c - r.
double exit_angle(double c, double r, double diam, bool left) {
  double y = 4.0 * r * r * diam / (4.0 * r * r + diam * diam);
  double x = left ? (c - r) + diam * y / (2.0 * r) : (c + r) - diam * y / (2.0 * r);
  return std::atan2(y, x - c);
}

} // namespace

DecoratedIdealPolygon DecoratedIdealPolygon::make(std::vector<DecoratedVertex> v) {
  int n = static_cast<int>(v.size());
  require(n >= 2, "bad_polygon", "need at least two ideal vertices");
  int inf_at = -1;
  for (int i = 0; i < n; ++i) {
    require(v[i].h > 0, "bad_polygon", "horocycle parameter must be positive");
    if (v[i].infinite) {
      require(inf_at < 0, "bad_polygon", "at most one vertex at infinity");
      inf_at = i;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (v[i].infinite || v[j].infinite) continue;
      require(std::fabs(v[i].x - v[j].x) > kCoincident, "bad_polygon",
              "coincident ideal vertices");
    }
  if (inf_at >= 0) {
    for (int s = 1; s + 1 < n; ++s) {
      double a = v[(inf_at + s) % n].x, b = v[(inf_at + s + 1) % n].x;
      require(a < b, "bad_polygon", "vertices out of cyclic order");
    }
  } else {
    int descents = 0;
    for (int i = 0; i < n; ++i)
      if (v[i].x >= v[(i + 1) % n].x) ++descents;
    require(descents == 1, "bad_polygon", "vertices out of cyclic order");
  }
  DecoratedIdealPolygon out;
  out.v = std::move(v);
  return out;
}

double lambda_length(const DecoratedIdealPolygon& p, int i, int j) {
  check_vertex(p, i);
  check_vertex(p, j);
  require(i != j, "bad_polygon", "lambda length needs two distinct vertices");
  const DecoratedVertex& a = p.v[i];
  const DecoratedVertex& b = p.v[j];
  if (a.infinite) return std::sqrt(a.h / b.h);
  if (b.infinite) return std::sqrt(b.h / a.h);
  return std::fabs(a.x - b.x) / std::sqrt(a.h * b.h);
}

double lambda_length_by_arc(const DecoratedIdealPolygon& p, int i, int j) {
  check_vertex(p, i);
  check_vertex(p, j);
  require(i != j, "bad_polygon", "lambda length needs two distinct vertices");
  const DecoratedVertex& a = p.v[i];
  const DecoratedVertex& b = p.v[j];
  double dist = 0.0;
  if (a.infinite || b.infinite) {
    // Vertical geodesic: arc length element dy / y between the horocycle
    // at the finite end (top point y = diam) and the horoline (y = height).
    double diam = a.infinite ? b.h : a.h;
    double height = a.infinite ? a.h : b.h;
    dist = integrate([](double y) { return 1.0 / y; }, diam, height);
  } else {
    // Semicircular geodesic: arc length element d(theta) / sin(theta);
    // crossing horocycles put the exit angles in reversed order, which
    // makes the oriented integral negative.
    double xl = std::min(a.x, b.x), xr = std::max(a.x, b.x);
    double dl = a.x < b.x ? a.h : b.h;
    double dr = a.x < b.x ? b.h : a.h;
    double c = 0.5 * (xl + xr), r = 0.5 * (xr - xl);
    double tl = exit_angle(c, r, dl, true);
    double tr = exit_angle(c, r, dr, false);
    dist = integrate([](double t) { return 1.0 / std::sin(t); }, tr, tl);
  }
  return std::exp(0.5 * dist);
}

double ptolemy_check(const DecoratedIdealPolygon& p, const std::array<int, 4>& q) {
  double a13 = lambda_length(p, q[0], q[2]) * lambda_length(p, q[1], q[3]);
  double a12 = lambda_length(p, q[0], q[1]) * lambda_length(p, q[2], q[3]);
  double a14 = lambda_length(p, q[0], q[3]) * lambda_length(p, q[1], q[2]);
  double scale = std::fabs(a13) + std::fabs(a12) + std::fabs(a14);
  return std::fabs(a13 - a12 - a14) / scale;
}

double x_from_lengths(const DecoratedIdealPolygon& p, const Triangulation& t, int k) {
  require(t.n == p.n(), "bad_polygon", "decoration and triangulation sizes differ");
  require(t.is_diagonal_slot(k), "bad_direction", "cross-ratio needs a diagonal slot");
  std::array<int, 4> q = t.quad(k);
  return lambda_length(p, q[0], q[1]) * lambda_length(p, q[2], q[3]) /
         (lambda_length(p, q[1], q[2]) * lambda_length(p, q[3], q[0]));
}

double cross_ratio_check(const DecoratedIdealPolygon& p, const Triangulation& t, int k) {
  double from_lengths = x_from_lengths(p, t, k);
  std::array<int, 4> q = t.quad(k);
  auto factor = [&](int i, int j) {
    if (p.v[i].infinite || p.v[j].infinite) return 1.0;
    return p.v[i].x - p.v[j].x;
  };
  double cr = std::fabs(factor(q[0], q[1]) * factor(q[2], q[3]) /
                        (factor(q[1], q[2]) * factor(q[3], q[0])));
  return std::fabs(from_lengths - cr) / std::fabs(from_lengths);
}

double double_b_check(const DecoratedIdealPolygon& p, const DecoratedIdealPolygon& pm,
                      const Triangulation& t) {
  require(p.n() == pm.n(), "bad_polygon", "the two decorations must share the polygon");
  require(t.n == p.n(), "bad_polygon", "decoration and triangulation sizes differ");
  auto bval = [&](int i, int j) { return lambda_length(pm, i, j) / lambda_length(p, i, j); };
  double worst = 0.0;
  for (int k = 0; k < t.ndiag(); ++k) {
    std::array<int, 4> q = t.quad(k);
    double x13 = x_from_lengths(p, t, k);
    double direct = bval(q[1], q[3]);
    double formula = (x13 * bval(q[0], q[1]) * bval(q[2], q[3]) +
                      bval(q[0], q[3]) * bval(q[1], q[2])) /
                     ((1.0 + x13) * bval(q[0], q[2]));
    worst = std::max(worst, std::fabs(direct - formula) / std::fabs(direct));
  }
  return worst;
}

std::vector<double> lambda_vector(const DecoratedIdealPolygon& p, const Triangulation& t) {
  require(t.n == p.n(), "bad_polygon", "decoration and triangulation sizes differ");
  std::vector<double> out(t.m());
  for (int s = 0; s < t.m(); ++s) out[s] = lambda_length(p, t.edges[s].u, t.edges[s].v);
  return out;
}

std::vector<double> x_vector(const DecoratedIdealPolygon& p, const Triangulation& t) {
  require(t.n == p.n(), "bad_polygon", "decoration and triangulation sizes differ");
  std::vector<double> out(t.m(), 1.0);
  for (int k = 0; k < t.ndiag(); ++k) out[k] = x_from_lengths(p, t, k);
  return out;
}

DecoratedIdealPolygon mobius_image(const DecoratedIdealPolygon& p, double a, double b,
                                   double c, double d) {
  double det = a * d - b * c;
  require(det > 0, "eval_domain", "orientation-preserving transformation required");
  std::vector<DecoratedVertex> out;
  out.reserve(p.v.size());
  for (const DecoratedVertex& w : p.v) {
    DecoratedVertex img;
    if (w.infinite) {
      if (std::fabs(c) < 1e-12) {
        img.infinite = true;
        img.h = w.h * a / d;
      } else {
        img.x = a / c;
        img.h = det / (c * c * w.h);
      }
    } else {
      double den = c * w.x + d;
      if (std::fabs(den) < 1e-12) {
        img.infinite = true;
        img.h = det / (c * c * w.h);
      } else {
        img.x = (a * w.x + b) / den;
        img.h = w.h * det / (den * den);
      }
    }
    out.push_back(img);
  }
  return DecoratedIdealPolygon::make(std::move(out));
}

} // namespace ce
