#include "quadrule.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace splitpot::quadrule {

Rule1D gauss_legendre(int n, double a, double b) {
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton on P_n with the Chebyshev-like initial guess
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    r.x[i] = xm - xl * z;
    r.x[n - 1 - i] = xm + xl * z;
    r.w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    r.w[n - 1 - i] = r.w[i];
  }
  return r;
}

Rule1D periodic_trapezoid(int n, double period) {
  Rule1D r;
  r.x.resize(n);
  r.w.assign(n, period / n);
  for (int i = 0; i < n; ++i) r.x[i] = period * i / n;
  return r;
}

namespace {

struct Panel {
  double a, b;
};

double panel_gl(const std::function<double(double)>& f, const Rule1D& base, double a,
                double b) {
  const double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
  double s = 0.0;
  for (size_t i = 0; i < base.x.size(); ++i) s += base.w[i] * f(xm + xl * base.x[i]);
  return s * xl;
}

}  // namespace

double adaptive(const std::function<double(double)>& f, double a, double b, double tol_abs,
                double tol_rel, int max_panels) {
  static const Rule1D g10 = gauss_legendre(10, -1.0, 1.0);
  static const Rule1D g20 = gauss_legendre(20, -1.0, 1.0);
  std::vector<Panel> stack{{a, b}};
  double total = 0.0;
  double err_est = 0.0;
  int used = 0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    if (++used > max_panels) {
      // drain what remains at the coarse estimate and report
      for (const Panel& q : stack) total += panel_gl(f, g20, q.a, q.b);
      total += panel_gl(f, g20, p.a, p.b);
      throw AccuracyError("adaptive quadrature: panel cap reached", total, err_est);
    }
    const double coarse = panel_gl(f, g10, p.a, p.b);
    const double fine = panel_gl(f, g20, p.a, p.b);
    const double diff = std::fabs(fine - coarse);
    const double scale = tol_abs + tol_rel * std::fabs(fine);
    if (diff <= scale || (p.b - p.a) < 1e-14 * (b - a)) {
      total += fine;
      err_est += diff;
    } else {
      const double mid = 0.5 * (p.a + p.b);
      stack.push_back({p.a, mid});
      stack.push_back({mid, p.b});
    }
  }
  return total;
}

}  // namespace splitpot::quadrule
