#pragma once

#include <functional>
#include <vector>

namespace splitpot::quadrule {

struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre rule on [a, b].
Rule1D gauss_legendre(int n, double a, double b);

// Periodic trapezoidal rule on [0, period) (equal weights period/n).
Rule1D periodic_trapezoid(int n, double period);

// Adaptive panel integration of f on [a, b]: embedded GL10/GL20 estimate,
// bisect until |I20 - I10| <= tol_abs + tol_rel |I| per panel.  Throws
// AccuracyError at the panel cap, carrying the value reached.
double adaptive(const std::function<double(double)>& f, double a, double b,
                double tol_abs, double tol_rel, int max_panels = 20000);

}  // namespace splitpot::quadrule
