#include "specfun.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace splitpot::specfun {

namespace {

constexpr double kTiny = 1e-300;

// erfc(x) * sqrt(pi) * e^{x^2} = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated by modified Lentz; valid for x >= 1.
double erfc_cf(double x) {
  double b = x;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 300; ++i) {
    const double a = 0.5 * i;
    d = 1.0 / (b + a * d);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-17) break;
  }
  return h;
}

double erf_series(double x) {
  // erf(x) = (2/sqrt(pi)) sum_k (-1)^k x^{2k+1} / (k! (2k+1)), |x| < 1
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k <= 40; ++k) {
    term *= -x2 / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (std::fabs(add) < 1e-17 * std::fabs(sum)) break;
  }
  return 2.0 * kInvSqrtPi * sum;
}

// Upper incomplete gamma continued fraction:
// Gamma(a, x) = e^{-x} x^a / (x+1-a - 1(1-a)/(x+3-a - 2(2-a)/(x+5-a - ...)))
// Stable for x > a + 1; here a <= -1/2 and x >= 1.44.
double upper_gamma_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 400; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x)) * h;
}

}  // namespace

double erfc(double x) {
  if (!std::isfinite(x)) fail(Errc::domain, "erfc: non-finite argument");
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x < 1.0) return 1.0 - erf_series(x);
  const double e = std::exp(-x * x);  // underflows (-> 0) for x >~ 26.6
  if (e == 0.0) return 0.0;
  return e * kInvSqrtPi * erfc_cf(x);
}

double erf(double x) {
  if (!std::isfinite(x)) fail(Errc::domain, "erf: non-finite argument");
  if (std::fabs(x) < 1.0) return erf_series(x);
  return x > 0.0 ? 1.0 - erfc(x) : erfc(-x) - 1.0;
}

double exp_integral_e1(double x) {
  if (!(x > 0.0)) fail(Errc::domain, "exp_integral_e1: requires x > 0");
  if (x < 1.0) {
    // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 40; ++k) {
      term *= -x / k;
      const double add = -term / k;
      sum += add;
      if (std::fabs(add) < 1e-17 * (std::fabs(sum) + 1e-30)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  // Lentz form of the continued fraction e^{-x}/(x+1 - 1/(x+3 - 4/(x+5 - ...)))
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 300; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

double hermite_phys(int n, double x) {
  if (n < 0 || n > 16) fail(Errc::unsupported, "hermite_phys: order must be in [0, 16]");
  double hm = 1.0;
  if (n == 0) return hm;
  double h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double hp = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hp;
  }
  return h;
}

double gaussian_moment_w(int n) {
  if (n < 0 || n > 40) fail(Errc::unsupported, "gaussian_moment_w: order must be in [0, 40]");
  if (n % 2 == 1) return 0.0;
  double ratio = 1.0;  // n! / (n/2)!
  for (int k = n / 2 + 1; k <= n; ++k) ratio *= k;
  return kTwoPi * ratio;
}

std::complex<double> fourier_gaussian_moment(int n, double c) {
  if (n < 0 || n > 16) fail(Errc::unsupported, "fourier_gaussian_moment: order must be in [0, 16]");
  const double mag = kSqrtPi * std::ldexp(1.0, -n) * hermite_phys(n, 0.5 * c) *
                     std::exp(-0.25 * c * c);
  switch (n % 4) {
    case 0: return {mag, 0.0};
    case 1: return {0.0, mag};
    case 2: return {-mag, 0.0};
    default: return {0.0, -mag};
  }
}

double q_moment(int p, double c) {
  if (!(c > 0.0)) fail(Errc::domain, "q_moment: requires c > 0");
  if (p < -2 || p > 12) fail(Errc::unsupported, "q_moment: p must be in [-2, 12]");
  const double e = std::exp(-c * c);
  switch (p) {
    case -2: return 0.5 * c * e + 0.25 * kSqrtPi * erfc(c);
    case -1: return 0.5 * e;
    case 0: return 0.5 * kSqrtPi * erfc(c);
    case 1: return 0.5 * exp_integral_e1(c * c);
    default: break;
  }
  if (c >= 1.2) return 0.5 * upper_gamma_cf(0.5 * (1 - p), c * c);
  // upward recursion from the base pair of matching parity
  int q = (p % 2 == 0) ? 0 : 1;
  double val = q_moment(q, c);
  const double inv_c = 1.0 / c;
  double cpow = std::pow(inv_c, q + 1);  // c^{1-(q+2)}
  while (q < p) {
    q += 2;
    val = 2.0 * (val - 0.5 * cpow * e) / (1 - q);
    cpow *= inv_c * inv_c;
  }
  return val;
}

}  // namespace splitpot::specfun
