#pragma once

#include <complex>

namespace splitpot::specfun {

inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kInvSqrtPi = 0.56418958354775628695;
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kTwoPi = 6.2831853071795864769;

// Complementary error function.  Maclaurin series of erf for |x| < 1, Lentz
// continued fraction for x >= 1, reflection erfc(-x) = 2 - erfc(x).
// Relative error <= ~3e-15 on |x| <= 30 (checked against quadrature and the
// libm reference in the test suite).  Values below the double underflow
// threshold (x >~ 26.6) return 0, which is saturation, not an error.
double erfc(double x);
double erf(double x);

// E1(x) = int_x^inf e^{-t}/t dt for x > 0.  Power series for x < 1, Lentz
// continued fraction for x >= 1; the switch point balances the two
// truncation bounds.  Relative error <= ~4e-15.
double exp_integral_e1(double x);

// Physicists' Hermite polynomial H_n(x), n <= 16.
double hermite_phys(int n, double x);

// w_n = 2 pi n! / (n/2)!  for even n, 0 for odd n.
// (The 2 pi prefactor is the one consistent with the defining double
// integral; see the quadrature cross-check in the tests.)
double gaussian_moment_w(int n);

// I_n(c) = int_R eta^n e^{-eta^2} e^{i eta c} deta
//        = sqrt(pi) (i^n / 2^n) H_n(c/2) e^{-c^2/4},  n <= 16.
// Real for even n, purely imaginary for odd n.
std::complex<double> fourier_gaussian_moment(int n, double c);

// Q_p(c) = int_c^inf e^{-x^2} x^{-p} dx,  c > 0,  -2 <= p <= 12.
// Base cases Q_{-2}, Q_{-1}, Q_0, Q_1 in closed form; p >= 2 by upward
// recursion Q_p = 2 (Q_{p-2} - (c^{1-p}/2) e^{-c^2}) / (1-p) for small c and
// by the upper-incomplete-gamma continued fraction (Q_p = Gamma((1-p)/2, c^2)/2)
// for c >= 1.2, where the recursion loses ~2c^2/(p-1) digits per step.
double q_moment(int p, double c);

}  // namespace splitpot::specfun
