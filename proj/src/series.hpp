#pragma once

#include <array>
#include <cmath>

#include "errors.hpp"

// Truncated power-series arithmetic: one mechanism serves graph jets and
// density jets in 2D and 3D, and the derivative-propagating evaluation of the
// manufactured solution.

namespace splitpot::series {

// ----------------------------------------------------------------- Poly1
// Univariate series truncated at degree N.
template <int N>
struct Poly1 {
  std::array<double, N + 1> c{};

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }

  Poly1 operator+(const Poly1& o) const {
    Poly1 r;
    for (int i = 0; i <= N; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Poly1 operator-(const Poly1& o) const {
    Poly1 r;
    for (int i = 0; i <= N; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Poly1 operator*(const Poly1& o) const {
    Poly1 r;
    for (int i = 0; i <= N; ++i)
      for (int j = 0; i + j <= N; ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
  }
  Poly1 operator*(double s) const {
    Poly1 r;
    for (int i = 0; i <= N; ++i) r.c[i] = c[i] * s;
    return r;
  }
};

// q(p(x)) with p(0) = 0.
template <int N>
Poly1<N> compose(const Poly1<N>& q, const Poly1<N>& p) {
  Poly1<N> r;
  r.c[0] = q.c[0];
  Poly1<N> pk;
  pk.c[0] = 1.0;
  for (int k = 1; k <= N; ++k) {
    pk = pk * p;
    for (int i = 0; i <= N; ++i) r.c[i] += q.c[k] * pk.c[i];
  }
  return r;
}

// Functional inverse w of p (p(0) = 0, p'(0) != 0): p(w(x)) = x.
template <int N>
Poly1<N> revert(const Poly1<N>& p) {
  if (p.c[0] != 0.0) fail(Errc::internal, "revert: constant term must vanish");
  if (std::fabs(p.c[1]) < 1e-300) fail(Errc::domain, "revert: vanishing linear term");
  Poly1<N> w;
  w.c[1] = 1.0 / p.c[1];
  for (int m = 2; m <= N; ++m) {
    // coefficient of x^m in p(w) with the current w (w_m = 0) must cancel
    const Poly1<N> comp = compose(p, w);
    w.c[m] = -comp.c[m] / p.c[1];
  }
  return w;
}

// ----------------------------------------------------------------- Poly2
// Bivariate series truncated at total degree N (triangular storage).
template <int N>
struct Poly2 {
  static constexpr int kSize = (N + 1) * (N + 2) / 2;
  std::array<double, kSize> c{};

  static constexpr int idx(int i, int j) {
    const int d = i + j;
    return d * (d + 1) / 2 + j;
  }
  double& at(int i, int j) { return c[idx(i, j)]; }
  double at(int i, int j) const { return c[idx(i, j)]; }

  Poly2 operator+(const Poly2& o) const {
    Poly2 r;
    for (int i = 0; i < kSize; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Poly2 operator-(const Poly2& o) const {
    Poly2 r;
    for (int i = 0; i < kSize; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Poly2 operator*(double s) const {
    Poly2 r;
    for (int i = 0; i < kSize; ++i) r.c[i] = c[i] * s;
    return r;
  }
  Poly2 operator*(const Poly2& o) const {
    Poly2 r;
    for (int d1 = 0; d1 <= N; ++d1)
      for (int j1 = 0; j1 <= d1; ++j1) {
        const double a = at(d1 - j1, j1);
        if (a == 0.0) continue;
        for (int d2 = 0; d1 + d2 <= N; ++d2)
          for (int j2 = 0; j2 <= d2; ++j2) {
            const double b = o.at(d2 - j2, j2);
            if (b != 0.0) r.at(d1 + d2 - j1 - j2, j1 + j2) += a * b;
          }
      }
    return r;
  }
};

// f(u) for univariate Taylor coefficients f0..fN and u a Poly2 with u(0,0)=0.
template <int N>
Poly2<N> compose1(const std::array<double, N + 1>& f, const Poly2<N>& u) {
  Poly2<N> r;
  r.at(0, 0) = f[0];
  Poly2<N> uk;
  uk.at(0, 0) = 1.0;
  for (int k = 1; k <= N; ++k) {
    uk = uk * u;
    for (int i = 0; i < Poly2<N>::kSize; ++i) r.c[i] += f[k] * uk.c[i];
  }
  return r;
}

// F(U(x,y), V(x,y)) for bivariate F and zero-constant-term U, V.
template <int N>
Poly2<N> subst(const Poly2<N>& F, const Poly2<N>& U, const Poly2<N>& V) {
  std::array<Poly2<N>, N + 1> upow, vpow;
  upow[0].at(0, 0) = 1.0;
  vpow[0].at(0, 0) = 1.0;
  for (int k = 1; k <= N; ++k) {
    upow[k] = upow[k - 1] * U;
    vpow[k] = vpow[k - 1] * V;
  }
  Poly2<N> r;
  for (int d = 0; d <= N; ++d)
    for (int j = 0; j <= d; ++j) {
      const double f = F.at(d - j, j);
      if (f == 0.0) continue;
      const Poly2<N> mono = upow[d - j] * vpow[j];
      for (int i = 0; i < Poly2<N>::kSize; ++i) r.c[i] += f * mono.c[i];
    }
  return r;
}

// Invert the 2D map (P, Q) (zero constant terms, invertible linear part):
// yields (U, V) with P(U,V) = x, Q(U,V) = y to total degree N.
template <int N>
void invert_map(const Poly2<N>& P, const Poly2<N>& Q, Poly2<N>& U, Poly2<N>& V) {
  const double a = P.at(1, 0), b = P.at(0, 1);
  const double c = Q.at(1, 0), d = Q.at(0, 1);
  const double det = a * d - b * c;
  if (std::fabs(det) < 1e-300) fail(Errc::domain, "invert_map: singular linear part");
  const double ia = d / det, ib = -b / det, ic = -c / det, id = a / det;
  U = Poly2<N>{};
  V = Poly2<N>{};
  U.at(1, 0) = ia;
  U.at(0, 1) = ib;
  V.at(1, 0) = ic;
  V.at(0, 1) = id;
  for (int pass = 2; pass <= N; ++pass) {
    // residual (P(U,V) - x, Q(U,V) - y); each pass fixes one total degree
    Poly2<N> PU = subst(P, U, V);
    Poly2<N> QU = subst(Q, U, V);
    PU.at(1, 0) -= 1.0;
    QU.at(0, 1) -= 1.0;
    for (int i = 0; i < Poly2<N>::kSize; ++i) {
      const double ru = ia * PU.c[i] + ib * QU.c[i];
      const double rv = ic * PU.c[i] + id * QU.c[i];
      U.c[i] -= ru;
      V.c[i] -= rv;
    }
  }
}

// ------------------------------------------------------------------ Jet3
// Trivariate truncated Taylor arithmetic to total order 4 (35 coefficients),
// used to propagate derivatives through the manufactured solution.
struct Jet3 {
  static constexpr int kOrder = 4;
  static constexpr int kSize = 35;
  std::array<double, kSize> c{};

  static int idx(int i, int j, int k) {
    // lexicographic within total degree d = i+j+k
    const int d = i + j + k;
    int base = 0;
    for (int t = 0; t < d; ++t) base += (t + 1) * (t + 2) / 2;
    // within degree d: order by (j+k) then k
    const int s = j + k;
    return base + s * (s + 1) / 2 + k;
  }

  static Jet3 constant(double v) {
    Jet3 r;
    r.c[0] = v;
    return r;
  }
  static Jet3 variable(double v, int which) {
    Jet3 r;
    r.c[0] = v;
    r.c[idx(which == 0, which == 1, which == 2)] = 1.0;
    return r;
  }

  double value() const { return c[0]; }

  Jet3 operator+(const Jet3& o) const {
    Jet3 r;
    for (int i = 0; i < kSize; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Jet3 operator-(const Jet3& o) const {
    Jet3 r;
    for (int i = 0; i < kSize; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Jet3 operator*(double s) const {
    Jet3 r;
    for (int i = 0; i < kSize; ++i) r.c[i] = c[i] * s;
    return r;
  }
  Jet3 operator-() const { return *this * -1.0; }
  Jet3 operator+(double s) const {
    Jet3 r = *this;
    r.c[0] += s;
    return r;
  }
  Jet3 operator-(double s) const {
    Jet3 r = *this;
    r.c[0] -= s;
    return r;
  }
  Jet3 operator*(const Jet3& o) const;

  // f(this) from Taylor coefficients of f at value(): f[k] = f^{(k)}(v0)/k!.
  Jet3 analytic(const std::array<double, kOrder + 1>& f) const {
    Jet3 h = *this;
    h.c[0] = 0.0;
    Jet3 r = constant(f[0]);
    Jet3 hk = constant(1.0);
    for (int k = 1; k <= kOrder; ++k) {
      hk = hk * h;
      r = r + hk * f[k];
    }
    return r;
  }

  double deriv(int i, int j, int k) const;  // partial derivative (not Taylor coeff)
};

namespace detail {
struct Jet3Tables {
  // exponent triples by index
  std::array<std::array<int, 3>, Jet3::kSize> e;
  // factorial products i! j! k!
  std::array<double, Jet3::kSize> fact;
  Jet3Tables() {
    for (int d = 0, n = 0; d <= Jet3::kOrder; ++d)
      for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) {
          const int k = d - i - j;
          // must match Jet3::idx ordering: within degree, by (j+k) then k
          (void)n;
          const int id = Jet3::idx(i, j, k);
          e[id] = {i, j, k};
          double f = 1.0;
          for (int t = 2; t <= i; ++t) f *= t;
          for (int t = 2; t <= j; ++t) f *= t;
          for (int t = 2; t <= k; ++t) f *= t;
          fact[id] = f;
        }
  }
};
inline const Jet3Tables& jet3_tables() {
  static const Jet3Tables t;
  return t;
}
}  // namespace detail

inline Jet3 Jet3::operator*(const Jet3& o) const {
  const auto& T = detail::jet3_tables();
  Jet3 r;
  for (int a = 0; a < kSize; ++a) {
    if (c[a] == 0.0) continue;
    const auto& ea = T.e[a];
    const int da = ea[0] + ea[1] + ea[2];
    for (int b = 0; b < kSize; ++b) {
      if (o.c[b] == 0.0) continue;
      const auto& eb = T.e[b];
      if (da + eb[0] + eb[1] + eb[2] > kOrder) continue;
      r.c[idx(ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])] += c[a] * o.c[b];
    }
  }
  return r;
}

inline double Jet3::deriv(int i, int j, int k) const {
  const auto& T = detail::jet3_tables();
  const int id = idx(i, j, k);
  return c[id] * T.fact[id];
}

inline Jet3 operator*(double s, const Jet3& j) { return j * s; }
inline Jet3 operator+(double s, const Jet3& j) { return j + s; }
inline Jet3 operator-(double s, const Jet3& j) { return (-j) + s; }

inline Jet3 exp(const Jet3& x) {
  const double v = std::exp(x.value());
  return x.analytic({v, v, v / 2.0, v / 6.0, v / 24.0});
}
inline Jet3 sin(const Jet3& x) {
  const double s = std::sin(x.value()), c0 = std::cos(x.value());
  return x.analytic({s, c0, -s / 2.0, -c0 / 6.0, s / 24.0});
}
inline Jet3 cos(const Jet3& x) {
  const double s = std::sin(x.value()), c0 = std::cos(x.value());
  return x.analytic({c0, -s, -c0 / 2.0, s / 6.0, c0 / 24.0});
}

}  // namespace splitpot::series
