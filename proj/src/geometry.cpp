#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace splitpot::geom {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Taylor of cos(a + w d) / sin(a + w d) in d, degree N.
template <int N>
void angle_series(double a, double w, Poly1<N>& cs, Poly1<N>& sn) {
  const double c0 = std::cos(a), s0 = std::sin(a);
  double wp = 1.0;  // w^k / k!
  for (int k = 0; k <= N; ++k) {
    switch (k % 4) {
      case 0: cs[k] = c0 * wp; sn[k] = s0 * wp; break;
      case 1: cs[k] = -s0 * wp; sn[k] = c0 * wp; break;
      case 2: cs[k] = -c0 * wp; sn[k] = -s0 * wp; break;
      default: cs[k] = s0 * wp; sn[k] = -c0 * wp; break;
    }
    wp *= w / (k + 1);
  }
}

template <int N>
Poly2<N> outer(const Poly1<N>& a, const Poly1<N>& b) {
  // a(ds) * b(dt)
  Poly2<N> r;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) r.at(i, j) = a[i] * b[j];
  return r;
}

template <int N>
Poly1<N> downgrade(const Poly1<5>& p) {
  Poly1<N> r;
  for (int i = 0; i <= N; ++i) r[i] = p[i];
  return r;
}

}  // namespace

// -------------------------------------------------------------------- curves

Vec2 Curve2D::point(double s) const {
  Poly1<5> px, py;
  taylor(s, px, py);
  return {px[0], py[0]};
}

Vec2 Curve2D::tangent(double s) const {
  Poly1<5> px, py;
  taylor(s, px, py);
  return {px[1], py[1]};
}

Vec2 Curve2D::outward_normal(double s) const {
  const Vec2 t = tangent(s).normalized();
  return {t.y, -t.x};
}

void Circle::taylor(double s0, Poly1<5>& px, Poly1<5>& py) const {
  Poly1<5> cs, sn;
  angle_series<5>(kTwoPi * s0, kTwoPi, cs, sn);
  px = cs * r_;
  py = sn * r_;
  px[0] += c_.x;
  py[0] += c_.y;
}

void Ellipse::taylor(double s0, Poly1<5>& px, Poly1<5>& py) const {
  Poly1<5> cs, sn;
  angle_series<5>(kTwoPi * s0, kTwoPi, cs, sn);
  px = cs * a_;
  py = sn * b_;
  px[0] += c_.x;
  py[0] += c_.y;
}

TrigCurve2D::TrigCurve2D(Vec2 center, std::vector<Mode> modes)
    : c_(center), modes_(std::move(modes)) {}

void TrigCurve2D::taylor(double s0, Poly1<5>& px, Poly1<5>& py) const {
  px = Poly1<5>{};
  py = Poly1<5>{};
  px[0] = c_.x;
  py[0] = c_.y;
  for (const Mode& m : modes_) {
    Poly1<5> cs, sn;
    angle_series<5>(kTwoPi * m.k * s0, kTwoPi * m.k, cs, sn);
    px = px + cs * m.cos_coef.x + sn * m.sin_coef.x;
    py = py + cs * m.cos_coef.y + sn * m.sin_coef.y;
  }
}

namespace {

// orthogonality residual g(s) = (p(s) - x) . p'(s) and its derivative
void ortho_residual(const Curve2D& curve, double s, Vec2 x, double& g, double& dg,
                    Vec2& p, Vec2& dp) {
  Poly1<5> px, py;
  curve.taylor(s, px, py);
  p = {px[0], py[0]};
  dp = {px[1], py[1]};
  const Vec2 ddp{2.0 * px[2], 2.0 * py[2]};
  const Vec2 d = p - x;
  g = d.dot(dp);
  dg = dp.dot(dp) + d.dot(ddp);
}

double wrap01(double s) {
  s -= std::floor(s);
  return s;
}

}  // namespace

ClosestPoint2D closest_point(const Curve2D& curve, Vec2 x) {
  constexpr int kScan = 256;
  std::array<double, kScan> dist;
  for (int i = 0; i < kScan; ++i) {
    const Vec2 p = curve.point(static_cast<double>(i) / kScan);
    dist[i] = (p - x).norm();
  }
  struct Candidate {
    double s, r;
    Vec2 b;
  };
  std::vector<Candidate> mins;
  for (int i = 0; i < kScan; ++i) {
    const double dm = dist[(i + kScan - 1) % kScan];
    const double dp = dist[(i + 1) % kScan];
    if (!(dist[i] <= dm && dist[i] <= dp)) continue;
    // refine by Newton with bisection safeguard; g goes - to + across a minimum
    double lo = (i - 1.0) / kScan, hi = (i + 1.0) / kScan;
    double s = static_cast<double>(i) / kScan;
    Vec2 p, dp2;
    double g, dg;
    bool converged = false;
    for (int it = 0; it < 80; ++it) {
      ortho_residual(curve, s, x, g, dg, p, dp2);
      const double tnorm = dp2.norm();
      if (tnorm < 1e-12) fail(Errc::domain, "closest_point: degenerate parameterization");
      if (std::fabs(g) <= 1e-12 * tnorm * std::max(1.0, (p - x).norm())) {
        converged = true;
        break;
      }
      if (g > 0.0)
        hi = s;
      else
        lo = s;
      double snew = (std::fabs(dg) > 1e-300) ? s - g / dg : 0.5 * (lo + hi);
      if (!(snew > lo && snew < hi)) snew = 0.5 * (lo + hi);
      s = snew;
    }
    if (!converged) fail(Errc::nonconverged, "closest_point: Newton did not converge");
    const double r = (p - x).norm();
    mins.push_back({wrap01(s), r, p});
  }
  if (mins.empty()) fail(Errc::internal, "closest_point: no candidate minima");
  std::sort(mins.begin(), mins.end(), [](const Candidate& a, const Candidate& b) {
    return a.r < b.r;
  });
  // deduplicate refined minima that converged to the same point
  std::vector<Candidate> uniq;
  for (const Candidate& cand : mins) {
    bool dup = false;
    for (const Candidate& u : uniq) {
      double ds = std::fabs(cand.s - u.s);
      ds = std::min(ds, 1.0 - ds);
      if (ds < 1e-7 || (cand.b - u.b).norm() < 1e-11) dup = true;
    }
    if (!dup) uniq.push_back(cand);
  }
  if (uniq.size() >= 2 && uniq[1].r - uniq[0].r <= 1e-9 * std::max(uniq[0].r, 1e-300))
    fail(Errc::ambiguous_projection, "closest_point: target near the medial axis");
  ClosestPoint2D out;
  out.s = uniq[0].s;
  out.b = uniq[0].b;
  out.r = uniq[0].r;
  const Vec2 nu = curve.outward_normal(out.s);
  const double sd = (x - out.b).dot(nu);
  out.side = (std::fabs(sd) <= 1e-13) ? 0 : (sd > 0.0 ? 1 : -1);
  return out;
}

GeomJet2D graph_jet(const Curve2D& curve, const ClosestPoint2D& cp, Vec2 x) {
  (void)x;
  Poly1<5> px, py;
  curve.taylor(cp.s, px, py);
  const Vec2 dp{px[1], py[1]};
  const double tnorm = dp.norm();
  if (tnorm < 1e-12) fail(Errc::domain, "graph_jet: degenerate parameterization");
  const Vec2 t = dp * (1.0 / tnorm);
  const Vec2 nu{t.y, -t.x};  // outward for a counterclockwise curve
  const Vec2 m{-nu.x, -nu.y};
  Poly1<5> xi, eta;
  for (int k = 1; k <= 5; ++k) {
    xi[k] = px[k] * t.x + py[k] * t.y;
    eta[k] = px[k] * m.x + py[k] * m.y;
  }
  const Poly1<5> winv = series::revert(xi);
  const Poly1<5> gamma = series::compose(eta, winv);
  GeomJet2D out;
  out.r = cp.r;
  out.side = cp.side;
  out.kappa = 2.0 * gamma[2];
  out.g3 = 6.0 * gamma[3];
  out.g4 = 24.0 * gamma[4];
  out.frame = {cp.b, t, m};
  out.s_star = cp.s;
  return out;
}

Poly1<4> TrigDensity2D::taylor(double s0) const {
  Poly1<4> r;
  r[0] = a0_;
  for (const Mode& m : modes_) {
    Poly1<4> cs, sn;
    angle_series<4>(kTwoPi * m.k * s0, kTwoPi * m.k, cs, sn);
    r = r + cs * m.a + sn * m.b;
  }
  return r;
}

std::array<double, 5> density_graph_jet(const Curve2D& curve, const GeomJet2D& jet,
                                        const Density2D& density) {
  Poly1<5> px, py;
  curve.taylor(jet.s_star, px, py);
  Poly1<5> xi;
  for (int k = 1; k <= 5; ++k) xi[k] = px[k] * jet.frame.t.x + py[k] * jet.frame.t.y;
  const Poly1<5> winv = series::revert(xi);
  const Poly1<4> sig = density.taylor(jet.s_star);
  Poly1<5> sig5;
  for (int k = 0; k <= 4; ++k) sig5[k] = sig[k];
  const Poly1<5> graph = series::compose(sig5, winv);
  std::array<double, 5> out{};
  double fact = 1.0;
  for (int k = 0; k <= 4; ++k) {
    if (k > 1) fact *= k;
    out[k] = graph[k] * fact;
  }
  return out;
}

// ------------------------------------------------------------------ surfaces

Vec3 Surface3D::point(double s, double t) const {
  std::array<Poly2<5>, 3> p;
  taylor(s, t, p);
  return {p[0].at(0, 0), p[1].at(0, 0), p[2].at(0, 0)};
}

Vec3 Surface3D::outward_normal(double s, double t) const {
  std::array<Poly2<5>, 3> p;
  taylor(s, t, p);
  const Vec3 ps{p[0].at(1, 0), p[1].at(1, 0), p[2].at(1, 0)};
  const Vec3 pt{p[0].at(0, 1), p[1].at(0, 1), p[2].at(0, 1)};
  Vec3 n = ps.cross(pt).normalized();
  if (n.dot(outward_hint(s, t)) < 0.0) n = n * -1.0;
  return n;
}

void Torus::taylor(double s0, double t0, std::array<Poly2<5>, 3>& p) const {
  Poly1<5> cphi, sphi, cth, sth;
  angle_series<5>(kTwoPi * s0, kTwoPi, cphi, sphi);
  angle_series<5>(kTwoPi * t0, kTwoPi, cth, sth);
  Poly1<5> ring = cth * rho_;
  ring[0] += R_;  // R + rho cos(theta), series in dt
  Poly1<5> one{};
  one[0] = 1.0;
  p[0] = outer<5>(cphi, ring);
  p[1] = outer<5>(sphi, ring);
  p[2] = outer<5>(one, sth * rho_);
}

Vec3 Torus::outward_hint(double s, double t) const {
  const double phi = kTwoPi * s, th = kTwoPi * t;
  return {std::cos(th) * std::cos(phi), std::cos(th) * std::sin(phi), std::sin(th)};
}

bool Torus::analytic_closest(Vec3 x, double& s, double& t) const {
  const double raxis = std::hypot(x.x, x.y);
  if (raxis < 1e-12) fail(Errc::ambiguous_projection, "torus closest point: target on the symmetry axis");
  const double u = raxis - R_;
  const double dd = std::hypot(u, x.z);
  if (dd < 1e-12)
    fail(Errc::ambiguous_projection, "torus closest point: target on the tube center circle");
  s = wrap01(std::atan2(x.y, x.x) / kTwoPi);
  t = wrap01(std::atan2(x.z, u) / kTwoPi);
  return true;
}

double Torus::area() const { return 4.0 * kPi * kPi * R_ * rho_; }

double Torus::signed_distance(Vec3 x) const {
  const double raxis = std::hypot(x.x, x.y);
  return std::hypot(raxis - R_, x.z) - rho_;
}

void SphereSurface::taylor(double s0, double t0, std::array<Poly2<5>, 3>& p) const {
  // p = R (sin(pi t) cos(2 pi s), sin(pi t) sin(2 pi s), cos(pi t))
  Poly1<5> cphi, sphi, cth, sth;
  angle_series<5>(kTwoPi * s0, kTwoPi, cphi, sphi);
  angle_series<5>(kPi * t0, kPi, cth, sth);
  Poly1<5> one{};
  one[0] = 1.0;
  p[0] = outer<5>(cphi, sth) * R_;
  p[1] = outer<5>(sphi, sth) * R_;
  p[2] = outer<5>(one, cth) * R_;
}

Vec3 SphereSurface::outward_hint(double s, double t) const {
  const double phi = kTwoPi * s, th = kPi * t;
  return {std::sin(th) * std::cos(phi), std::sin(th) * std::sin(phi), std::cos(th)};
}

bool SphereSurface::analytic_closest(Vec3 x, double& s, double& t) const {
  const double r = x.norm();
  if (r < 1e-12) fail(Errc::ambiguous_projection, "sphere closest point: target at the center");
  s = wrap01(std::atan2(x.y, x.x) / kTwoPi);
  t = std::acos(std::clamp(x.z / r, -1.0, 1.0)) / kPi;
  return true;
}

double SphereSurface::area() const { return 4.0 * kPi * R_ * R_; }

ClosestPoint3D closest_point(const Surface3D& surf, Vec3 x) {
  ClosestPoint3D out;
  double s = 0.0, t = 0.0;
  if (!surf.analytic_closest(x, s, t)) {
    // coarse grid + Newton on the two orthogonality residuals
    constexpr int kGrid = 64;
    double best = 1e300;
    for (int i = 0; i < kGrid; ++i)
      for (int j = 0; j < kGrid; ++j) {
        const double ss = static_cast<double>(i) / kGrid;
        const double tt = static_cast<double>(j) / kGrid;
        const double d = (surf.point(ss, tt) - x).norm2();
        if (d < best) {
          best = d;
          s = ss;
          t = tt;
        }
      }
    for (int it = 0; it < 60; ++it) {
      std::array<Poly2<5>, 3> p;
      surf.taylor(s, t, p);
      const Vec3 d{p[0].at(0, 0) - x.x, p[1].at(0, 0) - x.y, p[2].at(0, 0) - x.z};
      const Vec3 ps{p[0].at(1, 0), p[1].at(1, 0), p[2].at(1, 0)};
      const Vec3 pt{p[0].at(0, 1), p[1].at(0, 1), p[2].at(0, 1)};
      const Vec3 pss{2 * p[0].at(2, 0), 2 * p[1].at(2, 0), 2 * p[2].at(2, 0)};
      const Vec3 pst{p[0].at(1, 1), p[1].at(1, 1), p[2].at(1, 1)};
      const Vec3 ptt{2 * p[0].at(0, 2), 2 * p[1].at(0, 2), 2 * p[2].at(0, 2)};
      const double g1 = d.dot(ps), g2 = d.dot(pt);
      const double scale = std::max(1.0, d.norm()) * std::max(ps.norm(), pt.norm());
      if (std::fabs(g1) + std::fabs(g2) <= 1e-12 * scale) break;
      const double a11 = ps.dot(ps) + d.dot(pss);
      const double a12 = ps.dot(pt) + d.dot(pst);
      const double a22 = pt.dot(pt) + d.dot(ptt);
      const double det = a11 * a22 - a12 * a12;
      if (std::fabs(det) < 1e-300) fail(Errc::nonconverged, "closest_point: singular Newton system");
      s -= (a22 * g1 - a12 * g2) / det;
      t -= (a11 * g2 - a12 * g1) / det;
      s = wrap01(s);
      t = wrap01(t);
      if (it == 59) fail(Errc::nonconverged, "closest_point: surface Newton did not converge");
    }
  }
  out.s = s;
  out.t = t;
  out.b = surf.point(s, t);
  out.r = (x - out.b).norm();
  const double sd = (x - out.b).dot(surf.outward_normal(s, t));
  out.side = (std::fabs(sd) <= 1e-13) ? 0 : (sd > 0.0 ? 1 : -1);
  return out;
}

namespace {

struct Chart3D {
  Vec3 b, e1p, e2p, m;  // orthonormal tangent pair (not yet principal), inward normal
  std::array<Poly2<5>, 3> offset;  // p - b
};

Chart3D build_chart(const Surface3D& surf, double s, double t) {
  Chart3D ch;
  surf.taylor(s, t, ch.offset);
  ch.b = {ch.offset[0].at(0, 0), ch.offset[1].at(0, 0), ch.offset[2].at(0, 0)};
  for (int c = 0; c < 3; ++c) ch.offset[c].at(0, 0) = 0.0;
  const Vec3 ps{ch.offset[0].at(1, 0), ch.offset[1].at(1, 0), ch.offset[2].at(1, 0)};
  const Vec3 pt{ch.offset[0].at(0, 1), ch.offset[1].at(0, 1), ch.offset[2].at(0, 1)};
  Vec3 n = ps.cross(pt);
  if (n.norm() < 1e-12) fail(Errc::domain, "graph_jet: degenerate surface point");
  n = n.normalized();
  if (n.dot(surf.outward_hint(s, t)) < 0.0) n = n * -1.0;
  ch.m = n * -1.0;
  ch.e1p = ps.normalized();
  ch.e2p = (pt - ch.e1p * pt.dot(ch.e1p)).normalized();
  return ch;
}

Poly2<5> project(const std::array<Poly2<5>, 3>& off, Vec3 dir) {
  return off[0] * dir.x + off[1] * dir.y + off[2] * dir.z;
}

}  // namespace

GeomJet3D graph_jet(const Surface3D& surf, const ClosestPoint3D& cp, Vec3 x) {
  (void)x;
  const Chart3D ch = build_chart(surf, cp.s, cp.t);
  Poly2<5> z1 = project(ch.offset, ch.e1p);
  Poly2<5> z2 = project(ch.offset, ch.e2p);
  Poly2<5> h = project(ch.offset, ch.m);
  Poly2<5> U, V;
  series::invert_map(z1, z2, U, V);
  const Poly2<5> gam0 = series::subst(h, U, V);
  // principal rotation from the quadratic part
  const double A = 2.0 * gam0.at(2, 0);
  const double B = gam0.at(1, 1);
  const double C = 2.0 * gam0.at(0, 2);
  const double off_scale = std::hypot(A - C, 2.0 * B);
  GeomJet3D out;
  out.umbilic = off_scale <= 1e-9 * std::max({std::fabs(A), std::fabs(C), 1e-6});
  double theta = out.umbilic ? 0.0 : 0.5 * std::atan2(2.0 * B, A - C);
  const double mean = 0.5 * (A + C);
  const double d = 0.5 * off_scale;
  double kk1 = mean + d, kk2 = mean - d;
  // rotate arguments: gamma(w) = gam0(cos th w1 - sin th w2, sin th w1 + cos th w2)
  Poly2<5> WX, WY;
  WX.at(1, 0) = std::cos(theta);
  WX.at(0, 1) = -std::sin(theta);
  WY.at(1, 0) = std::sin(theta);
  WY.at(0, 1) = std::cos(theta);
  Poly2<5> gam = series::subst(gam0, WX, WY);
  if (2.0 * gam.at(2, 0) < 2.0 * gam.at(0, 2) - 1e-14) {
    // ensure k1 >= k2 by advancing the rotation a quarter turn
    theta += 0.5 * kPi;
    WX.at(1, 0) = std::cos(theta);
    WX.at(0, 1) = -std::sin(theta);
    WY.at(1, 0) = std::sin(theta);
    WY.at(0, 1) = std::cos(theta);
    gam = series::subst(gam0, WX, WY);
  }
  out.k1 = kk1;
  out.k2 = kk2;
  if (std::fabs(gam.at(1, 1)) > 1e-8 * std::max(1.0, std::fabs(kk1)))
    fail(Errc::internal, "graph_jet: principal frame cross term did not vanish");
  out.r = cp.r;
  out.side = cp.side;
  out.g30 = 6.0 * gam.at(3, 0);
  out.g21 = 2.0 * gam.at(2, 1);
  out.g12 = 2.0 * gam.at(1, 2);
  out.g03 = 6.0 * gam.at(0, 3);
  out.g40 = 24.0 * gam.at(4, 0);
  out.g31 = 6.0 * gam.at(3, 1);
  out.g22 = 4.0 * gam.at(2, 2);
  out.g13 = 6.0 * gam.at(1, 3);
  out.g04 = 24.0 * gam.at(0, 4);
  const Vec3 e1 = ch.e1p * std::cos(theta) + ch.e2p * std::sin(theta);
  const Vec3 e2 = ch.e1p * (-std::sin(theta)) + ch.e2p * std::cos(theta);
  out.frame = {ch.b, e1, e2, ch.m};
  out.s_star = cp.s;
  out.t_star = cp.t;
  return out;
}

Poly2<4> TrigDensity3D::taylor(double s0, double t0) const {
  Poly2<4> r;
  r.at(0, 0) = a0_;
  for (const Mode& m : modes_) {
    Poly1<4> cs, sn, ct, st;
    angle_series<4>(kTwoPi * m.ks * s0, kTwoPi * m.ks, cs, sn);
    angle_series<4>(kTwoPi * m.kt * t0, kTwoPi * m.kt, ct, st);
    // cos(a+b) = cos a cos b - sin a sin b, sin(a+b) = sin a cos b + cos a sin b
    Poly2<4> cosab, sinab;
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j) {
        cosab.at(i, j) = cs[i] * ct[j] - sn[i] * st[j];
        sinab.at(i, j) = sn[i] * ct[j] + cs[i] * st[j];
      }
    r = r + cosab * m.a + sinab * m.b;
  }
  return r;
}

SurfDensityJet3D density_graph_jet(const Surface3D& surf, const GeomJet3D& jet,
                                   const Density3D& density) {
  const Chart3D ch = build_chart(surf, jet.s_star, jet.t_star);
  // project onto the principal axes directly
  Poly2<5> z1 = project(ch.offset, jet.frame.e1);
  Poly2<5> z2 = project(ch.offset, jet.frame.e2);
  Poly2<5> U, V;
  series::invert_map(z1, z2, U, V);
  const Poly2<4> dens = density.taylor(jet.s_star, jet.t_star);
  Poly2<5> dens5;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) dens5.at(i, j) = dens.at(i, j);
  const Poly2<5> g = series::subst(dens5, U, V);
  SurfDensityJet3D out;
  out.v00 = g.at(0, 0);
  out.v10 = g.at(1, 0);
  out.v01 = g.at(0, 1);
  out.v20 = 2.0 * g.at(2, 0);
  out.v11 = g.at(1, 1);
  out.v02 = 2.0 * g.at(0, 2);
  return out;
}

Poly2<4> FieldDensity3D::taylor(double s0, double t0) const {
  std::array<Poly2<5>, 3> p;
  surf_.taylor(s0, t0, p);
  const Vec3 b{p[0].at(0, 0), p[1].at(0, 0), p[2].at(0, 0)};
  const series::Jet3 F = fn_(b, ctx_);
  std::array<Poly2<4>, 3> off;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j) off[c].at(i, j) = p[c].at(i, j);
    off[c].at(0, 0) = 0.0;
  }
  // compose the trivariate jet with the three parameter series
  const auto& T = series::detail::jet3_tables();
  std::array<Poly2<4>, 5> xp, yp, zp;
  xp[0].at(0, 0) = 1.0;
  yp[0].at(0, 0) = 1.0;
  zp[0].at(0, 0) = 1.0;
  for (int k = 1; k <= 4; ++k) {
    xp[k] = xp[k - 1] * off[0];
    yp[k] = yp[k - 1] * off[1];
    zp[k] = zp[k - 1] * off[2];
  }
  Poly2<4> r;
  for (int id = 0; id < series::Jet3::kSize; ++id) {
    const double cf = F.c[id];
    if (cf == 0.0) continue;
    const auto& e = T.e[id];
    const Poly2<4> mono = xp[e[0]] * yp[e[1]] * zp[e[2]];
    for (int i = 0; i < Poly2<4>::kSize; ++i) r.c[i] += cf * mono.c[i];
  }
  return r;
}

}  // namespace splitpot::geom
