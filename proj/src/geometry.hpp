#pragma once

#include <array>
#include <memory>
#include <vector>

#include "series.hpp"
#include "vec.hpp"

namespace splitpot::geom {

using series::Poly1;
using series::Poly2;

// ------------------------------------------------------------------ curves
// Closed curve, parameter s in [0, 1), counterclockwise (outward normal is
// the tangent rotated by -90 degrees).  Immutable after construction.
class Curve2D {
public:
  virtual ~Curve2D() = default;
  // Taylor coefficients of the parameterization around s0, in ds, degree 5.
  virtual void taylor(double s0, Poly1<5>& px, Poly1<5>& py) const = 0;
  Vec2 point(double s) const;
  Vec2 tangent(double s) const;          // unnormalized p'(s)
  Vec2 outward_normal(double s) const;   // unit
};

class Circle final : public Curve2D {
public:
  Circle(Vec2 center, double radius) : c_(center), r_(radius) {}
  void taylor(double s0, Poly1<5>& px, Poly1<5>& py) const override;

private:
  Vec2 c_;
  double r_;
};

class Ellipse final : public Curve2D {
public:
  Ellipse(double a, double b, Vec2 center = {}) : a_(a), b_(b), c_(center) {}
  void taylor(double s0, Poly1<5>& px, Poly1<5>& py) const override;

private:
  double a_, b_;
  Vec2 c_;
};

// p(s) = c + sum_k [ca_k cos(2 pi k s) + sa_k sin(2 pi k s)] per component.
class TrigCurve2D final : public Curve2D {
public:
  struct Mode {
    int k;
    Vec2 cos_coef;
    Vec2 sin_coef;
  };
  TrigCurve2D(Vec2 center, std::vector<Mode> modes);
  void taylor(double s0, Poly1<5>& px, Poly1<5>& py) const override;

private:
  Vec2 c_;
  std::vector<Mode> modes_;
};

struct ClosestPoint2D {
  double s = 0.0;
  Vec2 b;
  double r = 0.0;
  int side = 0;  // sign((x - b) . outward normal); -1 interior
};

// Coarse scan (256 nodes) + safeguarded Newton on the orthogonality residual.
// Throws ambiguous_projection when the two best distinct local minima agree
// to 1e-9 relative (target near the medial axis).
ClosestPoint2D closest_point(const Curve2D& curve, Vec2 x);

struct Frame2D {
  Vec2 b;
  Vec2 t;  // x1 axis (tangent)
  Vec2 m;  // x2 axis (inward normal)
};

struct GeomJet2D {
  double r = 0.0;
  int side = 0;
  double kappa = 0.0;  // graph gamma''(0); +1/R for a circle seen from inside
  double g3 = 0.0;     // gamma'''(0)
  double g4 = 0.0;     // gamma''''(0)
  Frame2D frame;
  double s_star = 0.0;
};

GeomJet2D graph_jet(const Curve2D& curve, const ClosestPoint2D& cp, Vec2 x);

// Layer density on a curve: Taylor in ds around s0, degree 4.
class Density2D {
public:
  virtual ~Density2D() = default;
  virtual Poly1<4> taylor(double s0) const = 0;
  double value(double s) const { return taylor(s)[0]; }
};

// a0 + sum_k [a_k cos(2 pi k s) + b_k sin(2 pi k s)]
class TrigDensity2D final : public Density2D {
public:
  struct Mode {
    int k;
    double a, b;
  };
  TrigDensity2D(double a0, std::vector<Mode> modes) : a0_(a0), modes_(std::move(modes)) {}
  Poly1<4> taylor(double s0) const override;

private:
  double a0_;
  std::vector<Mode> modes_;
};

// Tangential (graph-coordinate) derivatives sigma^(n) at the closest point,
// n = 0..4, in the frame of `jet`.
std::array<double, 5> density_graph_jet(const Curve2D& curve, const GeomJet2D& jet,
                                        const Density2D& density);

// ---------------------------------------------------------------- surfaces
class Surface3D {
public:
  virtual ~Surface3D() = default;
  // Taylor of the parameterization around (s0, t0) in (ds, dt), degree 5.
  virtual void taylor(double s0, double t0, std::array<Poly2<5>, 3>& p) const = 0;
  // direction that has positive dot with the outward normal at (s, t)
  virtual Vec3 outward_hint(double s, double t) const = 0;
  // analytic closest point when available
  virtual bool analytic_closest(Vec3 x, double& s, double& t) const { return false; }
  virtual double area() const = 0;
  Vec3 point(double s, double t) const;
  Vec3 outward_normal(double s, double t) const;
};

class Torus final : public Surface3D {
public:
  Torus(double major, double minor) : R_(major), rho_(minor) {}
  void taylor(double s0, double t0, std::array<Poly2<5>, 3>& p) const override;
  Vec3 outward_hint(double s, double t) const override;
  bool analytic_closest(Vec3 x, double& s, double& t) const override;
  double area() const override;
  double major() const { return R_; }
  double minor() const { return rho_; }
  // signed distance to the surface (negative inside the tube)
  double signed_distance(Vec3 x) const;

private:
  double R_, rho_;
};

class SphereSurface final : public Surface3D {
public:
  explicit SphereSurface(double radius) : R_(radius) {}
  void taylor(double s0, double t0, std::array<Poly2<5>, 3>& p) const override;
  Vec3 outward_hint(double s, double t) const override;
  bool analytic_closest(Vec3 x, double& s, double& t) const override;
  double area() const override;
  double radius() const { return R_; }

private:
  double R_;
};

struct ClosestPoint3D {
  double s = 0.0, t = 0.0;
  Vec3 b;
  double r = 0.0;
  int side = 0;
};

ClosestPoint3D closest_point(const Surface3D& surf, Vec3 x);

struct Frame3D {
  Vec3 b;
  Vec3 e1, e2;  // principal directions
  Vec3 m;       // inward normal
};

struct GeomJet3D {
  double r = 0.0;
  int side = 0;
  double k1 = 0.0, k2 = 0.0;  // principal curvatures, k1 >= k2; sphere: +1/R
  // graph coefficients gamma^{(m,n)}(0,0) in the principal frame
  double g30 = 0, g21 = 0, g12 = 0, g03 = 0;
  double g40 = 0, g31 = 0, g22 = 0, g13 = 0, g04 = 0;
  bool umbilic = false;
  Frame3D frame;
  double s_star = 0.0, t_star = 0.0;
  double mean() const { return 0.5 * (k1 + k2); }
  double gauss() const { return k1 * k2; }
};

GeomJet3D graph_jet(const Surface3D& surf, const ClosestPoint3D& cp, Vec3 x);

class Density3D {
public:
  virtual ~Density3D() = default;
  virtual Poly2<4> taylor(double s0, double t0) const = 0;
  double value(double s, double t) const { return taylor(s, t).at(0, 0); }
};

// a0 + sum [a cos(2 pi (ks s + kt t) ) + b sin(...)]
class TrigDensity3D final : public Density3D {
public:
  struct Mode {
    int ks, kt;
    double a, b;
  };
  TrigDensity3D(double a0, std::vector<Mode> modes) : a0_(a0), modes_(std::move(modes)) {}
  Poly2<4> taylor(double s0, double t0) const override;

private:
  double a0_;
  std::vector<Mode> modes_;
};

struct SurfDensityJet3D {
  // value and graph-frame tangential partials d^{m+n}/dw1^m dw2^n
  double v00 = 0, v10 = 0, v01 = 0, v20 = 0, v11 = 0, v02 = 0;
  double laplace_beltrami() const { return v20 + v02; }
};

SurfDensityJet3D density_graph_jet(const Surface3D& surf, const GeomJet3D& jet,
                                   const Density3D& density);

// Restriction of a trivariate field (order-4 jets) to the surface.
class FieldDensity3D final : public Density3D {
public:
  using JetFn = series::Jet3 (*)(Vec3, const void*);
  FieldDensity3D(const Surface3D& surf, JetFn fn, const void* ctx)
      : surf_(surf), fn_(fn), ctx_(ctx) {}
  Poly2<4> taylor(double s0, double t0) const override;

private:
  const Surface3D& surf_;
  JetFn fn_;
  const void* ctx_;
};

}  // namespace splitpot::geom
