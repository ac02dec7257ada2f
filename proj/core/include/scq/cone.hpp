#pragma once

namespace scq {

/// Hyperbolic cone of radius rho over a circle of the given circumference.
struct ConeParams {
  double rho = 1.0;
  double circumference = 1.0;
};

/// Point (arc, r): arc position along the base circle (length units), radial
/// coordinate r in [0, rho]; r == 0 is the apex regardless of arc.
struct ConePoint {
  double arc = 0.0;
  double r = 0.0;
};

/// Comparison map: cosh mu(t) = cosh^2 rho - sinh^2 rho * cos(min(pi, t/sinh rho)),
/// with exact saturation mu(t) = 2 rho for t >= pi sinh rho.
double mu(double t, double rho);

/// Law-of-cosines distance in the cone; the base distance is the arc distance
/// on the circle.  Throws if a radial coordinate is outside [0, rho].
double cone_dist(const ConePoint& x, const ConePoint& y, const ConeParams& params);

struct ComparisonCone {
  ConeParams params;     // circumference = n * ell0
  double omega = 0.0;    // total apex angle n * ell0 / sinh rho
  bool sc_regime = false;  // omega > 10 pi
};

/// The comparison cone over a circle of perimeter n * ell0 with its total
/// apex angle.  Throws when n == 0.
ComparisonCone comparison_cone(int n, double ell0, double rho);

/// Displacement of x under the D_n rotation by k sectors.
double rotation_displacement(const ConePoint& x, int k, int n, const ConeParams& params);

}  // namespace scq
