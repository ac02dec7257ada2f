#include "scq/cone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scq {

namespace {
constexpr double kPi = std::numbers::pi;
}

double mu(double t, double rho) {
  if (t < 0) throw std::invalid_argument("mu: t < 0");
  double sh = std::sinh(rho);
  if (t >= kPi * sh) return 2.0 * rho;
  // half-angle form of the hyperbolic law of cosines: exact at both endpoints
  return 2.0 * std::asinh(sh * std::sin(0.5 * t / sh));
}

double cone_dist(const ConePoint& x, const ConePoint& y, const ConeParams& params) {
  if (x.r < 0 || x.r > params.rho || y.r < 0 || y.r > params.rho)
    throw std::invalid_argument("cone_dist: radial coordinate outside [0, rho]");
  double da = std::fabs(x.arc - y.arc);
  da = std::fmod(da, params.circumference);
  double dy = std::min(da, params.circumference - da);
  double theta = std::min(kPi, dy / std::sinh(params.rho));
  // cosh d = cosh(r-r') + sinh r sinh r' (1 - cos theta), via sinh(d/2)
  double sr = std::sinh(0.5 * (x.r - y.r)), st = std::sin(0.5 * theta);
  double h = sr * sr + std::sinh(x.r) * std::sinh(y.r) * st * st;
  return 2.0 * std::asinh(std::sqrt(std::max(0.0, h)));
}

ComparisonCone comparison_cone(int n, double ell0, double rho) {
  if (n < 1) throw std::invalid_argument("comparison_cone: n must be positive");
  if (ell0 <= 0) throw std::invalid_argument("comparison_cone: ell0 must be positive");
  ComparisonCone d;
  d.params.rho = rho;
  d.params.circumference = n * ell0;
  d.omega = n * ell0 / std::sinh(rho);
  d.sc_regime = d.omega > 10.0 * kPi;
  return d;
}

double rotation_displacement(const ConePoint& x, int k, int n, const ConeParams& params) {
  ConePoint y = x;
  y.arc = x.arc + k * params.circumference / n;
  return cone_dist(x, y, params);
}

}  // namespace scq
