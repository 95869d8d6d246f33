#include "lkt3/spline.hpp"

#include <cmath>

namespace lkt3 {

CurveSpline::CurveSpline(const LegendrianCurve& curve) : curve_(&curve), n_(long(curve.size())) {}

void CurveSpline::locate(double t, long& i, double& u) const {
  const double s = t * double(n_);
  const double f = std::floor(s);
  i = long(f);
  u = s - f;
}

Vec3 CurveSpline::position(double t) const {
  long i;
  double u;
  locate(t, i, u);
  const Vec3 p0 = curve_->lifted(i);
  const Vec3 p1 = curve_->lifted(i + 1);
  const Vec3 m0 = (p1 - curve_->lifted(i - 1)) * 0.5;
  const Vec3 m1 = (curve_->lifted(i + 2) - p0) * 0.5;
  const double u2 = u * u, u3 = u2 * u;
  return p0 * (2 * u3 - 3 * u2 + 1) + m0 * (u3 - 2 * u2 + u) + p1 * (-2 * u3 + 3 * u2) + m1 * (u3 - u2);
}

Vec3 CurveSpline::velocity(double t) const {
  long i;
  double u;
  locate(t, i, u);
  const Vec3 p0 = curve_->lifted(i);
  const Vec3 p1 = curve_->lifted(i + 1);
  const Vec3 m0 = (p1 - curve_->lifted(i - 1)) * 0.5;
  const Vec3 m1 = (curve_->lifted(i + 2) - p0) * 0.5;
  const double u2 = u * u;
  const Vec3 d = p0 * (6 * u2 - 6 * u) + m0 * (3 * u2 - 4 * u + 1) + p1 * (-6 * u2 + 6 * u) + m1 * (3 * u2 - 2 * u);
  return d * double(n_);
}

}  // namespace lkt3
