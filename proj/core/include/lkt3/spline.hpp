#pragma once

#include "lkt3/contact.hpp"

namespace lkt3 {

/// C^1 periodic cubic Hermite interpolant of the lifted samples. Tangents are
/// centered differences, so velocity() agrees with LegendrianCurve::velocity
/// at the nodes. Parameters outside [0, 1) continue along the lift.
class CurveSpline {
 public:
  explicit CurveSpline(const LegendrianCurve& curve);

  Vec3 position(double t) const;
  Vec3 velocity(double t) const;

 private:
  void locate(double t, long& i, double& u) const;

  const LegendrianCurve* curve_;
  long n_;
};

/// Finds a sign change of f on [a, b] by bisection. Requires f(a) * f(b) <= 0.
template <class F>
double bisect_root(F&& f, double a, double b, double tol) {
  double fa = f(a);
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fa <= 0.0 && fm <= 0.0) || (fa >= 0.0 && fm >= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace lkt3
