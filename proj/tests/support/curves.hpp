#pragma once

#include <cmath>
#include <functional>

#include "lkt3/contact.hpp"

namespace lkt3::testing {

/// Samples f(i / N) for i < N as a T^3 curve with the given period.
inline LegendrianCurve sampled(int n, Period period, int N, const std::function<Vec3(double)>& f) {
  LegendrianCurve c;
  c.contact = ContactTorus(n);
  c.period = period;
  for (int i = 0; i < N; ++i) c.samples.push_back(f(double(i) / N));
  return c;
}

inline LegendrianCurve vertical_line(int N = 512) {
  return sampled(1, {0, 0, 1}, N, [](double t) { return Vec3{0.5, 0.5, t}; });
}

/// Planar circle of the given radius traced at angle 2 pi n t while z = t.
inline LegendrianCurve hand_helix(int n = 1, double radius = 0.1, int N = 512, double angle_rate = 1.0) {
  return sampled(n, {0, 0, 1}, N, [=](double t) {
    const double a = kTwoPi * n * angle_rate * t;
    return Vec3{0.5 + radius * std::cos(a), 0.5 + radius * std::sin(a), t};
  });
}

/// (p t, q t, z0) with (p, q) orthogonal to the co-orienting normal at z0.
inline LegendrianCurve hand_linear(int p, int q, int n = 1, int N = 512) {
  double z0 = std::atan2(-double(p), double(q)) / (kTwoPi * n);
  z0 -= std::floor(z0);
  return sampled(n, {p, q, 0}, N, [=](double t) { return Vec3{0.5 + p * t, 0.5 + q * t, z0}; });
}

/// Rotates a contractible curve about (1/2, 1/2) by beta and lifts z by
/// beta / (2 pi n); the pair preserves xi_n.
inline LegendrianCurve turned_loop(LegendrianCurve c, double beta) {
  const double cb = std::cos(beta), sb = std::sin(beta);
  for (Vec3& s : c.samples) {
    const double x = s.x - 0.5, y = s.y - 0.5;
    s = {0.5 + cb * x - sb * y, 0.5 + sb * x + cb * y, s.z + beta / (kTwoPi * c.contact.n())};
  }
  return c;
}

}  // namespace lkt3::testing
