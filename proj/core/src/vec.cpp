#include "lkt3/vec.hpp"

namespace lkt3 {

Vec2 normalized(const Vec2& a) {
  const double n = norm(a);
  return n > 0.0 ? a * (1.0 / n) : Vec2{};
}

Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  return n > 0.0 ? a * (1.0 / n) : Vec3{};
}

double wrap_angle(double a) {
  a = std::remainder(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  return a;
}

double wrap_half_angle(double a) {
  a = std::remainder(a, kPi);
  if (a <= -kPi / 2) a += kPi;
  return a;
}

}  // namespace lkt3
