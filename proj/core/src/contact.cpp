#include "lkt3/contact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lkt3/errors.hpp"

namespace lkt3 {

const char* to_string(Ambient a) { return a == Ambient::T3 ? "T3" : "R3"; }

ContactTorus::ContactTorus(int n) : n_(n) {
  if (n < 1) throw PreconditionError("contact parameter n must be >= 1, got " + std::to_string(n));
}

double ContactTorus::omega(const Vec3& point, const Vec3& v) const {
  const double a = phase(point.z);
  return std::cos(a) * v.x + std::sin(a) * v.y;
}

Frame contact_frame(const ContactTorus& contact, const Vec3& point) {
  const double a = contact.phase(point.z);
  const double c = std::cos(a);
  const double s = std::sin(a);
  return {{c, s, 0.0}, {-s, c, 0.0}, {0.0, 0.0, 1.0}};
}

bool Period::is_primitive() const {
  return std::gcd(std::gcd(std::abs(p), std::abs(q)), std::abs(r)) == 1;
}

Vec3 LegendrianCurve::lifted(long i) const {
  const long n = long(samples.size());
  long k = i / n;
  long j = i % n;
  if (j < 0) {
    j += n;
    --k;
  }
  return samples[std::size_t(j)] + period.vec() * double(k);
}

Vec3 LegendrianCurve::velocity(long i) const {
  return (lifted(i + 1) - lifted(i - 1)) * (0.5 * double(samples.size()));
}

namespace {

double plane_defect(const LegendrianCurve& c, const Vec3& mid, const Vec3& d) {
  if (c.ambient == Ambient::R3) return std::abs(d.z - mid.y * d.x);
  return std::abs(c.contact.omega(mid, d));
}

// Distance in the quotient: T^3 reduces each coordinate difference to the nearest image.
double quotient_distance(Ambient a, Vec3 d) {
  if (a == Ambient::T3) {
    d.x -= std::round(d.x);
    d.y -= std::round(d.y);
    d.z -= std::round(d.z);
  }
  return norm(d);
}

}  // namespace

DefectMeasurement measure_defect(const LegendrianCurve& curve) {
  if (curve.size() < 3) throw ValidationError("curve needs at least 3 samples", std::nullopt, double(curve.size()));
  DefectMeasurement worst;
  const long n = long(curve.size());
  for (long i = 0; i < n; ++i) {
    const Vec3 a = curve.lifted(i);
    const Vec3 b = curve.lifted(i + 1);
    const Vec3 d = b - a;
    const double len = norm(d);
    if (len == 0.0) throw ValidationError("degenerate zero-length segment", std::size_t(i), 0.0);
    const double v = plane_defect(curve, (a + b) * 0.5, d) / len;
    if (v > worst.value) worst = {v, std::size_t(i)};
  }
  return worst;
}

double legendrian_defect(const LegendrianCurve& curve) { return measure_defect(curve).value; }

void validate_curve(const LegendrianCurve& curve, const Tolerances& tol) {
  const long n = long(curve.size());
  if (n < 3) throw ValidationError("curve needs at least 3 samples", std::nullopt, double(n));
  if (curve.orientation != 1 && curve.orientation != -1)
    throw ValidationError("orientation must be +1 or -1", std::nullopt, curve.orientation);
  if (curve.ambient == Ambient::R3 && !curve.period.is_zero())
    throw ValidationError("R3 curves must have period (0,0,0)", std::nullopt, 0.0);

  double max_seg = 0.0;
  for (long i = 0; i + 1 < n; ++i) max_seg = std::max(max_seg, norm(curve.samples[i + 1] - curve.samples[i]));
  const double gap = norm(curve.lifted(n) - curve.samples[std::size_t(n - 1)]);
  if (gap > 3.0 * max_seg + tol.embedding)
    throw ValidationError("closure: last sample does not continue to first sample plus period",
                          std::size_t(n - 1), gap);

  const DefectMeasurement d = measure_defect(curve);
  if (d.value > tol.defect)
    throw ValidationError("Legendrian defect above tolerance", d.index, d.value);

  for (long i = 0; i < n; ++i) {
    for (long j = i + 3; j < n; ++j) {
      if (i + n - j <= 2) continue;  // cyclic neighbours
      const double dist = quotient_distance(curve.ambient, curve.samples[std::size_t(j)] - curve.samples[std::size_t(i)]);
      if (dist <= tol.embedding)
        throw ValidationError("embedding: samples " + std::to_string(i) + " and " + std::to_string(j) + " coincide",
                              std::size_t(j), dist);
    }
  }
}

LegendrianCurve reverse_orientation(const LegendrianCurve& curve) {
  LegendrianCurve out = curve;
  const long n = long(curve.size());
  for (long k = 1; k < n; ++k) out.samples[std::size_t(k)] = curve.lifted(-k);
  out.period = -curve.period;
  out.orientation = -curve.orientation;
  return out;
}

LegendrianCurve rotate_start(const LegendrianCurve& curve, long k) {
  LegendrianCurve out = curve;
  const long n = long(curve.size());
  for (long i = 0; i < n; ++i) out.samples[std::size_t(i)] = curve.lifted(i + k);
  return out;
}

}  // namespace lkt3
