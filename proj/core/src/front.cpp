#include "lkt3/front.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lkt3/diagram.hpp"
#include "lkt3/errors.hpp"

namespace lkt3 {

namespace {

struct LineTrack {
  std::vector<double> angle;  // unwrapped line angle of each chord, size N + 1
  std::vector<std::size_t> reversals;
};

LineTrack track_lines(const Front& f) {
  const std::size_t n = f.points.size();
  const Vec2 shift{double(f.period_x), double(f.period_y)};
  auto chord = [&](std::size_t i) {
    const Vec2 a = f.points[i % n] + shift * double(i / n);
    const Vec2 b = f.points[(i + 1) % n] + shift * double((i + 1) / n);
    return b - a;
  };
  LineTrack t;
  t.angle.resize(n + 1);
  Vec2 prev = chord(0);
  if (norm(prev) == 0.0) throw ValidationError("front has a zero-length chord", std::size_t(0), 0.0);
  t.angle[0] = std::atan2(prev.y, prev.x);
  for (std::size_t i = 1; i <= n; ++i) {
    const Vec2 d = chord(i);
    if (norm(d) == 0.0) throw ValidationError("front has a zero-length chord", i % n, 0.0);
    t.angle[i] = t.angle[i - 1] + wrap_half_angle(std::atan2(d.y, d.x) - t.angle[i - 1]);
    if (i < n && dot(d, prev) < 0.0) t.reversals.push_back(i);
    prev = d;
  }
  if (dot(chord(0), chord(n - 1)) < 0.0) t.reversals.insert(t.reversals.begin(), 0);
  return t;
}

// A reversal and a mark match when they are within one vertex of each other.
void check_marks(const Front& f, const std::vector<std::size_t>& reversals) {
  const long n = long(f.points.size());
  auto near = [n](std::size_t a, std::size_t b) {
    long d = std::abs(long(a) - long(b)) % n;
    return std::min(d, n - d) <= 1;
  };
  for (std::size_t m : f.cusps) {
    if (m >= f.points.size()) throw ValidationError("cusp mark out of range", m, double(m));
    if (std::none_of(reversals.begin(), reversals.end(), [&](std::size_t r) { return near(r, m); }))
      throw ValidationError("cusp mark where the planar speed does not vanish", m, 0.0);
  }
  for (std::size_t r : reversals) {
    if (std::none_of(f.cusps.begin(), f.cusps.end(), [&](std::size_t m) { return near(r, m); }))
      throw ValidationError("front reverses direction at an unmarked vertex", r, 0.0);
  }
}

}  // namespace

LegendrianCurve reconstruct_from_front(const Front& front, const ContactTorus& contact, double z0, int period_z) {
  const std::size_t n = front.points.size();
  if (n < 3) throw ValidationError("front needs at least 3 points", std::nullopt, double(n));
  const LineTrack lines = track_lines(front);
  check_marks(front, lines.reversals);

  const double two_pi_n = kTwoPi * contact.n();
  const double turning = lines.angle[n] - lines.angle[0];
  const double gap = (turning - two_pi_n * period_z) / kPi;
  const long igap = std::lround(gap);
  if (igap != 0 || std::abs(gap - double(igap)) > 0.25)
    throw ValidationError("front turning does not match period_z; integer gap " + std::to_string(igap),
                          std::nullopt, gap);

  // z = (L - pi/2 + k pi) / (2 pi n); k has the requested parity and lands nearest to z0.
  const double base = (lines.angle[0] - kPi / 2) / two_pi_n;
  const double step = kPi / two_pi_n;
  const int parity = ((front.initial_branch % 2) + 2) % 2;
  double k = std::round((z0 - base) / step);
  if (((long(k) % 2) + 2) % 2 != parity) k += (z0 - base) / step > k ? 1.0 : -1.0;
  const double offset = k * step - lines.angle[0] / two_pi_n + base;

  std::vector<double> zseg(n);
  for (std::size_t i = 0; i < n; ++i) zseg[i] = lines.angle[i] / two_pi_n + offset;

  LegendrianCurve c;
  c.ambient = Ambient::T3;
  c.contact = contact;
  c.period = {front.period_x, front.period_y, period_z};
  c.samples.resize(n);
  // Chord heights on the lift, then vertex heights whose pairwise means
  // reproduce them up to fourth order.
  auto seg = [&](long i) {
    const long k = ((i % long(n)) + long(n)) % long(n);
    return zseg[std::size_t(k)] + double(period_z) * double((i - k) / long(n));
  };
  auto d2 = [&](long i) { return seg(i - 1) - 2.0 * seg(i) + seg(i + 1); };
  for (std::size_t i = 0; i < n; ++i) {
    const long k = long(i);
    const double z = 0.5 * (seg(k - 1) + seg(k)) - (d2(k - 1) + d2(k)) / 8.0;
    c.samples[i] = {front.points[i].x, front.points[i].y, z};
  }
  return c;
}

LegendrianCurve reconstruct_from_front(const Front& front, const ContactTorus& contact) {
  return reconstruct_from_front(front, contact, front.z0, front.period_z);
}

Front extract_front(const LegendrianCurve& curve, const Tolerances& tol) {
  if (curve.ambient != Ambient::T3) throw PreconditionError("fronts on T^2 need a T3 curve");
  Front f;
  const std::size_t n = curve.size();
  f.points.reserve(n);
  for (const Vec3& s : curve.samples) f.points.push_back({s.x, s.y});
  f.period_x = curve.period.p;
  f.period_y = curve.period.q;
  f.period_z = curve.period.r;
  f.z0 = curve.samples[0].z;
  for (const Cusp& c : find_cusps(curve, Plane::XY, tol)) f.cusps.push_back(std::size_t(std::lround(c.t * n)) % n);

  // Branch parity of the first chord: its z is (L - pi/2 + k pi) / (2 pi n).
  const Vec3 d = curve.lifted(1) - curve.lifted(0);
  const double L = std::atan2(d.y, d.x);
  const double zmid = 0.5 * (curve.lifted(0).z + curve.lifted(1).z);
  const double k = std::round((zmid * kTwoPi * curve.contact.n() - L + kPi / 2) / kPi);
  f.initial_branch = int(((long(k) % 2) + 2) % 2);
  return f;
}

}  // namespace lkt3
