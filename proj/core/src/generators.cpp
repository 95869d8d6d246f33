#include "lkt3/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

#include "lkt3/errors.hpp"
#include "lkt3/front.hpp"
#include "lkt3/genericity.hpp"

namespace lkt3 {

namespace {

void require_samples(int samples) {
  if (samples < 16) throw PreconditionError("generators need at least 16 samples");
}

LegendrianCurve linear_knot(const QuasilinearSpec& s) {
  const double phi0 = std::atan2(-double(s.p), double(s.q));
  double z0 = phi0 / (kTwoPi * s.n);
  z0 -= std::floor(z0);
  // Constant z makes the xz shadow cover its circle |p| times. A z oscillation
  // odd about t = 1/2 keeps the chords in xi and averages the phase drift out.
  const double swing = std::abs(s.p) > 1 ? 0.3 : 0.0;
  const int N = s.samples;
  auto z_at = [&](int i) { return z0 + swing / (kTwoPi * s.n) * std::sin(kTwoPi * i / N); };
  auto drift = [&](int i) { return kTwoPi * s.n * 0.5 * (z_at(i) + z_at(i + 1)) - phi0; };
  double along = 0.0;
  for (int i = 0; i < N; ++i) along += std::cos(drift(i));
  const Vec2 dir{double(s.p), double(s.q)};
  const double step = 1.0 / along;  // chord length in units of |(p, q)|

  LegendrianCurve c;
  c.contact = ContactTorus(s.n);
  c.period = {s.p, s.q, 0};
  c.samples.resize(std::size_t(N));
  Vec2 pos{0.5, 0.5};
  const Vec2 side{-dir.y, dir.x};
  for (int i = 0; i < N; ++i) {
    c.samples[std::size_t(i)] = {pos.x, pos.y, z_at(i)};
    const double d = drift(i);
    pos = pos + (dir * std::cos(d) + side * std::sin(d)) * step;
  }
  return c;
}

// Closed R^3 front x = X(theta), y = g(theta), z = int g X' over K turns of theta.
struct FourierFront {
  int K = 1;
  std::array<double, 7> ax{}, bx{}, ag{}, bg{};
  double scale = 1.0;
};

LegendrianCurve fourier_front(const FourierFront& f, int samples) {
  const double K = f.K;
  auto X = [&](double th) {
    double v = -std::cos(th);
    for (int j = 1; j < 7; ++j) v += f.ax[j] * std::cos(j * th / K) + f.bx[j] * std::sin(j * th / K);
    return v;
  };
  auto dX = [&](double th) {
    double v = std::sin(th);
    for (int j = 1; j < 7; ++j) v += (j / K) * (f.bx[j] * std::cos(j * th / K) - f.ax[j] * std::sin(j * th / K));
    return v;
  };
  auto g0 = [&](double th) {
    double v = 0.0;
    for (int j = 0; j < 7; ++j) v += f.ag[j] * std::cos(j * th / K) + f.bg[j] * std::sin(j * th / K);
    return v;
  };
  const double h = kTwoPi * K / samples;
  std::vector<double> x(std::size_t(samples) + 1), g(x.size()), u(x.size());
  for (int i = 0; i <= samples; ++i) {
    x[std::size_t(i)] = X(i * h);
    g[std::size_t(i)] = g0(i * h);
    u[std::size_t(i)] = dX(i * h);
  }
  // Chords satisfy dz = y dx exactly at their midpoints; lambda closes z.
  double gx = 0.0;
  double ux = 0.0;
  for (std::size_t i = 0; i < std::size_t(samples); ++i) {
    const double dx = x[i + 1] - x[i];
    gx += 0.5 * (g[i] + g[i + 1]) * dx;
    ux += 0.5 * (u[i] + u[i + 1]) * dx;
  }
  const double lambda = -gx / ux;

  LegendrianCurve c;
  c.ambient = Ambient::R3;
  c.samples.resize(std::size_t(samples));
  double z = 0.0;
  for (std::size_t i = 0; i < std::size_t(samples); ++i) {
    const double y0 = g[i] + lambda * u[i];
    const double y1 = g[i + 1] + lambda * u[i + 1];
    c.samples[i] = {x[i], f.scale * y0, f.scale * z};
    z += 0.5 * (y0 + y1) * (x[i + 1] - x[i]);
  }
  return c;
}

}  // namespace

LegendrianCurve quasilinear(const QuasilinearSpec& s) {
  if (s.p == 0 && s.q == 0 && s.r == 0) throw PreconditionError("quasilinear needs a nonzero period");
  if (s.n < 1) throw PreconditionError("n must be positive");
  require_samples(s.samples);
  if (!(s.smoothing > 0.0 && s.smoothing < 0.5))
    throw PreconditionError("smoothing must lie in (0, 0.5); larger values lose monotonicity of z");
  const Period period{s.p, s.q, s.r};

  LegendrianCurve c;
  if (s.r == 0) {
    c = linear_knot(s);
  } else {
    const double omega = kTwoPi * s.n * s.r;
    const double base = std::abs(omega) * s.smoothing;
    const int turns = s.n * std::abs(s.r);
    // With several turns the planar and xz shadows of successive turns can coincide.
    const double wobble = turns > 1 ? 0.5 * base : 0.0;
    const double freq = kTwoPi * (turns + 1);
    const double h = 1.0 / s.samples;
    auto chord = [&](double t) {
      const double phi = omega * t;
      const double sigma = base + 2.0 * s.q * std::cos(phi) - 2.0 * s.p * std::sin(phi) + wobble * std::cos(freq * t + 0.7);
      return Vec2{-std::sin(phi), std::cos(phi)} * (sigma * h);
    };
    Vec2 pos{0.5 + s.smoothing * (s.r > 0 ? 1.0 : -1.0), 0.5};
    c.contact = ContactTorus(s.n);
    c.period = period;
    c.samples.resize(std::size_t(s.samples));
    // Each chord lies in the contact plane at its midpoint height, so the
    // defect vanishes up to rounding; discrete orthogonality closes the sum.
    for (int i = 0; i < s.samples; ++i) {
      c.samples[std::size_t(i)] = {pos.x, pos.y, s.r * i * h};
      pos = pos + chord((i + 0.5) * h);
    }
  }
  c.meta.generator = "quasilinear";
  c.meta.params = {{"p", s.p}, {"q", s.q}, {"r", s.r}, {"n", s.n}, {"smoothing", s.smoothing}};
  validate_curve(c);
  return c;
}

LegendrianCurve r3_unknot(int samples) {
  require_samples(samples);
  // x = -cos, slope 0.75 sin 2 theta, so z = 0.5 sin^3 theta.
  FourierFront f;
  f.bg[2] = 0.75;
  LegendrianCurve c = fourier_front(f, samples);
  c.meta.generator = "r3_unknot";
  validate_curve(c);
  return c;
}

LegendrianCurve r3_trefoil(int sign, int samples) {
  require_samples(samples);
  if (sign == 0) throw PreconditionError("trefoil sign must be nonzero");
  FourierFront f;
  if (sign > 0) {
    f.K = 2;
    f.ax = {0.3997, -0.3536, -0.0314, -0.1754, -0.0261, 0.0372, -0.0408};
    f.bx = {0.3107, -0.144, 0.074, -0.0117, 0.2701, 0.0845, 0.0063};
    f.ag = {-0.6622, 0.7772, 0.3989, 0.8595, 0.6979, -0.4178, 0.5886};
    f.bg = {0.7398, -0.5849, 0.639, 0.2805, 0.8988, 0.3707, -1.1734};
  } else {
    f.K = 3;
    f.ax = {0.2175, 0.358, 0.5457, -0.1953, -0.1662, -0.0291, -0.2594};
    f.bx = {-0.0958, -0.2706, -0.6459, -0.7171, 0.2692, -0.3361, 0.0601};
    f.ag = {1.3001, -0.2928, -1.1452, -0.9832, 1.2152, -0.5766, 1.669};
    f.bg = {1.0376, 0.2912, -2.5336, -1.3188, 1.0255, 1.1858, -0.2755};
    f.scale = 0.3;
  }
  LegendrianCurve c = fourier_front(f, samples);
  c.meta.generator = "r3_trefoil";
  c.meta.params = {{"sign", sign > 0 ? 1.0 : -1.0}};
  validate_curve(c);
  return c;
}

LegendrianCurve contractible_loop(double scale, int n, double rotation, int samples) {
  if (!(scale > 0.0 && scale < 0.8)) throw PreconditionError("contractible loop scale must lie in (0, 0.8)");
  if (n < 1) throw PreconditionError("n must be positive");
  require_samples(samples);
  if (samples % 2 != 0) throw PreconditionError("contractible loop needs an even sample count");
  constexpr double amplitude = 0.6;

  // At the cusps the line angle is `rotation`, so 2nz there is (rotation - pi/2) / pi mod 1.
  auto conflict = [](double rot) {
    const double v = (rot - kPi / 2) / kPi;
    return std::abs(v - std::round(v)) < 0.05;
  };
  while (conflict(rotation)) rotation += 0.1 * kPi;

  // theta is offset from the grid so no double point of the xz shadow lands on a vertex.
  const double h = kTwoPi / samples;
  auto theta = [&](double i) { return (i + 0.3) * h; };
  auto line = [&](double th) { return amplitude * std::sin(2.0 * th) + rotation; };
  std::vector<Vec2> pts(static_cast<std::size_t>(samples));
  Vec2 pos{0.0, 0.0};
  for (int i = 0; i < samples; ++i) {
    pts[std::size_t(i)] = pos;
    const double L = 0.5 * (line(theta(i)) + line(theta(i + 1)));
    pos = pos + Vec2{std::cos(L), std::sin(L)} * (h * std::sin(theta(i + 0.5)));
  }
  Vec2 lo = pts[0], hi = pts[0];
  for (const Vec2& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const double k = scale / std::max(hi.x - lo.x, hi.y - lo.y);
  const Vec2 centre = (lo + hi) * 0.5;

  // z = (L - pi/2 + j pi) / (2 pi n) with j chosen to centre the loop near z = 1/2.
  const double j = std::round(n + 0.5 - rotation / kPi);
  LegendrianCurve c;
  c.contact = ContactTorus(n);
  c.samples.resize(pts.size());
  for (int i = 0; i < samples; ++i) {
    const Vec2 p = Vec2{0.5, 0.5} + (pts[std::size_t(i)] - centre) * k;
    c.samples[std::size_t(i)] = {p.x, p.y, (line(theta(i)) - kPi / 2 + j * kPi) / (kTwoPi * n)};
  }
  c.meta.generator = "contractible_loop";
  c.meta.params = {{"scale", scale}, {"n", n}, {"rotation", rotation}};
  validate_curve(c);
  return c;
}

LegendrianCurve perturb_front(const LegendrianCurve& curve, std::uint64_t seed, double magnitude,
                              const Tolerances& tol) {
  if (curve.ambient != Ambient::T3) throw PreconditionError("perturb_front needs a T3 curve");
  if (!(magnitude >= 0.0)) throw PreconditionError("perturbation magnitude must be non-negative");
  const GenericityReport before = check_genericity(curve, tol);
  if (!before.ok()) throw GenericityError("input curve is not generic");
  if (magnitude > before.worst_margin)
    throw GenericityError("magnitude " + std::to_string(magnitude) + " exceeds the genericity margin " +
                          std::to_string(before.worst_margin));

  struct Mode {
    int kx, ky;
    Vec2 amp;
    double phase;
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> freq(-2, 2);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Mode> modes;
  double bound = 0.0;
  while (modes.size() < 6) {
    Mode m{freq(rng), freq(rng), {unit(rng), unit(rng)}, kPi * unit(rng)};
    if (m.kx == 0 && m.ky == 0) continue;
    bound += norm(m.amp);
    modes.push_back(m);
  }
  auto field = [&](const Vec2& p) {
    Vec2 b{0.0, 0.0};
    for (const Mode& m : modes) b = b + m.amp * std::cos(kTwoPi * (m.kx * p.x + m.ky * p.y) + m.phase);
    return b * (1.0 / bound);
  };

  Front front = extract_front(curve, tol);
  for (Vec2& p : front.points) p = p + field(p) * magnitude;
  LegendrianCurve out = reconstruct_from_front(front, curve.contact);
  out.orientation = curve.orientation;
  out.meta = curve.meta;
  out.meta.params["perturb_seed"] = double(seed % (std::uint64_t(1) << 52));
  out.meta.params["perturb_magnitude"] = magnitude;
  validate_curve(out, tol);
  const GenericityReport after = check_genericity(out, tol);
  if (!after.ok()) throw GenericityError("perturbation destroyed genericity; retry with a smaller magnitude");
  return out;
}

}  // namespace lkt3
