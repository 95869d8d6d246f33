#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lkt3::testing {

namespace {

struct P2 {
  double u, v;
};

bool torus_plane(Plane p) { return p == Plane::XY || p == Plane::XZ; }

// (u, v, height) of a point; the xz-type planes read (z, x) with y as height.
void coords(Plane p, const Vec3& a, P2& uv, double& h) {
  if (p == Plane::XY || p == Plane::R3Lagrangian) {
    uv = {a.x, a.y};
    h = a.z;
  } else {
    uv = {a.z, a.x};
    h = a.y;
  }
}

double cyc(double a, double b, double n) {
  const double d = std::fmod(std::abs(a - b), n);
  return std::min(d, n - d);
}

}  // namespace

std::vector<OracleCrossing> brute_force_crossings(const LegendrianCurve& c, Plane plane) {
  const long n = long(c.size());
  std::vector<P2> pt(std::size_t(n + 1));
  std::vector<double> ht(std::size_t(n + 1));
  for (long i = 0; i <= n; ++i) {
    const Vec3 s = i < n ? c.samples[std::size_t(i)] : c.samples[0] + c.period.vec();
    coords(plane, s, pt[std::size_t(i)], ht[std::size_t(i)]);
  }
  const bool torus = torus_plane(plane);

  struct Hit {
    double a, b;  // segment-unit parameters i + s, j + u
    P2 da, db;
  };
  std::vector<Hit> hits;
  for (long i = 0; i < n; ++i) {
    const P2 a0 = pt[std::size_t(i)], a1 = pt[std::size_t(i + 1)];
    for (long j = i; j < n; ++j) {
      const P2 b0 = pt[std::size_t(j)], b1 = pt[std::size_t(j + 1)];
      int klo = 0, khi = 0, llo = 0, lhi = 0;
      if (torus) {
        klo = int(std::floor(std::min(a0.u, a1.u) - std::max(b0.u, b1.u))) - 1;
        khi = int(std::ceil(std::max(a0.u, a1.u) - std::min(b0.u, b1.u))) + 1;
        llo = int(std::floor(std::min(a0.v, a1.v) - std::max(b0.v, b1.v))) - 1;
        lhi = int(std::ceil(std::max(a0.v, a1.v) - std::min(b0.v, b1.v))) + 1;
      }
      for (int k = klo; k <= khi; ++k)
        for (int l = llo; l <= lhi; ++l) {
          // A chord against its own translate: keep one of the offsets +-(k, l).
          if (i == j && (k < 0 || (k == 0 && l <= 0))) continue;
          const P2 c0{b0.u + k, b0.v + l}, c1{b1.u + k, b1.v + l};
          const double ru = a1.u - a0.u, rv = a1.v - a0.v;
          const double su = c1.u - c0.u, sv = c1.v - c0.v;
          const double den = ru * sv - rv * su;
          if (den == 0.0) continue;
          const double qu = c0.u - a0.u, qv = c0.v - a0.v;
          const double s = (qu * sv - qv * su) / den;
          const double u = (qu * rv - qv * ru) / den;
          if (s < 0.0 || s >= 1.0 || u < 0.0 || u >= 1.0) continue;
          hits.push_back({double(i) + s, double(j) + u, {ru, rv}, {su, sv}});
        }
    }
  }

  std::vector<OracleCrossing> out;
  const double dn = double(n);
  for (std::size_t x = 0; x < hits.size(); ++x) {
    const Hit& h = hits[x];
    // The same parameter on both sides is a shared vertex of neighbouring chords.
    if (cyc(h.a, h.b, dn) < 1e-7) continue;
    bool dup = false;
    for (std::size_t y = 0; y < x && !dup; ++y)
      dup = (cyc(hits[y].a, h.a, dn) < 1e-7 && cyc(hits[y].b, h.b, dn) < 1e-7) ||
            (cyc(hits[y].a, h.b, dn) < 1e-7 && cyc(hits[y].b, h.a, dn) < 1e-7);
    if (dup) continue;

    auto height = [&](double s) {
      const long i = long(std::floor(s));
      const double w = s - double(i);
      return (1.0 - w) * ht[std::size_t(i)] + w * ht[std::size_t(i + 1)];
    };
    const bool first_over = height(h.a) > height(h.b);
    const P2 o = first_over ? h.da : h.db, un = first_over ? h.db : h.da;
    OracleCrossing oc;
    oc.t_over = (first_over ? h.a : h.b) / dn;
    oc.t_under = (first_over ? h.b : h.a) / dn;
    oc.sign = o.u * un.v - o.v * un.u > 0.0 ? 1 : -1;
    out.push_back(oc);
  }
  return out;
}

std::string compare_crossings(const std::vector<Crossing>& found, const std::vector<OracleCrossing>& expected,
                              double eps) {
  std::ostringstream os;
  if (found.size() != expected.size()) {
    os << "count " << found.size() << " vs oracle " << expected.size();
    return os.str();
  }
  std::vector<bool> used(expected.size(), false);
  for (const Crossing& f : found) {
    bool matched = false;
    for (std::size_t k = 0; k < expected.size() && !matched; ++k) {
      const OracleCrossing& e = expected[k];
      if (used[k] || e.sign != f.sign) continue;
      if (cyc(e.t_over, f.t_over, 1.0) < eps && cyc(e.t_under, f.t_under, 1.0) < eps) used[k] = matched = true;
    }
    if (!matched) {
      os << "crossing (" << f.t_over << ", " << f.t_under << ", sign " << f.sign << ") has no oracle partner";
      return os.str();
    }
  }
  return {};
}

}  // namespace lkt3::testing
