#include "lkt3/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lkt3/errors.hpp"
#include "lkt3/spline.hpp"

namespace lkt3 {

const char* to_string(Plane p) {
  switch (p) {
    case Plane::XY: return "xy";
    case Plane::XZ: return "xz";
    case Plane::R3Front: return "r3_front";
    case Plane::R3Lagrangian: return "r3_lagrangian";
  }
  return "?";
}

Plane plane_from_string(const std::string& s) {
  if (s == "xy") return Plane::XY;
  if (s == "xz") return Plane::XZ;
  if (s == "r3_front" || s == "front") return Plane::R3Front;
  if (s == "r3_lagrangian" || s == "lagrangian") return Plane::R3Lagrangian;
  throw PreconditionError("unknown plane '" + s + "'");
}

Vec2 PlaneMap::uv(const Vec3& p) const {
  switch (plane) {
    case Plane::XY:
    case Plane::R3Lagrangian: return {p.x, p.y};
    case Plane::XZ:
    case Plane::R3Front: return {p.z, p.x};
  }
  return {};
}

double PlaneMap::height(const Vec3& p) const {
  return plane == Plane::XY || plane == Plane::R3Lagrangian ? p.z : p.y;
}

Vec2 PlaneMap::display(const Vec3& p) const {
  return plane == Plane::XY || plane == Plane::R3Lagrangian ? Vec2{p.x, p.y} : Vec2{p.x, p.z};
}

PlaneMap plane_map(Plane plane) {
  const bool torus = plane == Plane::XY || plane == Plane::XZ;
  return {plane, torus ? Lattice::Torus : Lattice::None};
}

Tallies Diagram::count() const {
  Tallies t;
  for (const Crossing& c : crossings) (c.sign > 0 ? t.P : t.N)++;
  t.C = int(cusps.size());
  for (const Cusp& c : cusps) {
    if (c.sign > 0) ++t.C_plus;
    if (c.sign < 0) ++t.C_minus;
    if (c.updown == CuspKind::Up) ++t.C_up;
    if (c.updown == CuspKind::Down) ++t.C_down;
  }
  return t;
}

namespace {

void require_compatible(const LegendrianCurve& c, Plane p) {
  const bool t3 = p == Plane::XY || p == Plane::XZ;
  if (t3 != (c.ambient == Ambient::T3))
    throw PreconditionError(std::string("plane ") + to_string(p) + " is not available for ambient " +
                            to_string(c.ambient));
}

double wrap01(double t) {
  t -= std::floor(t);
  return t >= 1.0 ? 0.0 : t;
}

Vec2 reduce(Vec2 p, Lattice l) {
  if (l == Lattice::Torus) return {p.x - std::floor(p.x), p.y - std::floor(p.y)};
  return p;
}

Vec2 uv_to_display(Plane p, Vec2 uv) {
  return p == Plane::XY || p == Plane::R3Lagrangian ? uv : Vec2{uv.y, uv.x};
}

// Height along the lifted polyline, linear within a segment.
double chord_height(const LegendrianCurve& c, const PlaneMap& m, double t) {
  const double s = t * double(c.size());
  const double f = std::floor(s);
  const long i = long(f);
  const double w = s - f;
  return (1.0 - w) * m.height(c.lifted(i)) + w * m.height(c.lifted(i + 1));
}

PolylineLoop loop_of(const LegendrianCurve& c, const PlaneMap& m) {
  PolylineLoop l;
  l.lattice = m.lattice;
  l.points.reserve(c.size());
  for (const Vec3& s : c.samples) l.points.push_back(m.uv(s));
  l.shift = m.uv(c.period.vec());
  return l;
}

// Index of a sample run where the planar speed vanishes, if any.
std::optional<long> flat_run(const LegendrianCurve& c, const PlaneMap& m) {
  const long n = long(c.size());
  long run = 0;
  for (long i = 0; i < n + 2; ++i) {
    const Vec3 v = c.velocity(i);
    if (norm(m.uv(v)) <= 1e-9 * std::max(norm(v), 1e-300)) {
      if (++run >= 3) return i % n;
    } else {
      run = 0;
    }
  }
  return std::nullopt;
}

std::vector<VerticalEvent> scan_vertical_events(const LegendrianCurve& curve, const Tolerances& tol,
                                                std::optional<double>& violation) {
  std::vector<VerticalEvent> out;
  const CurveSpline sp(curve);
  const double h = curve.step();
  for (const Cusp& c : find_cusps(curve, Plane::XY, tol)) {
    VerticalEvent e;
    e.t = c.t;
    e.two_nz = 2.0 * curve.contact.n() * sp.position(c.t).z;
    if (std::abs(e.two_nz - std::round(e.two_nz)) <= tol.condition3) {
      if (!violation) violation = c.t;
      continue;
    }
    e.a = (long(std::floor(e.two_nz)) % 2 == 0) ? 1 : -1;
    auto psi = [&](double t) {
      const Vec3 v = sp.velocity(t);
      return std::atan2(v.x, v.z);
    };
    e.b = wrap_angle(psi(c.t + h) - psi(c.t - h)) > 0.0 ? 1 : -1;
    out.push_back(e);
  }
  return out;
}

std::vector<Crossing> crossings_impl(const LegendrianCurve& curve, Plane plane, const Tolerances& tol,
                                     const CrossingOptions& opt, const std::vector<Cusp>* cusps) {
  const PlaneMap m = plane_map(plane);
  const double t0 = wrap01(opt.window_start);
  std::vector<Crossing> out;
  for (const RawCrossing& r : raw_crossings(curve, plane)) {
    if (r.overlap || std::abs(r.sin_angle) < tol.transversality)
      throw GenericityError("non-transverse double point in the " + std::string(to_string(plane)) +
                                " projection (|sin| = " + std::to_string(std::abs(r.sin_angle)) + ")",
                            r.t1);
    const double w1 = r.t1 < t0 ? r.t1 + 1.0 : r.t1;
    const double w2 = r.t2 < t0 ? r.t2 + 1.0 : r.t2;
    const double h1 = chord_height(curve, m, w1);
    const double h2 = chord_height(curve, m, w2);
    if (h1 == h2) throw GenericityError("double point with equal lifted heights", r.t1);
    const bool first_over = h1 > h2;
    Crossing c;
    c.t_over = first_over ? r.t1 : r.t2;
    c.t_under = first_over ? r.t2 : r.t1;
    const Vec2 over = first_over ? r.dir1 : r.dir2;
    const Vec2 under = first_over ? r.dir2 : r.dir1;
    c.sign = det(over, under) > 0.0 ? 1 : -1;
    c.sin_angle = r.sin_angle;
    c.height_gap = std::abs(h1 - h2);
    c.point = uv_to_display(plane, reduce(r.uv, m.lattice));
    c.dir_over = uv_to_display(plane, over);
    c.dir_under = uv_to_display(plane, under);
    out.push_back(c);
  }
  if (opt.check_cusp_separation && cusps) {
    for (const Crossing& c : out)
      for (const Cusp& k : *cusps)
        for (double t : {c.t_over, c.t_under}) {
          const double d = std::abs(t - k.t);
          if (std::min(d, 1.0 - d) < tol.event_separation)
            throw GenericityError("crossing too close to a cusp", t);
        }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
    return std::min(a.t_over, a.t_under) < std::min(b.t_over, b.t_under);
  });
  return out;
}

}  // namespace

std::vector<RawCrossing> raw_crossings(const LegendrianCurve& curve, Plane plane) {
  require_compatible(curve, plane);
  const PlaneMap m = plane_map(plane);
  const PolylineLoop loop = loop_of(curve, m);
  const double n = double(curve.size());
  std::vector<RawCrossing> out;
  for (const SegmentHit& h : self_intersections(loop)) {
    RawCrossing r;
    r.t1 = (double(h.i) + h.s) / n;
    r.t2 = (double(h.j) + h.u) / n;
    r.uv = h.point;
    r.dir1 = normalized(loop.lifted(long(h.i) + 1) - loop.lifted(long(h.i)));
    r.dir2 = normalized(loop.lifted(long(h.j) + 1) - loop.lifted(long(h.j)));
    r.sin_angle = h.sin_angle;
    r.overlap = h.overlap;
    out.push_back(r);
  }
  return out;
}

std::vector<Crossing> find_crossings(const LegendrianCurve& curve, Plane plane, const Tolerances& tol,
                                     const CrossingOptions& opt) {
  std::vector<Cusp> cusps;
  if (opt.check_cusp_separation) cusps = find_cusps(curve, plane, tol);
  return crossings_impl(curve, plane, tol, opt, &cusps);
}

std::vector<Cusp> find_cusps(const LegendrianCurve& curve, Plane plane, const Tolerances& tol) {
  require_compatible(curve, plane);
  const PlaneMap m = plane_map(plane);
  if (auto i = flat_run(curve, m))
    throw GenericityError("planar speed vanishes on an interval", double(*i) * curve.step());

  const long n = long(curve.size());
  const double h = curve.step();
  const CurveSpline sp(curve);
  auto chord = [&](long i) { return m.uv(curve.lifted(i + 1)) - m.uv(curve.lifted(i)); };
  auto pvel = [&](double t) { return m.uv(sp.velocity(t)); };

  std::vector<Cusp> out;
  for (long i = 0; i < n; ++i) {
    const Vec2 before = chord(i - 1);
    if (dot(chord(i), before) >= 0.0) continue;

    // Signed speed along a fixed reference line; exact choices where the plane has one.
    std::function<double(double)> f;
    if (plane == Plane::XY) {
      f = [&](double t) {
        const Frame fr = contact_frame(curve.contact, sp.position(t));
        return dot(sp.velocity(t), fr.W);
      };
    } else if (plane == Plane::R3Front) {
      f = [&](double t) { return sp.velocity(t).x; };
    } else {
      const Vec2 e = normalized(before);
      f = [&, e](double t) { return dot(pvel(t), e); };
    }
    double a = double(i - 1) * h, b = double(i + 1) * h;
    if (f(a) * f(b) > 0.0) {
      a -= h;
      b += h;
      if (f(a) * f(b) > 0.0) throw GenericityError("cusp could not be bracketed", double(i) * h);
    }
    const double t = bisect_root(f, a, b, tol.bisection);

    const double dt = 0.25 * h;
    const Vec2 acc = (pvel(t + dt) - pvel(t - dt)) * (1.0 / (2.0 * dt));
    if (norm(acc) <= 1e-6 * std::max(norm(sp.velocity(t)), 1e-300))
      throw GenericityError("cusp is not semicubical", wrap01(t));

    Cusp c;
    c.t = wrap01(t);
    c.point = reduce(m.display(sp.position(t)), m.lattice);
    if (plane == Plane::XY) {
      const Frame fr = contact_frame(curve.contact, sp.position(t));
      const Vec2 ybar{fr.Y.x, fr.Y.y};
      const Vec2 in = pvel(t - 3 * h);
      c.sign = dot(in, ybar) > 0.0 ? 1 : -1;
      const Vec2 approach = sp.velocity(t).z > 0.0 ? in : -pvel(t + 3 * h);
      c.y_side = det(approach, ybar) < 0.0 ? 1 : -1;
    }
    if (plane == Plane::R3Front) {
      // Motion through the cusp measured against its tangent line z = z0 + y (x - x0).
      const Vec3 p0 = sp.position(t), pa = sp.position(t - 3 * h), pb = sp.position(t + 3 * h);
      const double rise = (pb.z - pa.z) - p0.y * (pb.x - pa.x);
      c.updown = rise > 0.0 ? CuspKind::Up : CuspKind::Down;
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Cusp& x, const Cusp& y) { return x.t < y.t; });
  // Merge detections of the same event.
  std::vector<Cusp> merged;
  for (const Cusp& c : out) {
    if (!merged.empty() && c.t - merged.back().t < tol.event_merge) continue;
    merged.push_back(c);
  }
  if (merged.size() > 1 && merged.front().t + 1.0 - merged.back().t < tol.event_merge) merged.pop_back();
  return merged;
}

std::vector<VerticalEvent> find_vertical_events(const LegendrianCurve& curve, const Tolerances& tol) {
  if (curve.ambient != Ambient::T3) throw PreconditionError("vertical events are defined for T3 curves");
  std::optional<double> violation;
  auto ev = scan_vertical_events(curve, tol, violation);
  if (violation)
    throw GenericityError("vertical-tangency condition fails: 2nz(t) is an integer at a vertical tangent, t = " +
                              std::to_string(*violation),
                          *violation);
  return ev;
}

int tangent_winding(const LegendrianCurve& curve, Plane plane, const Tolerances& tol) {
  require_compatible(curve, plane);
  const PlaneMap m = plane_map(plane);
  const long n = long(curve.size());
  double total = 0.0;
  Vec2 prev = m.uv(curve.lifted(0)) - m.uv(curve.lifted(-1));
  for (long i = 0; i < n; ++i) {
    const Vec2 d = m.uv(curve.lifted(i + 1)) - m.uv(curve.lifted(i));
    const double step = wrap_angle(std::atan2(d.y, d.x) - std::atan2(prev.y, prev.x));
    if (std::abs(step) > 0.9 * kPi) throw WindingError("tangent turns by more than 0.9 pi in one step", step);
    total += step;
    prev = d;
  }
  const double turns = total / kTwoPi;
  const double snapped = std::round(turns);
  if (std::abs(turns - snapped) > tol.winding_residual)
    throw WindingError("tangent winding is not close to an integer", turns - snapped);
  return int(snapped);
}

Diagram project(const LegendrianCurve& curve, Plane plane) {
  require_compatible(curve, plane);
  const PlaneMap m = plane_map(plane);
  Diagram d;
  d.plane = plane;
  d.ambient = curve.ambient;
  d.n = curve.ambient == Ambient::T3 ? curve.contact.n() : 0;
  d.orientation = curve.orientation;
  d.degenerate = flat_run(curve, m).has_value();

  const long n = long(curve.size());
  const double h = curve.step();
  if (m.lattice == Lattice::None) {
    Strand s;
    for (long i = 0; i <= n; ++i) {
      const Vec3 p = curve.lifted(i);
      s.points.push_back(m.display(p));
      s.t.push_back(double(i) * h);
      s.height.push_back(m.height(p));
    }
    s.closed = true;
    d.strands.push_back(std::move(s));
    return d;
  }

  // Torus: split the lifted polyline where it leaves a unit cell.
  using Cell = std::pair<long, long>;
  std::vector<std::pair<Cell, Strand>> pieces;
  auto cell_of = [](Vec2 p) { return Cell{long(std::floor(p.x)), long(std::floor(p.y))}; };
  auto emit = [&](const Cell& c, Vec2 p, double t, double ht) {
    if (pieces.empty() || pieces.back().first != c) pieces.push_back({c, Strand{}});
    Strand& s = pieces.back().second;
    s.points.push_back({p.x - double(c.first), p.y - double(c.second)});
    s.t.push_back(t);
    s.height.push_back(ht);
  };
  for (long i = 0; i < n; ++i) {
    const Vec3 A = curve.lifted(i), B = curve.lifted(i + 1);
    const Vec2 a = m.display(A), b = m.display(B);
    std::vector<double> cuts{0.0, 1.0};
    for (int axis = 0; axis < 2; ++axis) {
      const double a0 = axis ? a.y : a.x, b0 = axis ? b.y : b.x;
      for (double k = std::ceil(std::min(a0, b0)); k <= std::max(a0, b0); k += 1.0)
        if (a0 != b0) cuts.push_back((k - a0) / (b0 - a0));
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const double l0 = cuts[c], l1 = cuts[c + 1];
      if (l1 - l0 < 1e-15) continue;
      const Cell cell = cell_of(a + (b - a) * (0.5 * (l0 + l1)));
      for (double l : {l0, l1}) {
        const Vec3 P = A + (B - A) * l;
        emit(cell, m.display(P), (double(i) + l) * h, m.height(P));
      }
    }
  }
  // Drop repeated interior vertices introduced by the piecewise emission.
  for (auto& [cell, s] : pieces) {
    Strand t;
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      if (!t.points.empty() && norm(t.points.back() - s.points[k]) < 1e-15) continue;
      t.points.push_back(s.points[k]);
      t.t.push_back(s.t[k]);
      t.height.push_back(s.height[k]);
    }
    s = std::move(t);
  }
  // The circuit closes up: join the last piece onto the first when they meet
  // in the same reduced cell.
  if (pieces.size() > 1) {
    auto& first = pieces.front().second;
    auto& last = pieces.back().second;
    if (norm(last.points.back() - first.points.front()) < 1e-9) {
      Strand joined = last;
      joined.points.insert(joined.points.end(), first.points.begin() + 1, first.points.end());
      joined.t.insert(joined.t.end(), first.t.begin() + 1, first.t.end());
      joined.height.insert(joined.height.end(), first.height.begin() + 1, first.height.end());
      pieces.front().second = std::move(joined);
      pieces.pop_back();
    }
  }
  if (pieces.size() == 1) {
    Strand& s = pieces.front().second;
    s.closed = norm(s.points.back() - s.points.front()) < 1e-9;
  }
  for (auto& [cell, s] : pieces) d.strands.push_back(std::move(s));
  return d;
}

Diagram build_diagram(const LegendrianCurve& curve, Plane plane, const Tolerances& tol) {
  Diagram d = project(curve, plane);
  if (d.degenerate) throw GenericityError("planar speed vanishes on an interval");
  d.cusps = find_cusps(curve, plane, tol);
  d.crossings = crossings_impl(curve, plane, tol, {}, &d.cusps);
  if (curve.ambient == Ambient::T3) {
    d.vertical_events = scan_vertical_events(curve, tol, d.condition3_violation);
    d.condition3_ok = !d.condition3_violation.has_value();
  }
  if (plane == Plane::R3Lagrangian) d.tangent_winding = tangent_winding(curve, plane, tol);
  d.tallies = d.count();
  return d;
}

}  // namespace lkt3
