#include "lkt3/invariants.hpp"

#include <cmath>

#include "lkt3/errors.hpp"
#include "lkt3/parallel.hpp"
#include "lkt3/seifert.hpp"

namespace lkt3 {

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace {

void require_plane(const Diagram& d, Plane p) {
  if (d.plane != p)
    throw PreconditionError(std::string("expected a ") + to_string(p) + " diagram, got " + to_string(d.plane));
}

void require_condition3(const Diagram& d) {
  if (!d.condition3_ok)
    throw GenericityError("2nz is an integer at a vertical tangent; perturb the curve first",
                          d.condition3_violation);
}

// Turns accumulated by a closed sequence of angles; angles.back() is the
// value after one full circuit.
int snap_winding(const std::vector<double>& angles, const Tolerances& tol, const char* what) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
    const double step = wrap_angle(angles[i + 1] - angles[i]);
    if (std::abs(step) > 0.9 * kPi)
      throw WindingError(std::string(what) + ": angle jumps by more than 0.9 pi between samples", step);
    total += step;
  }
  const double turns = total / kTwoPi;
  const double snapped = std::round(turns);
  if (std::abs(turns - snapped) > tol.winding_residual)
    throw WindingError(std::string(what) + ": winding is not near an integer", turns - snapped);
  return int(snapped);
}

void require_t3(const LegendrianCurve& c, const char* what) {
  if (c.ambient != Ambient::T3) throw PreconditionError(std::string(what) + " needs a T3 curve");
}

// Unit tangent at sample i.
Vec3 tangent(const LegendrianCurve& c, long i) { return normalized(c.velocity(i)); }

Vec3 project_normal(const Vec3& v, const Vec3& t, const char* what) {
  const Vec3 p = v - t * dot(v, t);
  if (norm(p) < 1e-3) throw GenericityError(std::string(what) + " is tangent to the curve");
  return normalized(p);
}

}  // namespace

HalfInt tb_xy(const Diagram& d) {
  require_plane(d, Plane::XY);
  const Tallies t = d.count();
  return HalfInt::from_twice(2 * (t.P - t.N) + t.C);
}

int tb_xz(const Diagram& d) {
  require_plane(d, Plane::XZ);
  require_condition3(d);
  const Tallies t = d.count();
  return t.P - t.N;
}

HalfInt r_xy(const Diagram& d) {
  require_plane(d, Plane::XY);
  const Tallies t = d.count();
  return HalfInt::from_twice(t.C_plus - t.C_minus);
}

HalfInt r_xz(const std::vector<VerticalEvent>& events) {
  int sum = 0;
  for (const VerticalEvent& e : events) sum += e.a * e.b;
  return HalfInt::from_twice(sum);
}

HalfInt r_xz(const Diagram& d) {
  require_plane(d, Plane::XZ);
  require_condition3(d);
  return r_xz(d.vertical_events);
}

int r_direct(const LegendrianCurve& curve, const Tolerances& tol) {
  return r_with_twisted_section(curve, 0, tol);
}

int r_with_twisted_section(const LegendrianCurve& curve, int m, const Tolerances& tol) {
  require_t3(curve, "rotation number");
  const long n = long(curve.size());
  std::vector<double> angles(std::size_t(n + 1));
  for (long i = 0; i <= n; ++i) {
    const Vec3 p = curve.lifted(i);
    const Frame f = contact_frame(curve.contact, p);
    const Vec3 v = curve.velocity(i);
    // Angle in the (W, Z) basis, measured against the section turned by 2 pi m z.
    angles[std::size_t(i)] = std::atan2(dot(v, f.Z), dot(v, f.W)) - kTwoPi * m * p.z;
  }
  return snap_winding(angles, tol, "rotation number");
}

Vec3 constant_framing_vector(const Period& period) {
  if (period.r == 0) return {0.0, 0.0, 1.0};
  const Vec3 x = cross({0.0, 0.0, 1.0}, period.vec());
  if (norm(x) < 1e-12) return {1.0, 0.0, 0.0};
  return normalized(x);
}

Framing constant_framing(const LegendrianCurve& curve, const Vec3& x) { return projected_framing(curve, x); }

Framing projected_framing(const LegendrianCurve& curve, const Vec3& direction) {
  Framing f(curve.size());
  for (long i = 0; i < long(curve.size()); ++i)
    f[std::size_t(i)] = project_normal(direction, tangent(curve, i), "framing direction");
  return f;
}

Framing contact_framing(const LegendrianCurve& curve) {
  require_t3(curve, "contact framing");
  Framing f(curve.size());
  for (long i = 0; i < long(curve.size()); ++i) {
    const Frame fr = contact_frame(curve.contact, curve.samples[std::size_t(i)]);
    f[std::size_t(i)] = project_normal(fr.Y, tangent(curve, i), "contact normal");
  }
  return f;
}

Framing radial_framing(const LegendrianCurve& curve, const Vec3& axis_point) {
  Framing f(curve.size());
  for (long i = 0; i < long(curve.size()); ++i) {
    const Vec3 p = curve.samples[std::size_t(i)];
    const Vec3 radial{p.x - axis_point.x, p.y - axis_point.y, 0.0};
    f[std::size_t(i)] = project_normal(radial, tangent(curve, i), "radial direction");
  }
  return f;
}

int relative_framing_rotation(const LegendrianCurve& curve, const Framing& a, const Framing& b,
                              const Tolerances& tol) {
  const long n = long(curve.size());
  if (long(a.size()) != n || long(b.size()) != n)
    throw PreconditionError("framings must have one vector per sample");
  std::vector<double> angles(std::size_t(n + 1));
  for (long i = 0; i < n; ++i) {
    const Vec3 t = tangent(curve, i);
    const Vec3& u = a[std::size_t(i)];
    const Vec3& w = b[std::size_t(i)];
    for (const Vec3* v : {&u, &w}) {
      if (std::abs(norm(*v) - 1.0) > tol.framing_orthogonality ||
          std::abs(dot(*v, t)) > tol.framing_orthogonality)
        throw PreconditionError("framing vector at sample " + std::to_string(i) + " is not a unit normal");
    }
    angles[std::size_t(i)] = std::atan2(dot(t, cross(u, w)), dot(u, w));
  }
  angles[std::size_t(n)] = angles[0];
  // Whole turns come from the per-step increments; the closing step returns to the start.
  double total = 0.0;
  for (long i = 0; i < n; ++i) {
    const double step = wrap_angle(angles[std::size_t(i + 1)] - angles[std::size_t(i)]);
    if (std::abs(step) > 0.9 * kPi) throw WindingError("framing rotation: angle jumps between samples", step);
    total += step;
  }
  return int(std::lround(total / kTwoPi));
}

int tb_oracle_quasilinear(const LegendrianCurve& curve, const Tolerances& tol) {
  require_t3(curve, "tb oracle");
  if (curve.meta.generator != "quasilinear")
    throw PreconditionError("tb oracle refuses curves not built by the quasilinear generator");
  if (curve.period.is_zero()) throw PreconditionError("tb oracle needs a nonzero period");
  const Framing x = constant_framing(curve, constant_framing_vector(curve.period));
  return relative_framing_rotation(curve, x, contact_framing(curve), tol);
}

ClassicalInvariants classical_r3(const Diagram& d) {
  if (d.ambient != Ambient::R3) throw PreconditionError("classical formulas need an R3 diagram");
  const Tallies t = d.count();
  if (d.plane == Plane::R3Front)
    return {HalfInt::from_twice(2 * (t.P - t.N) - t.C), HalfInt::from_twice(t.C_down - t.C_up)};
  if (d.plane == Plane::R3Lagrangian) {
    if (!d.tangent_winding) throw PreconditionError("Lagrangian diagram lacks its tangent winding");
    return {HalfInt(t.P - t.N), HalfInt(*d.tangent_winding)};
  }
  throw PreconditionError("classical formulas need a front or Lagrangian diagram");
}

BennequinVerdict bennequin_check(HalfInt tb, HalfInt r, int chi, int r_period, int n) {
  BennequinVerdict v;
  v.lhs = tb + r;
  v.rhs = HalfInt(-chi + r_period * n);
  v.holds = v.lhs <= v.rhs;
  v.equality = v.lhs == v.rhs;
  return v;
}

const char* to_string(TbMethod m) {
  switch (m) {
    case TbMethod::XY: return "xy";
    case TbMethod::XZ: return "xz";
    case TbMethod::Oracle: return "oracle";
  }
  return "?";
}

TbMethod tb_method_from_string(const std::string& s) {
  if (s == "xy") return TbMethod::XY;
  if (s == "xz") return TbMethod::XZ;
  if (s == "oracle") return TbMethod::Oracle;
  throw PreconditionError("unknown tb method '" + s + "'");
}

namespace {

template <class A, class B>
void compare(std::vector<std::string>& out, const char* na, const std::optional<A>& a, const char* nb,
             const std::optional<B>& b) {
  if (!a || !b) return;
  const HalfInt x(*a), y(*b);
  if (x != y) out.push_back(std::string(na) + "=" + x.str() + " != " + nb + "=" + y.str());
}

template <class F>
void attempt(InvariantReport& rep, const char* what, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    rep.notes.push_back(std::string(what) + ": " + e.what());
  }
}

}  // namespace

InvariantReport compute_report(const LegendrianCurve& curve, const ReportOptions& opt, const Tolerances& tol) {
  InvariantReport rep;
  rep.ambient = curve.ambient;
  rep.period = curve.period;
  rep.n = curve.ambient == Ambient::T3 ? curve.contact.n() : 0;
  rep.genericity = check_genericity(curve, tol);

  if (curve.ambient == Ambient::R3) {
    attempt(rep, "front", [&] {
      const Diagram d = build_diagram(curve, Plane::R3Front, tol);
      const ClassicalInvariants c = classical_r3(d);
      rep.tb_front = c.tb;
      rep.r_front = c.r;
      rep.front_tallies = d.tallies;
    });
    attempt(rep, "lagrangian", [&] {
      const Diagram d = build_diagram(curve, Plane::R3Lagrangian, tol);
      const ClassicalInvariants c = classical_r3(d);
      rep.tb_lagrangian = c.tb;
      rep.r_lagrangian = c.r;
      rep.lagrangian_tallies = d.tallies;
    });
    compare(rep.method_disagreements, "tb_front", rep.tb_front, "tb_lagrangian", rep.tb_lagrangian);
    compare(rep.method_disagreements, "r_front", rep.r_front, "r_lagrangian", rep.r_lagrangian);
  } else {
    if (opt.xy)
      attempt(rep, "xy", [&] {
        const Diagram d = build_diagram(curve, Plane::XY, tol);
        rep.xy_tallies = d.tallies;
        rep.tb_xy = tb_xy(d);
        rep.r_xy = r_xy(d);
      });
    if (opt.xz)
      attempt(rep, "xz", [&] {
        const Diagram d = build_diagram(curve, Plane::XZ, tol);
        rep.xz_tallies = d.tallies;
        rep.tb_xz = tb_xz(d);
        rep.r_xz = r_xz(d);
      });
    if (opt.oracle) {
      attempt(rep, "r_direct", [&] { rep.r_direct = r_direct(curve, tol); });
      if (curve.meta.generator == "quasilinear" && !curve.period.is_zero())
        attempt(rep, "tb_oracle", [&] { rep.tb_oracle = tb_oracle_quasilinear(curve, tol); });
    }
    auto& md = rep.method_disagreements;
    compare(md, "tb_xy", rep.tb_xy, "tb_xz", rep.tb_xz);
    compare(md, "tb_xy", rep.tb_xy, "tb_oracle", rep.tb_oracle);
    compare(md, "tb_xz", rep.tb_xz, "tb_oracle", rep.tb_oracle);
    compare(md, "r_xy", rep.r_xy, "r_xz", rep.r_xz);
    compare(md, "r_xy", rep.r_xy, "r_direct", rep.r_direct);
    compare(md, "r_xz", rep.r_xz, "r_direct", rep.r_direct);
  }

  if (opt.seifert) {
    attempt(rep, "seifert", [&] {
      RunConfig cfg;
      cfg.tol = tol;
      rep.chi = seifert_census(curve, cfg).chi;
    });
    std::optional<HalfInt> tb, r;
    if (curve.ambient == Ambient::R3) {
      rep.bennequin_method = "front";
      tb = rep.tb_front;
      r = rep.r_front;
    } else {
      rep.bennequin_method = to_string(opt.bennequin_method);
      switch (opt.bennequin_method) {
        case TbMethod::XY: tb = rep.tb_xy, r = rep.r_xy; break;
        case TbMethod::XZ:
          if (rep.tb_xz) tb = HalfInt(*rep.tb_xz);
          r = rep.r_xz;
          break;
        case TbMethod::Oracle:
          if (rep.tb_oracle) tb = HalfInt(*rep.tb_oracle);
          if (rep.r_direct) r = HalfInt(*rep.r_direct);
          break;
      }
    }
    if (tb && r && rep.chi)
      rep.bennequin = bennequin_check(*tb, *r, *rep.chi, curve.period.r, rep.n);
    else
      rep.notes.push_back("bennequin: inputs for method " + rep.bennequin_method + " unavailable");
  }
  return rep;
}

std::vector<InvariantReport> batch_reports(const std::vector<LegendrianCurve>& curves, const ReportOptions& opt,
                                           const RunConfig& cfg) {
  return parallel_map<InvariantReport>(curves.size(), cfg.threads, [&](std::size_t i) {
    try {
      return compute_report(curves[i], opt, cfg.tol);
    } catch (const std::exception& e) {
      InvariantReport rep;
      rep.notes.push_back(e.what());
      return rep;
    }
  });
}

}  // namespace lkt3
