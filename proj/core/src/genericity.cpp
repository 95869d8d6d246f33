#include "lkt3/genericity.hpp"

#include <algorithm>
#include <cmath>

#include "lkt3/diagram.hpp"
#include "lkt3/errors.hpp"

namespace lkt3 {

GenericityReport check_genericity(const LegendrianCurve& curve, const Tolerances& tol) {
  GenericityReport rep;
  double margin = 1.0;  // clearances are capped at 1 when nothing constrains them

  for (long i = 0; i < long(curve.size()); ++i)
    if (norm(curve.velocity(i)) == 0.0) {
      rep.curvature_ok = false;
      rep.notes.push_back("curve is not regular at sample " + std::to_string(i));
      break;
    }

  std::vector<Plane> planes;
  if (curve.ambient == Ambient::T3) planes = {Plane::XY, Plane::XZ};
  else planes = {Plane::R3Front, Plane::R3Lagrangian};

  for (Plane p : planes) {
    const std::string name = to_string(p);
    std::vector<Cusp> cusps;
    try {
      cusps = find_cusps(curve, p, tol);
    } catch (const Error& e) {
      rep.cusps_semicubical = false;
      rep.notes.push_back(name + ": " + e.what());
      margin = 0.0;
    }
    std::vector<RawCrossing> raw;
    try {
      raw = raw_crossings(curve, p);
    } catch (const Error& e) {
      rep.notes.push_back(name + ": " + e.what());
    }
    for (const RawCrossing& r : raw) {
      const double s = r.overlap ? 0.0 : std::abs(r.sin_angle);
      margin = std::min(margin, s);
      if (s < tol.transversality) {
        if (rep.double_points_transverse)
          rep.notes.push_back(name + ": non-transverse double point near t = " + std::to_string(r.t1));
        rep.double_points_transverse = false;
      }
      for (const Cusp& c : cusps)
        for (double t : {r.t1, r.t2}) {
          const double d = std::abs(t - c.t);
          const double sep = std::min(d, 1.0 - d);
          margin = std::min(margin, sep);
          if (sep < tol.event_separation) {
            rep.double_points_transverse = false;
            rep.notes.push_back(name + ": double point too close to a cusp at t = " + std::to_string(c.t));
          }
        }
    }
  }

  if (curve.ambient == Ambient::T3 && rep.cusps_semicubical) {
    try {
      const auto ev = find_vertical_events(curve, tol);
      for (const VerticalEvent& e : ev) margin = std::min(margin, std::abs(e.two_nz - std::round(e.two_nz)));
    } catch (const GenericityError& e) {
      rep.condition3_ok = false;
      rep.condition3_t = e.parameter();
      rep.notes.push_back(e.what());
      margin = 0.0;
    }
  }
  rep.worst_margin = margin;
  return rep;
}

}  // namespace lkt3
