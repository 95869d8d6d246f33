#include "lkt3/seifert.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "lkt3/errors.hpp"
#include "lkt3/segments.hpp"

namespace lkt3 {

namespace {

struct PlaneBasis {
  Vec3 u, w, nu;
  bool periodic = false;
  double length = 0.0;  // |period|
};

PlaneBasis basis_for(const LegendrianCurve& c, const Vec3& normal) {
  PlaneBasis b;
  b.nu = normalized(normal);
  if (norm(b.nu) == 0.0) throw PreconditionError("projection normal must be nonzero");
  b.periodic = !c.period.is_zero();
  if (b.periodic) {
    const Vec3 v = c.period.vec();
    if (std::abs(dot(v, b.nu)) > 1e-9 * norm(v))
      throw PreconditionError("projection plane must contain the period vector");
    b.u = normalized(v);
    b.length = norm(v);
  } else {
    const Vec3 seed = std::abs(b.nu.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    b.u = normalized(seed - b.nu * dot(seed, b.nu));
  }
  b.w = cross(b.nu, b.u);
  return b;
}

PolylineLoop loop_for(const LegendrianCurve& c, const PlaneBasis& b) {
  PolylineLoop l;
  for (const Vec3& s : c.samples) l.points.push_back({dot(s, b.u), dot(s, b.w)});
  l.shift = {dot(c.period.vec(), b.u), dot(c.period.vec(), b.w)};
  l.lattice = b.periodic ? Lattice::Cylinder : Lattice::None;
  l.u_period = b.periodic ? b.length : 1.0;
  return l;
}

double margin_of(const LegendrianCurve& c, const PlaneBasis& b, const std::vector<SegmentHit>& hits) {
  double m = 1.0;
  for (long i = 0; i < long(c.size()); ++i) {
    const Vec3 v = c.velocity(i);
    const double sp = norm(v);
    if (sp == 0.0) return 0.0;
    m = std::min(m, std::hypot(dot(v, b.u), dot(v, b.w)) / sp);
  }
  for (const SegmentHit& h : hits) m = std::min(m, h.overlap ? 0.0 : std::abs(h.sin_angle));
  return m;
}

}  // namespace

double projection_margin(const LegendrianCurve& curve, const Vec3& normal) {
  const PlaneBasis b = basis_for(curve, normal);
  return margin_of(curve, b, self_intersections(loop_for(curve, b)));
}

std::vector<Vec3> candidate_normals(const LegendrianCurve& curve, int count) {
  std::vector<Vec3> out;
  auto add = [&](Vec3 v) {
    v = normalized(v);
    for (const Vec3& o : out)
      if (norm(o - v) < 1e-9 || norm(o + v) < 1e-9) return;
    out.push_back(v);
  };
  const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  if (curve.ambient == Ambient::R3) {
    // Slight tilts of the front direction: cusps open into small kinks, which
    // change s and c by the same amount, so s - c is the front's value.
    for (double tilt : {0.05, 0.1, 0.15})
      for (int k = 0; k < count; ++k) {
        const double psi = kTwoPi * (k + 0.5) / count;
        add({std::sin(tilt) * std::cos(psi), std::cos(tilt), std::sin(tilt) * std::sin(psi)});
      }
    return out;
  }
  if (curve.period.is_zero()) {
    for (const Vec3& a : axes) add(a);
    const double tilt = 0.3;
    for (int k = 0; k < count; ++k) {
      const double psi = kTwoPi * k / count;
      add({std::sin(tilt) * std::cos(psi), std::sin(tilt) * std::sin(psi), std::cos(tilt)});
      add({std::sin(tilt) * std::cos(psi), std::cos(tilt), std::sin(tilt) * std::sin(psi)});
    }
    return out;
  }
  const Vec3 v = normalized(curve.period.vec());
  for (const Vec3& a : axes)
    if (std::abs(dot(a, v)) < 1e-12) add(a);
  Vec3 base;
  if (!out.empty()) {
    base = out.front();
  } else {
    const Vec3* least = &axes[0];
    for (const Vec3& a : axes)
      if (std::abs(dot(a, v)) < std::abs(dot(*least, v))) least = &a;
    base = normalized(cross(v, *least));
  }
  const Vec3 other = cross(v, base);
  for (int k = 0; k < count; ++k) {
    const double a = kPi * k / count;
    add(base * std::cos(a) + other * std::sin(a));
  }
  return out;
}

std::vector<Vec3> ranked_projection_planes(const LegendrianCurve& curve, const RunConfig& cfg) {
  struct Cand {
    Vec3 nu;
    std::size_t crossings;
    double margin;
  };
  std::vector<Cand> ok;
  for (const Vec3& nu : candidate_normals(curve, cfg.plane_candidates)) {
    const PlaneBasis b = basis_for(curve, nu);
    const auto hits = self_intersections(loop_for(curve, b));
    const double m = margin_of(curve, b, hits);
    if (m >= cfg.tol.transversality) ok.push_back({nu, hits.size(), m});
  }
  // Fewer crossings first: Seifert's algorithm is sensitive to extra crossings.
  std::stable_sort(ok.begin(), ok.end(), [](const Cand& a, const Cand& b) {
    return a.crossings != b.crossings ? a.crossings < b.crossings : a.margin > b.margin;
  });
  std::vector<Vec3> out;
  for (const Cand& c : ok) out.push_back(c.nu);
  return out;
}

Vec3 choose_projection_plane(const LegendrianCurve& curve, const RunConfig& cfg) {
  const auto ranked = ranked_projection_planes(curve, cfg);
  if (ranked.empty())
    throw GenericityError("no regular projection plane among " +
                          std::to_string(candidate_normals(curve, cfg.plane_candidates).size()) + " candidates");
  return ranked.front();
}

SeifertCensus seifert_census(const LegendrianCurve& curve, const RunConfig& cfg) {
  return seifert_census(curve, choose_projection_plane(curve, cfg), cfg);
}

SeifertCensus seifert_census(const LegendrianCurve& curve, const Vec3& normal, const RunConfig& cfg) {
  const PlaneBasis b = basis_for(curve, normal);
  const PolylineLoop loop = loop_for(curve, b);
  const auto hits = self_intersections(loop);

  SeifertCensus cs;
  cs.plane_normal = b.nu;
  cs.periodic = b.periodic;
  cs.margin = margin_of(curve, b, hits);
  if (cs.margin < cfg.tol.transversality)
    throw GenericityError("projection is not regular (margin " + std::to_string(cs.margin) + ")");
  cs.crossings = int(hits.size());

  const double n = double(curve.size());
  auto lifted_at = [&](double t) {
    const double s = t * n;
    const double f = std::floor(s);
    const double w = s - f;
    return curve.lifted(long(f)) * (1.0 - w) + curve.lifted(long(f) + 1) * w;
  };

  // Crossing endpoints in circuit order; arc k runs from event k to event k + 1.
  struct Event {
    double t;
    int crossing;
    std::size_t partner = 0;
  };
  std::vector<Event> ev;
  for (std::size_t c = 0; c < hits.size(); ++c) {
    ev.push_back({(double(hits[c].i) + hits[c].s) / n, int(c)});
    ev.push_back({(double(hits[c].j) + hits[c].u) / n, int(c)});
  }
  std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& e) { return a.t < e.t; });
  std::map<int, std::vector<std::size_t>> by_crossing;
  for (std::size_t k = 0; k < ev.size(); ++k) by_crossing[ev[k].crossing].push_back(k);
  for (auto& [id, ks] : by_crossing) {
    ev[ks[0]].partner = ks[1];
    ev[ks[1]].partner = ks[0];
  }

  auto trace_arc = [&](double t0, double t1, SeifertCircle& circle, double& du, double& wsum, int& wcount) {
    const Vec3 a = lifted_at(t0), e = lifted_at(t1);
    du += dot(e - a, b.u);
    // Sample the transverse coordinate along the arc.
    const int steps = std::max(2, int((t1 - t0) * n));
    for (int q = 0; q <= steps; ++q) {
      wsum += dot(lifted_at(t0 + (t1 - t0) * q / steps), b.w);
      ++wcount;
    }
    circle.arcs.push_back(t0 - std::floor(t0));
  };

  const std::size_t m = ev.size();
  if (m == 0) {
    SeifertCircle c;
    double du = 0.0, wsum = 0.0;
    int wc = 0;
    trace_arc(0.0, 1.0, c, du, wsum, wc);
    c.mean_w = wsum / wc;
    c.winding = b.periodic ? int(std::lround(du / b.length)) : 0;
    cs.circles.push_back(c);
  } else {
    std::vector<bool> used(m, false);
    for (std::size_t start = 0; start < m; ++start) {
      if (used[start]) continue;
      SeifertCircle c;
      double du = 0.0, wsum = 0.0;
      int wc = 0;
      std::size_t k = start;
      while (!used[k]) {
        used[k] = true;
        c.band_ends.push_back(ev[k].crossing);
        const std::size_t next = (k + 1) % m;
        const double t1 = next == 0 ? ev[0].t + 1.0 : ev[next].t;
        trace_arc(ev[k].t, t1, c, du, wsum, wc);
        k = ev[next].partner;  // smoothing: leave the crossing along the other strand
      }
      c.mean_w = wsum / wc;
      c.winding = b.periodic ? int(std::lround(du / b.length)) : 0;
      cs.circles.push_back(c);
    }
  }

  cs.seifert_circles = int(cs.circles.size());
  std::vector<std::pair<double, int>> essential;
  for (const SeifertCircle& c : cs.circles) {
    if (c.winding == 0) ++cs.compact_circles;
    else essential.emplace_back(c.mean_w, c.winding);
  }
  std::sort(essential.begin(), essential.end());
  for (auto& [w, o] : essential) cs.essential_curves.push_back(o);
  cs.k = cs.essential_curves.empty() ? 0 : int(cs.essential_curves.size() - 1) / 2;
  cs.chi = b.periodic ? cs.compact_circles - cs.crossings : cs.seifert_circles - cs.crossings;
  return cs;
}

int chi_oracle(const SeifertCensus& census) {
  std::map<int, int> ends;
  long V = 0, E = 0, F = 0;
  std::vector<std::pair<double, int>> essential;
  for (const SeifertCircle& c : census.circles) {
    const long a = long(c.band_ends.size());
    V += a == 0 ? 1 : 2 * a;
    E += a == 0 ? 1 : 2 * a;
    for (int id : c.band_ends) ++ends[id];
    if (c.winding == 0) F += 1;  // capping disk
    else essential.emplace_back(c.mean_w, c.winding);
  }
  for (const auto& [id, count] : ends)
    if (count != 2)
      throw ValidationError("band " + std::to_string(id) + " has " + std::to_string(count) + " ends", std::nullopt,
                            count);
  if (long(ends.size()) != census.crossings)
    throw ValidationError("band count differs from crossing count", std::nullopt, double(ends.size()));
  E += 2 * long(ends.size());  // band sides
  F += long(ends.size());

  if (census.periodic) {
    std::sort(essential.begin(), essential.end());
    std::vector<int> stack;
    for (const auto& [w, o] : essential) {
      if (!stack.empty() && stack.back() == -o) {
        stack.pop_back();
        E += 1;  // seam of the pairing annulus
        F += 1;
      } else {
        stack.push_back(o);
      }
    }
    if (stack.size() != 1 || stack[0] != 1)
      throw ValidationError("essential curves do not pair up leaving one positive curve", std::nullopt,
                            double(stack.size()));
    V += 1;  // circle at the end of the half-plane quotient
    E += 2;  // that circle and the seam
    F += 1;
  } else if (!essential.empty()) {
    throw ValidationError("essential curves in a non-periodic census", std::nullopt, double(essential.size()));
  }
  return int(V - E + F);
}

}  // namespace lkt3
