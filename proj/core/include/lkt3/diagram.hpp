#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lkt3/config.hpp"
#include "lkt3/contact.hpp"
#include "lkt3/segments.hpp"

namespace lkt3 {

enum class Plane { XY, XZ, R3Front, R3Lagrangian };

const char* to_string(Plane p);
Plane plane_from_string(const std::string& s);

/// Projection data for one plane. Internally every plane is described by
/// oriented coordinates (u, v) and a height h; a larger h is over.
///   XY:  (x, y), h = z     XZ:  (z, x), h = y   (the xz-plane seen from +y)
///   R3Lagrangian: (x, y), h = z
///   R3Front: (z, x), h = y; equivalently (x, z) with the smaller y over.
struct PlaneMap {
  Plane plane;
  Lattice lattice;

  Vec2 uv(const Vec3& p) const;
  double height(const Vec3& p) const;
  /// Display coordinates: (x, y) or (x, z).
  Vec2 display(const Vec3& p) const;
};

PlaneMap plane_map(Plane plane);

struct Crossing {
  double t_over = 0.0;
  double t_under = 0.0;
  Vec2 point;  // display coordinates, reduced to the unit square on T^2
  int sign = 0;
  double sin_angle = 0.0;
  double height_gap = 0.0;  // lifted height of over minus under, > 0
  Vec2 dir_over, dir_under;  // unit tangents in display coordinates
};

enum class CuspKind { None, Up, Down };

struct Cusp {
  double t = 0.0;
  Vec2 point;
  int sign = 0;               // xy cusps on T^3
  CuspKind updown = CuspKind::None;  // R^3 front cusps
  int y_side = 0;             // +1 when Y lies to the right approaching along increasing z, -1 left
};

struct VerticalEvent {
  double t = 0.0;
  int a = 0;
  int b = 0;
  double two_nz = 0.0;
};

struct Tallies {
  int P = 0, N = 0, C = 0, C_plus = 0, C_minus = 0, C_up = 0, C_down = 0;
  bool operator==(const Tallies&) const = default;
};

/// A maximal piece of the projection inside the unit square (or the whole
/// closed curve in R^2). Parameters and lifted heights are kept per vertex.
struct Strand {
  std::vector<Vec2> points;
  std::vector<double> t;
  std::vector<double> height;
  bool closed = false;
};

struct Diagram {
  Plane plane = Plane::XY;
  Ambient ambient = Ambient::T3;
  int n = 1;
  int orientation = 1;
  std::vector<Strand> strands;
  std::vector<Crossing> crossings;
  std::vector<Cusp> cusps;
  std::vector<VerticalEvent> vertical_events;
  Tallies tallies;
  bool degenerate = false;  // planar speed vanishes on an interval
  bool condition3_ok = true;
  std::optional<double> condition3_violation;
  std::optional<int> tangent_winding;  // Lagrangian projections

  Tallies count() const;
};

/// A double point of the projection before any genericity filtering.
struct RawCrossing {
  double t1 = 0.0;
  double t2 = 0.0;
  Vec2 uv;
  Vec2 dir1, dir2;  // unit chord directions in (u, v)
  double sin_angle = 0.0;
  bool overlap = false;
};

/// Every same-circuit double point of the projection, unfiltered.
std::vector<RawCrossing> raw_crossings(const LegendrianCurve& curve, Plane plane);

/// Projection strands only.
Diagram project(const LegendrianCurve& curve, Plane plane);

struct CrossingOptions {
  double window_start = 0.0;  // lifted heights are compared inside [t0, t0 + 1)
  bool check_cusp_separation = true;
};

std::vector<Crossing> find_crossings(const LegendrianCurve& curve, Plane plane, const Tolerances& tol = {},
                                     const CrossingOptions& opt = {});
std::vector<Cusp> find_cusps(const LegendrianCurve& curve, Plane plane, const Tolerances& tol = {});
std::vector<VerticalEvent> find_vertical_events(const LegendrianCurve& curve, const Tolerances& tol = {});

/// Projection with every event list and the tallies. Throws GenericityError
/// for non-transverse crossings or events closer than the separation tolerance.
/// A vertical-tangency failure (2nz integral at a vertical tangent) is recorded in the diagram instead of thrown.
Diagram build_diagram(const LegendrianCurve& curve, Plane plane, const Tolerances& tol = {});

/// Winding number of the projected tangent over one circuit.
int tangent_winding(const LegendrianCurve& curve, Plane plane, const Tolerances& tol = {});

std::string render_svg(const Diagram& diagram);

}  // namespace lkt3
