#pragma once

#include <optional>
#include <vector>

#include "lkt3/config.hpp"
#include "lkt3/contact.hpp"

namespace lkt3 {

/// A closed curve produced by smoothing every crossing.
struct SeifertCircle {
  std::vector<int> band_ends;  // crossing ids met along the circle, in order
  int winding = 0;             // 0 compact; +-1 essential (against the period direction)
  double mean_w = 0.0;         // mean transverse coordinate; orders essential curves
  std::vector<double> arcs;    // start parameters of the arcs traversed
};

struct SeifertCensus {
  Vec3 plane_normal;
  bool periodic = true;
  int compact_circles = 0;              // d
  std::vector<int> essential_curves;    // orientations, sorted by mean_w
  int crossings = 0;                    // c
  int seifert_circles = 0;              // s, all circles
  int chi = 0;
  int k = 0;
  double margin = 0.0;
  std::vector<SeifertCircle> circles;
};

/// Regularity margin of the projection along `normal`: the smaller of the
/// projected speed ratio and the crossing |sin|; 0 if not regular.
double projection_margin(const LegendrianCurve& curve, const Vec3& normal);

/// Candidate normals: for a nonzero period, coordinate normals orthogonal to
/// it plus `count` rotations about it; R^3 curves get small tilts of the front
/// direction; contractible T^3 curves get coordinate axes and tilts.
std::vector<Vec3> candidate_normals(const LegendrianCurve& curve, int count = 16);

/// Regular candidates ordered by crossing count, then by decreasing margin.
std::vector<Vec3> ranked_projection_planes(const LegendrianCurve& curve, const RunConfig& cfg = {});

/// First ranked candidate. Throws GenericityError when none is regular.
Vec3 choose_projection_plane(const LegendrianCurve& curve, const RunConfig& cfg = {});

SeifertCensus seifert_census(const LegendrianCurve& curve, const RunConfig& cfg = {});
SeifertCensus seifert_census(const LegendrianCurve& curve, const Vec3& normal, const RunConfig& cfg = {});

/// Euler characteristic of an explicit cell complex assembled from the
/// census: disks, bands, pairing annuli and the end annulus. Throws
/// ValidationError if the band ends or essential orientations do not close up.
int chi_oracle(const SeifertCensus& census);

}  // namespace lkt3
