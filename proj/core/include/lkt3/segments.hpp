#pragma once

#include <cstddef>
#include <vector>

#include "lkt3/vec.hpp"

namespace lkt3 {

/// Translation group acting on the plane: none (R^2), {k (period, 0)} (cylinder)
/// or Z^2 (torus).
enum class Lattice { None, Cylinder, Torus };

/// One circuit of a planar lift: vertex i + N equals vertex i + shift.
/// The shift must lie in the lattice.
struct PolylineLoop {
  std::vector<Vec2> points;
  Vec2 shift;
  Lattice lattice = Lattice::None;
  double u_period = 1.0;  // cylinder translation length

  std::size_t size() const { return points.size(); }
  Vec2 lifted(long i) const;
};

/// Segment i (from vertex i) meets segment j translated by `offset`.
/// Local parameters are half-open: s, u in [0, 1).
struct SegmentHit {
  std::size_t i = 0;
  std::size_t j = 0;
  double s = 0.0;
  double u = 0.0;
  Vec2 offset;
  Vec2 point;       // on the lifted segment i
  double sin_angle = 0.0;
  bool overlap = false;  // collinear overlap; not a transverse double point
};

/// All double points of the loop in the quotient, each unordered pair once
/// (i < j). Candidate pairs come from a uniform grid over the fundamental domain.
std::vector<SegmentHit> self_intersections(const PolylineLoop& loop);

/// Exact segment test with the adjacency guard used by self_intersections.
/// Returns false when the segments do not meet.
bool intersect_segments(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, SegmentHit& hit);

}  // namespace lkt3
