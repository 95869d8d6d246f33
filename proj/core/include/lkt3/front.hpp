#pragma once

#include <cstddef>
#include <vector>

#include "lkt3/contact.hpp"

namespace lkt3 {

/// A planar xy front on T^2: one circuit of its planar lift plus cusp marks.
/// The z coordinate of the Legendrian lift is recovered from the tangent line.
struct Front {
  std::vector<Vec2> points;
  std::vector<std::size_t> cusps;  // vertex indices where the chord direction reverses
  int period_x = 0;
  int period_y = 0;
  double z0 = 0.0;
  int period_z = 0;
  int initial_branch = 0;  // parity of the branch of the mod-pi tangent line at vertex 0
};

/// Rebuilds a Legendrian curve whose xy projection is the front. Throws
/// ValidationError when the turning does not match period_z (the message
/// carries the integer gap) or when the cusp marks disagree with the front.
LegendrianCurve reconstruct_from_front(const Front& front, const ContactTorus& contact, double z0, int period_z);
LegendrianCurve reconstruct_from_front(const Front& front, const ContactTorus& contact);

/// xy front of a T^3 curve with cusp marks from the diagram extractor;
/// z0, period_z and the branch are read off the curve so that
/// reconstruct_from_front(extract_front(c), c.contact) reproduces c.
Front extract_front(const LegendrianCurve& curve, const Tolerances& tol = {});

}  // namespace lkt3
