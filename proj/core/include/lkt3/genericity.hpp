#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lkt3/config.hpp"
#include "lkt3/contact.hpp"

namespace lkt3 {

struct GenericityReport {
  bool curvature_ok = true;  // informational; straight lines have zero curvature
  bool double_points_transverse = true;
  bool cusps_semicubical = true;
  bool condition3_ok = true;
  double worst_margin = 0.0;
  std::optional<double> condition3_t;
  std::vector<std::string> notes;

  bool ok() const { return double_points_transverse && cusps_semicubical && condition3_ok; }
};

/// Inspects the projections the invariants use (xy and xz on T^3, the front
/// on R^3). Reports and never throws.
GenericityReport check_genericity(const LegendrianCurve& curve, const Tolerances& tol = {});

}  // namespace lkt3
