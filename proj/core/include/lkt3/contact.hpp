#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lkt3/config.hpp"
#include "lkt3/vec.hpp"

namespace lkt3 {

enum class Ambient { T3, R3 };

const char* to_string(Ambient a);

/// The tight contact structure xi_n = ker(cos(2 pi n z) dx + sin(2 pi n z) dy) on T^3.
class ContactTorus {
 public:
  explicit ContactTorus(int n = 1);

  int n() const { return n_; }

  /// Angle 2 pi n z of the co-orienting normal in the xy-plane.
  double phase(double z) const { return kTwoPi * n_ * z; }

  /// The 1-form evaluated on a tangent vector at a point.
  double omega(const Vec3& point, const Vec3& v) const;

 private:
  int n_;
};

/// Orthonormal frame adapted to xi_n at a point: Y is the co-orienting normal,
/// W and Z span the contact plane with (W, Z) positively oriented.
struct Frame {
  Vec3 Y;
  Vec3 W;
  Vec3 Z;
};

Frame contact_frame(const ContactTorus& contact, const Vec3& point);

/// Period vector of the lift: lift(t + 1) = lift(t) + period.
struct Period {
  int p = 0;
  int q = 0;
  int r = 0;

  bool is_zero() const { return p == 0 && q == 0 && r == 0; }
  bool is_primitive() const;
  Vec3 vec() const { return {double(p), double(q), double(r)}; }
  Period operator-() const { return {-p, -q, -r}; }
  bool operator==(const Period&) const = default;
};

/// Provenance recorded by the generators; consumed by the oracles that
/// need to know how a curve was built (e.g. the quasilinear framing oracle).
struct CurveMeta {
  std::string generator;
  std::map<std::string, double> params;

  bool empty() const { return generator.empty() && params.empty(); }
  bool operator==(const CurveMeta&) const = default;
};

/// One circuit of the lift of a Legendrian knot, sampled uniformly at
/// t_i = i / N. Coordinates are universal-cover reals.
struct LegendrianCurve {
  Ambient ambient = Ambient::T3;
  ContactTorus contact{1};
  std::vector<Vec3> samples;
  Period period;
  int orientation = 1;
  CurveMeta meta;

  std::size_t size() const { return samples.size(); }
  double step() const { return 1.0 / double(samples.size()); }

  /// Sample with an arbitrary integer index; wraps across circuits using the period.
  Vec3 lifted(long i) const;

  /// Centered finite difference of the lift at sample i, per unit parameter.
  Vec3 velocity(long i) const;
};

/// Worst deviation of the sampled curve from the contact plane field,
/// measured at segment midpoints relative to the local speed.
struct DefectMeasurement {
  double value = 0.0;
  std::size_t index = 0;
};

DefectMeasurement measure_defect(const LegendrianCurve& curve);
double legendrian_defect(const LegendrianCurve& curve);

/// Checks closure, embeddedness and the Legendrian
/// defect. Throws ValidationError naming the offending sample.
void validate_curve(const LegendrianCurve& curve, const Tolerances& tol = {});

/// Reverses the traversal direction. The first sample is kept and the rest
/// are re-lifted so that the result is again one circuit of the same lift.
LegendrianCurve reverse_orientation(const LegendrianCurve& curve);

/// Shifts the parameter origin by `k` samples without changing the knot.
LegendrianCurve rotate_start(const LegendrianCurve& curve, long k);

}  // namespace lkt3
