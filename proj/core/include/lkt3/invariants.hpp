#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lkt3/config.hpp"
#include "lkt3/contact.hpp"
#include "lkt3/diagram.hpp"
#include "lkt3/genericity.hpp"

namespace lkt3 {

/// Exact value in (1/2) Z, stored as twice the value.
class HalfInt {
 public:
  constexpr HalfInt(int v = 0) : twice_(2 * v) {}
  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }
  std::string str() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

 private:
  int twice_ = 0;
};

/// Sign of the rotation picked up against a section twisted by 2 pi m z:
/// r_with_twisted_section = r_direct + kTwistSign * m * r_period.
inline constexpr int kTwistSign = -1;

HalfInt tb_xy(const Diagram& d);
int tb_xz(const Diagram& d);
HalfInt r_xy(const Diagram& d);
HalfInt r_xz(const std::vector<VerticalEvent>& events);
HalfInt r_xz(const Diagram& d);

/// Winding of the tangent against the vertical section Z inside xi_n.
int r_direct(const LegendrianCurve& curve, const Tolerances& tol = {});
int r_with_twisted_section(const LegendrianCurve& curve, int m, const Tolerances& tol = {});

/// Twisting of the contact framing against a constant framing X orthogonal to
/// the period. Only meaningful for quasilinear curves, which are required to
/// carry generator metadata.
int tb_oracle_quasilinear(const LegendrianCurve& curve, const Tolerances& tol = {});

/// The constant vector used by tb_oracle_quasilinear.
Vec3 constant_framing_vector(const Period& period);

struct ClassicalInvariants {
  HalfInt tb;
  HalfInt r;
};

/// Front: tb = P - N - C/2, r = (C_d - C_u)/2. Lagrangian: tb = P - N, r = winding.
ClassicalInvariants classical_r3(const Diagram& d);

/// Unit normal vectors along the curve, one per sample.
using Framing = std::vector<Vec3>;

Framing constant_framing(const LegendrianCurve& curve, const Vec3& x);
Framing contact_framing(const LegendrianCurve& curve);
/// Projects a fixed ambient direction into the normal planes (a blackboard collar).
Framing projected_framing(const LegendrianCurve& curve, const Vec3& direction);
/// For curves whose planar part is a circle around a fixed centre: the radial direction.
Framing radial_framing(const LegendrianCurve& curve, const Vec3& axis_point);

/// Full turns of framing_b relative to framing_a in the normal plane oriented
/// by the tangent. Throws PreconditionError if a framing is not normal.
int relative_framing_rotation(const LegendrianCurve& curve, const Framing& a, const Framing& b,
                              const Tolerances& tol = {});

struct BennequinVerdict {
  HalfInt lhs;
  HalfInt rhs;
  bool holds = false;
  bool equality = false;

  std::string verdict() const { return equality ? "equality" : (holds ? "holds" : "violated"); }
};

BennequinVerdict bennequin_check(HalfInt tb, HalfInt r, int chi, int r_period, int n);

enum class TbMethod { XY, XZ, Oracle };
const char* to_string(TbMethod m);
TbMethod tb_method_from_string(const std::string& s);

struct ReportOptions {
  bool xy = true;
  bool xz = true;
  bool oracle = false;
  bool seifert = false;
  TbMethod bennequin_method = TbMethod::XY;
};

struct InvariantReport {
  Ambient ambient = Ambient::T3;
  Period period;
  int n = 1;
  std::optional<HalfInt> tb_xy;
  std::optional<int> tb_xz;
  std::optional<HalfInt> r_xy;
  std::optional<HalfInt> r_xz;
  std::optional<int> r_direct;
  std::optional<int> tb_oracle;
  std::optional<HalfInt> tb_front, r_front, tb_lagrangian, r_lagrangian;  // R^3 curves
  std::optional<Tallies> xy_tallies, xz_tallies, front_tallies, lagrangian_tallies;
  std::optional<int> chi;
  std::optional<BennequinVerdict> bennequin;
  std::string bennequin_method;
  std::vector<std::string> method_disagreements;
  std::vector<std::string> notes;  // methods that could not be applied, with the reason
  GenericityReport genericity;
};

InvariantReport compute_report(const LegendrianCurve& curve, const ReportOptions& opt = {},
                               const Tolerances& tol = {});

/// Reports for many curves, computed in parallel; output order follows input.
/// A curve that fails entirely yields a report whose notes carry the error.
std::vector<InvariantReport> batch_reports(const std::vector<LegendrianCurve>& curves, const ReportOptions& opt,
                                           const RunConfig& cfg);

}  // namespace lkt3
