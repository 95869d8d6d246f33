#pragma once

#include <cstdint>

#include "lkt3/config.hpp"
#include "lkt3/contact.hpp"

namespace lkt3 {

struct QuasilinearSpec {
  int p = 0;
  int q = 0;
  int r = 1;
  int n = 1;
  double smoothing = 0.1;  // planar drift as a fraction of the vertical speed; must lie in (0, 0.5)
  int samples = 512;
};

/// (p,q,r)-periodic Legendrian knot with monotone z. For r != 0 the planar
/// velocity is sigma(t) W(2 pi n z) with sigma chosen so that one circuit
/// closes up with planar drift (p, q); for r = 0 it is the linear knot
/// (p t, q t, z0) with (p, q) orthogonal to the co-orienting normal.
LegendrianCurve quasilinear(const QuasilinearSpec& spec);

/// Two-cusp front in R^3 / xi_std: tb = -1, r = 0.
LegendrianCurve r3_unknot(int samples = 512);

/// sign > 0: right trefoil with 3 positive front crossings and 4 cusps (tb = 1, r = 0).
/// sign < 0: left trefoil with 3 negative crossings and 6 cusps (tb = -6, r = 1).
LegendrianCurve r3_trefoil(int sign, int samples = 512);

/// Lens-shaped two-cusp front of width `scale` centred in the unit square,
/// lifted by front reconstruction with period_z = 0. `rotation` turns the
/// lens; it is nudged away from angles that put a vertical tangent at integral 2nz.
LegendrianCurve contractible_loop(double scale, int n = 1, double rotation = 0.0, int samples = 512);

/// Applies x -> x + magnitude * B(x) for a seeded smooth periodic field B on
/// T^2 with max |B| <= 1 to the xy front and reconstructs the curve.
/// Throws GenericityError when magnitude exceeds the input's genericity
/// margin or the result is no longer generic.
LegendrianCurve perturb_front(const LegendrianCurve& curve, std::uint64_t seed, double magnitude,
                              const Tolerances& tol = {});

}  // namespace lkt3
