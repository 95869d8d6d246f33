#include <gtest/gtest.h>

#include <cmath>

#include "corpus.hpp"
#include "lkt3/diagram.hpp"
#include "lkt3/errors.hpp"
#include "lkt3/front.hpp"
#include "lkt3/generators.hpp"

using namespace lkt3;
using namespace lkt3::testing;

namespace {

Front circle_front(double radius, int N) {
  Front f;
  for (int i = 0; i < N; ++i) {
    const double a = kTwoPi * i / N;
    f.points.push_back({0.5 + radius * std::cos(a), 0.5 + radius * std::sin(a)});
  }
  return f;
}

}  // namespace

TEST(Reconstruct, CircleBecomesHelix) {
  const LegendrianCurve c = reconstruct_from_front(circle_front(0.1, 512), ContactTorus(1), 0.0, 1);
  EXPECT_EQ(c.period, (Period{0, 0, 1}));
  EXPECT_NEAR(c.lifted(512).z - c.samples[0].z, 1.0, 1e-15);
  EXPECT_NO_THROW(validate_curve(c));
  EXPECT_LT(legendrian_defect(c), 1e-6);
  EXPECT_TRUE(find_cusps(c, Plane::XY).empty());
}

TEST(Reconstruct, CircleWithTwoTurnsOfZIsRefused) {
  try {
    reconstruct_from_front(circle_front(0.1, 256), ContactTorus(1), 0.0, 2);
    FAIL() << "turning mismatch accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("integer gap -2"), std::string::npos) << e.what();
  }
}

TEST(Reconstruct, CircleTurningMustMatchN) {
  // Turning 2 pi against 2 pi n period_z: n = 2 leaves a gap of one full turn.
  EXPECT_THROW(reconstruct_from_front(circle_front(0.1, 256), ContactTorus(2), 0.0, 1), ValidationError);
}

TEST(Reconstruct, TwoCuspFrontGivesContractibleLoop) {
  const Front f = extract_front(contractible_loop(0.4, 1));
  EXPECT_EQ(f.cusps.size(), 2u);
  EXPECT_EQ(f.period_z, 0);
  const LegendrianCurve c = reconstruct_from_front(f, ContactTorus(1));
  EXPECT_TRUE(c.period.is_zero());
  EXPECT_NO_THROW(validate_curve(c));
}

TEST(Reconstruct, UnmarkedReversalIsRefused) {
  Front f = extract_front(contractible_loop(0.4, 1));
  f.cusps.pop_back();
  EXPECT_THROW(reconstruct_from_front(f, ContactTorus(1)), ValidationError);
}

TEST(Reconstruct, SpuriousMarkIsRefused) {
  Front f = circle_front(0.1, 128);
  f.period_z = 1;
  f.cusps.push_back(10);
  EXPECT_THROW(reconstruct_from_front(f, ContactTorus(1)), ValidationError);
}

TEST(Reconstruct, OtherZ0MovesByWholeBranches) {
  const int n = 3;
  const Front f = extract_front(contractible_loop(0.4, n));
  const LegendrianCurve a = reconstruct_from_front(f, ContactTorus(n), 0.0, 0);
  const LegendrianCurve b = reconstruct_from_front(f, ContactTorus(n), 0.45, 0);
  const double shift = (b.samples[0].z - a.samples[0].z) * n;
  EXPECT_NEAR(shift, std::round(shift), 1e-9);
  EXPECT_NE(std::lround(shift), 0);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR((b.samples[i].z - a.samples[i].z) * n, shift, 1e-9);
}

TEST(ExtractFront, RoundTripReproducesCorpusCurves) {
  std::vector<CorpusCurve> curves = quasilinear_grid(256);
  for (auto& c : contractible_suite(256)) curves.push_back(std::move(c));
  for (auto& c : linear_suite(256)) curves.push_back(std::move(c));
  for (const CorpusCurve& cc : curves) {
    const LegendrianCurve& c = cc.curve;
    const LegendrianCurve r = reconstruct_from_front(extract_front(c), c.contact);
    ASSERT_EQ(r.size(), c.size()) << cc.name;
    EXPECT_EQ(r.period, c.period) << cc.name;
    // Same xy points; z agrees up to a global shift by a multiple of 1/n.
    const double shift = r.samples[0].z - c.samples[0].z;
    const double branches = shift * c.contact.n();
    EXPECT_NEAR(branches, std::round(branches), 1e-9) << cc.name;
    double worst = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_EQ(r.samples[i].x, c.samples[i].x);
      EXPECT_EQ(r.samples[i].y, c.samples[i].y);
      worst = std::max(worst, std::abs(r.samples[i].z - shift - c.samples[i].z));
    }
    EXPECT_LT(worst, 1e-4) << cc.name;
  }
}
