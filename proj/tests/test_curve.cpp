#include <cmath>
#include <numbers>

#include <boost/math/special_functions/ellint_2.hpp>
#include <gtest/gtest.h>

#include "hardy/curve.hpp"

using namespace hardy;
using std::numbers::pi;

TEST(Curve, UnitCircleLengthAndWeights) {
  const JordanCurve c = make_unit_circle(1024);
  EXPECT_EQ(c.size(), 1024u);
  EXPECT_EQ(c.kind(), CurveKind::unit_circle);
  EXPECT_NEAR(c.total_length(), 2.0 * pi, 1e-12);
  for (Eigen::Index j = 0; j < 1024; ++j) EXPECT_GT(c.arc_weights()[j], 0.0);
  EXPECT_NEAR(std::abs(c.node(256) - cplx(0.0, 1.0)), 0.0, 1e-14);
}

TEST(Curve, CircleTangentIsITimesNode) {
  const JordanCurve c = make_unit_circle(64);
  for (std::size_t j = 0; j < c.size(); ++j) EXPECT_NEAR(std::abs(c.unit_tangent(j) - cplx(0, 1) * c.node(j)), 0.0, 1e-14);
  EXPECT_LT(tangent_residual(c), 1e-2);
}

TEST(Curve, EllipsePerimeterMatchesEllipticIntegral) {
  // perimeter 4 a E(e), e^2 = 1 - b^2 / a^2
  const double a = 2.0, b = 1.0;
  const double exact = 4.0 * a * boost::math::ellint_2(std::sqrt(1.0 - b * b / (a * a)));
  const JordanCurve c = make_ellipse(a, b, 512);
  EXPECT_NEAR(c.total_length(), exact, 1e-12 * exact);
}

TEST(Curve, PerturbedCircleIsCounterClockwiseAndSimple) {
  const JordanCurve c = make_perturbed_circle(0.2, 5, 1024);
  EXPECT_TRUE(is_simple_polyline(c.nodes()));
  EXPECT_TRUE(c.contains(0.0));
  EXPECT_FALSE(c.contains(cplx(1.5, 0.0)));
  EXPECT_LT(tangent_residual(c), 1e-3);
}

TEST(Curve, SquareHasCorners) {
  const JordanCurve c = make_square(400);
  EXPECT_NEAR(c.total_length(), 4.0, 1e-12);
  EXPECT_TRUE(c.contains(0.0));
  // tangent angles take the four edge directions only
  for (Eigen::Index j = 0; j < 400; ++j) {
    const double th = c.tangent_angles()[j];
    const double quarter = th / (pi / 2.0);
    EXPECT_NEAR(quarter, std::round(quarter), 1e-12);
  }
}

TEST(Curve, RejectsDegenerateInput) {
  EXPECT_THROW(make_unit_circle(4), ValidationError);
  EXPECT_THROW(make_ellipse(0.0, 1.0, 64), ValidationError);
  // open path
  EXPECT_THROW(make_parametric_curve("open", [](double s) { return cplx(s, 0.0); }, [](double) { return cplx(1.0, 0.0); }, 64),
               ValidationError);
  // clockwise circle
  auto cw = [](double s) { return std::polar(1.0, -2.0 * pi * s); };
  auto dcw = [](double s) { return cplx(0.0, -2.0 * pi) * std::polar(1.0, -2.0 * pi * s); };
  EXPECT_THROW(make_parametric_curve("cw", cw, dcw, 64), ValidationError);
  // figure eight self-intersects
  auto eight = [](double s) { return cplx(std::sin(2.0 * pi * s), std::sin(4.0 * pi * s) / 2.0 + 1e-3 * std::cos(2 * pi * s)); };
  auto deight = [](double s) {
    return cplx(2.0 * pi * std::cos(2.0 * pi * s), 2.0 * pi * std::cos(4.0 * pi * s) - 2e-3 * pi * std::sin(2 * pi * s));
  };
  EXPECT_THROW(make_parametric_curve("eight", eight, deight, 256), ValidationError);
  // vanishing derivative
  EXPECT_THROW(make_parametric_curve("stall", [](double s) { return std::polar(1.0, 2 * pi * s); }, [](double) { return cplx(0.0); }, 64),
               ValidationError);
  JordanCurve c = make_unit_circle(8);
  EXPECT_THROW(JordanCurve("bad", CurveKind::parametric, c.nodes(), -c.arc_weights(), c.tangent_angles()), ValidationError);
}

TEST(Curve, PortionLengthOnCircleMatchesChordFormula) {
  // |Gamma(t, eps)| = 4 arcsin(eps / 2) on the unit circle
  const JordanCurve c = make_unit_circle(1 << 14);
  for (double eps : {0.05, 0.3, 1.0, 1.7}) {
    const PortionLength p = portion_length(c, 123, eps);
    EXPECT_FALSE(p.under_resolved);
    EXPECT_NEAR(p.length, 4.0 * std::asin(eps / 2.0), 2.0 * c.node_spacing());
  }
  EXPECT_TRUE(portion_length(c, 0, 1e-6).under_resolved);
  EXPECT_THROW(portion_length(c, 0, 0.0), ValidationError);
}

TEST(Curve, CarlesonConstantOfCircleIsPi) {
  const JordanCurve c = make_unit_circle(4096);
  const CarlesonReport r = carleson_constant(c, log_epsilon_grid(c, 33, 2.0), 64);
  EXPECT_NEAR(r.constant_estimate, pi, 0.01 * pi);
  EXPECT_NEAR(r.argmax_radius, 2.0, 1e-12);
}

TEST(Curve, LogGridDoublingIsNested) {
  const JordanCurve c = make_ellipse(1.5, 1.0, 512);
  const auto coarse = log_epsilon_grid(c, 9), fine = log_epsilon_grid(c, 17);
  for (std::size_t i = 0; i < coarse.size(); ++i) EXPECT_NEAR(coarse[i], fine[2 * i], 1e-12 * coarse[i]);
  EXPECT_NEAR(c.diameter(), 3.0, 1e-9);
}

TEST(Curve, CarlesonOfSquareIsBounded) {
  const JordanCurve c = make_square(1024);
  const CarlesonReport r = carleson_constant(c, log_epsilon_grid(c, 33), 8);
  // a corner centre sees two half-edges: 2 eps / eps; the whole curve over the diameter sqrt(2) gives 4 / sqrt(2)
  EXPECT_GE(r.constant_estimate, 2.0 - 0.05);
  EXPECT_LE(r.constant_estimate, 4.0);
}
