#include "twophoton/correlations.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"

using namespace twophoton;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(G1, ConstantE0Squared) {
  EXPECT_EQ(g1(FieldParams(1.0)), 1.0);
  EXPECT_EQ(g1(FieldParams(2.0)), 4.0);
}

TEST(G2, Examples) {
  const FieldParams unit(1.0);
  EXPECT_EQ(g2(0.0, unit, Visibility(1.0)), 1.0);
  EXPECT_EQ(g2(pi, unit, Visibility(1.0)), 0.0);
  EXPECT_NEAR(g2(pi / 2, unit, Visibility(0.8)), 0.5, 1e-16);
  EXPECT_EQ(g2(0.0, FieldParams(2.0), Visibility(1.0)), 16.0);
}

TEST(G2, GeometryOverload) {
  const EmitterPair pair(2 * pi);
  // Angles +-pi/6 give a 2pi phase difference: full constructive fringe.
  EXPECT_NEAR(g2(pair, DetectorSetting(-pi / 6), DetectorSetting(pi / 6), FieldParams(1.0),
                 Visibility(1.0)),
              1.0, 1e-15);
  EXPECT_NEAR(g2(pair, DetectorSetting(0.0), DetectorSetting(pi / 6), FieldParams(1.0),
                 Visibility(1.0)),
              0.0, 1e-15);
}

TEST(Probabilities, Examples) {
  const FieldParams unit(1.0);
  EXPECT_EQ(marginal_probability(Efficiency(1.0), unit), 1.0);
  EXPECT_EQ(marginal_probability(Efficiency(0.3), unit), 0.3);
  EXPECT_EQ(marginal_probability(Efficiency(0.3), FieldParams(1.7)), 0.3);
  EXPECT_EQ(joint_probability(0.0, Visibility(1.0), Efficiency(1.0)), 1.0);
  EXPECT_NEAR(joint_probability(pi / 2, Visibility(0.37), Efficiency(0.5)), 0.125, 1e-16);
  EXPECT_EQ(conditional_probability(pi, Visibility(1.0), Efficiency(0.7)), 0.0);
  EXPECT_EQ(conditional_probability(0.0, Visibility(1.0), Efficiency(1.0)), 1.0);
}

TEST(Probabilities, MarginalIndependentOfDetector) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> xi(-pi / 2, pi / 2);
  const EmitterPair pair(12.0);
  const FieldParams p(1.4);
  const Efficiency e(0.42);
  const double reference = g1(p);
  for (int i = 0; i < 50; ++i) {
    const DetectorSetting det(xi(rng));
    // The first-order field intensity at det: |E^-(det)|ee>|^2.
    const double intensity =
        apply_field_negative(pair, det, p, AtomicState::excited()).norm_squared();
    EXPECT_NEAR(intensity, reference, 1e-13);
    EXPECT_EQ(marginal_probability(e, p), 0.42);
  }
}

TEST(Probabilities, JointAveragesToHalfEtaSquared) {
  for (double v : {0.0, 0.3, 0.7071, 1.0}) {
    for (double eta : {0.1, 0.5, 1.0}) {
      const double mean = oracle::periodic_mean(
          [&](double dphi) { return joint_probability(dphi, Visibility(v), Efficiency(eta)); },
          64);
      EXPECT_NEAR(mean, eta * eta / 2, 1e-10) << "v=" << v << " eta=" << eta;
    }
  }
}

TEST(Probabilities, FactorizationAndBounds) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> xi(-pi / 2, pi / 2);
  for (int i = 0; i < 10000; ++i) {
    const EmitterPair pair(0.5 + 20 * unit(rng));
    const DetectorSetting d1(xi(rng)), d2(xi(rng));
    const FieldParams p(0.2 + 3 * unit(rng));
    const Visibility v(unit(rng));
    const Efficiency e(std::max(1e-6, unit(rng)));

    const double joint = joint_probability(pair, d1, d2, p, v, e);
    const double cond = conditional_probability(pair, d1, d2, p, v, e);
    const double marg = marginal_probability(e, p);
    EXPECT_EQ(cond * marg, joint);
    EXPECT_GE(joint, 0.0);
    EXPECT_LE(joint, e.value() * e.value());

    const double g = g2(pair, d1, d2, p, v);
    const double e4 = std::pow(p.e0(), 4);
    EXPECT_GE(g, 0.0);
    EXPECT_LE(g, e4 * (1 + 1e-15));
    EXPECT_EQ(g, g2(pair, d2, d1, p, v));
    EXPECT_NEAR(joint, e.value() * e.value() / e4 * g, 1e-15);
  }
}

TEST(G2, AffineInVisibility) {
  const FieldParams p(1.3);
  for (double dphi : {0.0, 0.4, 1.9, pi, 5.0}) {
    const double g0 = g2(dphi, p, Visibility(0.0));
    const double g1v = g2(dphi, p, Visibility(1.0));
    for (double v : {0.1, 0.25, 0.5, 0.9}) {
      EXPECT_NEAR(g2(dphi, p, Visibility(v)), g0 + v * (g1v - g0), 1e-14);
    }
  }
}

TEST(Validation, VisibilityAndEfficiencyBounds) {
  EXPECT_THROW(Visibility(-0.01), std::invalid_argument);
  EXPECT_THROW(Visibility(1.0001), std::invalid_argument);
  EXPECT_THROW(Visibility(std::nan("")), std::invalid_argument);
  EXPECT_NO_THROW(Visibility(0.0));
  EXPECT_THROW(Efficiency(0.0), std::invalid_argument);
  EXPECT_THROW(Efficiency(1.5), std::invalid_argument);
  EXPECT_THROW(Efficiency(std::nan("")), std::invalid_argument);
  EXPECT_THROW(g2(std::nan(""), FieldParams(1.0), Visibility(1.0)), std::invalid_argument);
}
