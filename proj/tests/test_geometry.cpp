#include "twophoton/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracles.hpp"

using namespace twophoton;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(Geometry, PhaseAtExamples) {
  const EmitterPair two_pi(2 * pi);
  EXPECT_EQ(phase_at(two_pi, DetectorSetting(0.0)), 0.0);
  EXPECT_NEAR(phase_at(two_pi, DetectorSetting(pi / 6)), pi, 1e-15);
  EXPECT_EQ(phase_at(EmitterPair(4 * pi), DetectorSetting(pi / 2)), 4 * pi);
}

TEST(Geometry, PhaseDifferenceExamples) {
  const EmitterPair pair(2 * pi);
  const DetectorSetting a(0.3);
  EXPECT_EQ(phase_difference(pair, a, a), 0.0);
  EXPECT_NEAR(phase_difference(pair, DetectorSetting(-pi / 6), DetectorSetting(pi / 6)),
              2 * pi, 1e-14);
}

TEST(Geometry, InversionHitsQuarterPiDifference) {
  const EmitterPair pair(2 * pi);
  // Oracle: bisection on kd*sin(xi) - pi/4, independent of asin.
  const double xi_oracle = oracle::bisect(
      [&](double xi) { return pair.kd() * std::sin(xi) - pi / 4; }, 0.0, pi / 2);
  EXPECT_NEAR(xi_oracle, std::asin(1.0 / 8.0), 1e-12);

  const DetectorSetting b = setting_for_phase(pair, pi / 4);
  EXPECT_NEAR(b.xi(), xi_oracle, 1e-12);
  EXPECT_NEAR(phase_difference(pair, DetectorSetting(0.0), b), pi / 4, 1e-12);
}

TEST(Geometry, InversionRejectsUnreachablePhase) {
  const EmitterPair pair(1.0);
  EXPECT_THROW(setting_for_phase(pair, 1.5), std::domain_error);
  EXPECT_THROW(setting_for_phase(pair, std::nan("")), std::invalid_argument);
  EXPECT_NO_THROW(setting_for_phase(pair, -1.0));
}

TEST(Geometry, RejectsInvalidInputs) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(EmitterPair{0.0}, std::invalid_argument);
  EXPECT_THROW(EmitterPair{-1.0}, std::invalid_argument);
  EXPECT_THROW(EmitterPair{inf}, std::invalid_argument);
  EXPECT_THROW(EmitterPair(std::nan("")), std::invalid_argument);
  EXPECT_THROW(DetectorSetting{std::nan("")}, std::invalid_argument);
  EXPECT_THROW(DetectorSetting{pi / 2 + 1e-9}, std::invalid_argument);
  EXPECT_THROW(DetectorSetting{-inf}, std::invalid_argument);
  EXPECT_NO_THROW(DetectorSetting(-pi / 2));
}

TEST(Geometry, RandomizedProperties) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> xi_dist(-pi / 2, pi / 2);
  std::uniform_real_distribution<double> kd_dist(1e-3, 1e3);
  for (int i = 0; i < 10000; ++i) {
    const EmitterPair pair(kd_dist(rng));
    const DetectorSetting a(xi_dist(rng));
    const DetectorSetting b(xi_dist(rng));
    EXPECT_EQ(phase_difference(pair, a, b), -phase_difference(pair, b, a));
    EXPECT_EQ(phase_difference(pair, a, b), phase_at(pair, b) - phase_at(pair, a));
    EXPECT_EQ(phase_at(pair, a), -phase_at(pair, DetectorSetting(-a.xi())));

    const double phase = phase_at(pair, a);
    EXPECT_NEAR(phase_at(pair, setting_for_phase(pair, phase)), phase,
                1e-12 * std::max(1.0, pair.kd()));
  }
}
