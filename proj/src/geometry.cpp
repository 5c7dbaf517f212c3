#include "twophoton/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twophoton {

EmitterPair::EmitterPair(double kd) : kd_(kd) {
  if (!std::isfinite(kd) || kd <= 0.0) {
    throw std::invalid_argument("EmitterPair: kd must be finite and > 0, got " +
                                std::to_string(kd));
  }
}

DetectorSetting::DetectorSetting(double xi) : xi_(xi) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (!std::isfinite(xi) || xi < -half_pi || xi > half_pi) {
    throw std::invalid_argument(
        "DetectorSetting: xi must be finite and within [-pi/2, pi/2], got " +
        std::to_string(xi));
  }
}

double phase_at(const EmitterPair& pair, const DetectorSetting& det) {
  return pair.kd() * std::sin(det.xi());
}

double phase_difference(const EmitterPair& pair, const DetectorSetting& a,
                        const DetectorSetting& b) {
  return phase_at(pair, b) - phase_at(pair, a);
}

DetectorSetting setting_for_phase(const EmitterPair& pair, double phase) {
  if (!std::isfinite(phase)) {
    throw std::invalid_argument("setting_for_phase: phase must be finite");
  }
  const double s = phase / pair.kd();
  if (std::abs(s) > 1.0) {
    throw std::domain_error("setting_for_phase: |phase| = " +
                            std::to_string(std::abs(phase)) +
                            " exceeds kd = " + std::to_string(pair.kd()));
  }
  return DetectorSetting(std::asin(s));
}

}  // namespace twophoton
