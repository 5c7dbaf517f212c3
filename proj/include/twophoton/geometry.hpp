#pragma once

namespace twophoton {

/// Two emitters separated by d, radiating at wavenumber k. Only the product
/// kd enters the far-field phases.
class EmitterPair {
public:
  explicit EmitterPair(double kd);

  double kd() const { return kd_; }

private:
  double kd_;
};

/// Far-field detector direction. xi is measured from the perpendicular
/// bisector of the emitter axis, so xi = 0 is the symmetric point.
class DetectorSetting {
public:
  explicit DetectorSetting(double xi);

  double xi() const { return xi_; }

private:
  double xi_;
};

/// Relative phase kd*sin(xi) between the two emission paths at a detector.
double phase_at(const EmitterPair& pair, const DetectorSetting& det);

/// phase_at(pair, b) - phase_at(pair, a).
double phase_difference(const EmitterPair& pair, const DetectorSetting& a,
                        const DetectorSetting& b);

/// Inverse of phase_at: the detector angle whose phase equals `phase`.
/// Throws std::domain_error when |phase| > kd (no such direction exists).
DetectorSetting setting_for_phase(const EmitterPair& pair, double phase);

}  // namespace twophoton
