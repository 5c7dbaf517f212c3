#include "twophoton/bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twophoton {

std::array<double, 4> ChSettings::phase_differences() const {
  return {phi2 - phi1, phi2_prime - phi1, phi2 - phi1_prime,
          phi2_prime - phi1_prime};
}

void ChSettings::validate() const {
  for (double phi : {phi1, phi1_prime, phi2, phi2_prime}) {
    if (!std::isfinite(phi)) {
      throw std::invalid_argument("ChSettings: detector phases must be finite");
    }
  }
}

ChSettings settings_from_angles(const EmitterPair& pair,
                                const DetectorSetting& r1,
                                const DetectorSetting& r1_prime,
                                const DetectorSetting& r2,
                                const DetectorSetting& r2_prime,
                                const Visibility& v, const Efficiency& eta) {
  return {phase_at(pair, r1), phase_at(pair, r1_prime), phase_at(pair, r2),
          phase_at(pair, r2_prime), v, eta};
}

double star_probability(const Efficiency& e) { return e.value() * e.value(); }

ChResult ch_statistic(const ChSettings& s) {
  s.validate();
  const std::array<double, 4> dphi = s.phase_differences();
  const Efficiency unit{1.0};

  ChResult r;
  r.star = star_probability(s.eta);
  r.visibility = s.v.value();
  for (std::size_t i = 0; i < dphi.size(); ++i) {
    r.terms[i] = joint_probability(dphi[i], s.v, s.eta);
    // P12 / P12(*,*) is the joint probability at unit efficiency; evaluating
    // it directly keeps the statistic bit-identical for every eta.
    r.normalized_terms[i] = joint_probability(dphi[i], s.v, unit);
  }
  r.terms[kR1PrimeStar] = r.star;
  r.terms[kStarR2] = r.star;
  r.normalized_terms[kR1PrimeStar] = 1.0;
  r.normalized_terms[kStarR2] = 1.0;

  double sum = 0.0;
  for (std::size_t i = 0; i < r.normalized_terms.size(); ++i) {
    sum += kChSigns[i] * r.normalized_terms[i];
  }
  r.statistic = sum;
  r.lower_margin = sum + 1.0;
  return r;
}

ChSettings bell_angle_settings(const Visibility& v, const Efficiency& e) {
  constexpr double pi = std::numbers::pi;
  return {0.0, pi / 2.0, pi / 4.0, 3.0 * pi / 4.0, v, e};
}

double critical_visibility() { return 1.0 / std::numbers::sqrt2; }

std::vector<ChResult> scan(const std::vector<Visibility>& visibilities,
                           const std::vector<ChSettings>& settings) {
  if (visibilities.empty() || settings.empty()) {
    throw std::invalid_argument("scan: visibility and settings grids must be nonempty");
  }
  std::vector<ChResult> rows;
  rows.reserve(visibilities.size() * settings.size());
  for (const Visibility& v : visibilities) {
    for (ChSettings s : settings) {
      s.v = v;
      rows.push_back(ch_statistic(s));
    }
  }
  return rows;
}

}  // namespace twophoton
