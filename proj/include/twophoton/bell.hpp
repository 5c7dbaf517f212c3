#pragma once

#include <array>
#include <vector>

#include "twophoton/correlations.hpp"
#include "twophoton/geometry.hpp"

namespace twophoton {

/// Detector phases for the two settings of each detector, plus the
/// visibility and efficiency the probabilities are evaluated with.
struct ChSettings {
  double phi1 = 0.0;
  double phi1_prime = 0.0;
  double phi2 = 0.0;
  double phi2_prime = 0.0;
  Visibility v{};
  Efficiency eta{};

  /// The four signed phase differences, in the order the coincidence terms
  /// enter the CH74 combination: (r1,r2), (r1,r2'), (r1',r2), (r1',r2').
  std::array<double, 4> phase_differences() const;

  void validate() const;
};

/// Builds settings from far-field detector angles via the emitter geometry.
ChSettings settings_from_angles(const EmitterPair& pair,
                                const DetectorSetting& r1,
                                const DetectorSetting& r1_prime,
                                const DetectorSetting& r2,
                                const DetectorSetting& r2_prime,
                                const Visibility& v, const Efficiency& eta);

/// Index of each entry in ChResult::terms.
enum ChTerm : std::size_t {
  kR1R2 = 0,
  kR1R2Prime = 1,
  kR1PrimeR2 = 2,
  kR1PrimeR2Prime = 3,
  kR1PrimeStar = 4,
  kStarR2 = 5,
};

/// Signs with which ChResult::terms enter the CH74 combination.
inline constexpr std::array<double, 6> kChSigns{+1.0, -1.0, +1.0, +1.0, -1.0, -1.0};

/// Evaluated CH74 combination
///   P(r1,r2) - P(r1,r2') + P(r1',r2) + P(r1',r2') - P(r1',*) - P(*,r2)
/// normalized by P(*,*) = eta^2.
struct ChResult {
  /// Upper-bound margin; the inequality is violated iff statistic > 0.
  double statistic = 0.0;
  /// Normalized distance above the lower bound -P(*,*); statistic + 1.
  double lower_margin = 0.0;
  /// The six probabilities as measured, in ChTerm order.
  std::array<double, 6> terms{};
  /// Each term divided by P(*,*). statistic is their signed sum.
  std::array<double, 6> normalized_terms{};
  /// P(*,*) = eta^2.
  double star = 0.0;
  double visibility = 0.0;

  bool violated() const { return statistic > 0.0; }
};

/// Coincidence probability through the single-mode-fiber arrangement, eta^2.
double star_probability(const Efficiency& e);

ChResult ch_statistic(const ChSettings& s);

/// Phases 0, pi/2, pi/4, 3pi/4 for r1, r1', r2, r2': the phase differences
/// are (pi/4, 3pi/4, -pi/4, pi/4), which reach v*sqrt2 - 1.
ChSettings bell_angle_settings(const Visibility& v, const Efficiency& e = Efficiency{});

/// Smallest visibility above which the Bell-angle statistic is positive: 1/sqrt2.
double critical_visibility();

/// One ChResult per (visibility, settings) pair with the visibility taken
/// from `visibilities`; outer loop over visibilities, inner over settings.
std::vector<ChResult> scan(const std::vector<Visibility>& visibilities,
                           const std::vector<ChSettings>& settings);

}  // namespace twophoton
