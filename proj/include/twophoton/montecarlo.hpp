#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "twophoton/bell.hpp"

namespace twophoton {

/// One simulated coincidence run: `trials_per_setting` excitation cycles for
/// each of the four detector-setting pairs.
struct McConfig {
  std::uint64_t seed = 0;
  std::uint64_t trials_per_setting = 1;
  ChSettings settings{};
  /// Worker threads; 0 picks std::thread::hardware_concurrency(). Results do
  /// not depend on this value.
  unsigned workers = 0;

  void validate() const;
};

/// Coincidence counts per setting pair, in ChTerm order (r1r2, r1r2', r1'r2, r1'r2').
using McCounts = std::array<std::uint64_t, 4>;

struct McEstimate {
  double statistic_hat = 0.0;
  double std_error = 0.0;
  McCounts counts{};
  std::uint64_t trials = 0;

  /// statistic_hat / std_error; +-inf when the error vanishes and the
  /// estimate does not.
  double sigma_violation() const;
};

/// Number of trials drawn from one random substream.
inline constexpr std::uint64_t kMcBlockSize = std::uint64_t{1} << 16;

/// Generator for block `block` of setting pair `term`. Every block is an
/// independent substream, so blocks can be drawn in any order or in parallel.
std::mt19937_64 mc_block_engine(std::uint64_t seed, std::size_t term,
                                std::uint64_t block);

/// Maps one 64-bit engine output to a uniform double in [0, 1).
inline double mc_unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Bernoulli coincidence counts with success probability joint_probability
/// for each setting pair. Deterministic in (seed, trials, settings).
McCounts simulate_counts(const McConfig& cfg);

/// Plug-in estimate of the normalized CH74 statistic with exact star terms,
/// with binomial standard error propagated through the four counted terms.
McEstimate estimate_ch(const McConfig& cfg);

}  // namespace twophoton
