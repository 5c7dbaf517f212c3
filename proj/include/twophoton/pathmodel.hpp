#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "twophoton/correlations.hpp"
#include "twophoton/quantum_core.hpp"

namespace twophoton {

/// Pure state over the 0/1 occupations of the four selected modes k1..k4.
///
/// Basis kets are indexed by their occupation pattern read as a binary number
/// with k1 as the most significant bit, so |1001> has index 9 and the vacuum
/// |0000> index 0. Amplitudes are left unnormalized unless stated otherwise.
class FourModeState {
public:
  static constexpr std::size_t kModes = 4;
  static constexpr std::size_t kDim = 16;

  FourModeState() = default;

  /// Unit amplitude on the ket written as four 0/1 characters, e.g. "1001".
  static FourModeState ket(std::string_view occupations);

  static std::size_t index_of(std::string_view occupations);
  static std::string label_of(std::size_t index);
  /// Number of photons in basis ket `index`.
  static int photon_number(std::size_t index);

  Complex& operator[](std::size_t index) { return amps_.at(index); }
  const Complex& operator[](std::size_t index) const { return amps_.at(index); }
  Complex& operator[](std::string_view occupations) {
    return amps_[index_of(occupations)];
  }
  const Complex& operator[](std::string_view occupations) const {
    return amps_[index_of(occupations)];
  }

  const std::array<Complex, kDim>& amplitudes() const { return amps_; }

  double norm_squared() const;
  bool is_finite() const;
  bool is_zero() const { return norm_squared() == 0.0; }

  FourModeState& operator+=(const FourModeState& other);
  FourModeState& operator*=(Complex factor);
  friend FourModeState operator+(FourModeState a, const FourModeState& b) {
    return a += b;
  }
  friend FourModeState operator*(Complex factor, FourModeState s) {
    return s *= factor;
  }

  bool operator==(const FourModeState&) const = default;

private:
  std::array<Complex, kDim> amps_{};
};

/// Split of the four modes into two nonempty complementary groups.
/// Modes are numbered 1..4.
class Bipartition {
public:
  explicit Bipartition(std::initializer_list<int> left_modes);

  /// Bit i set means mode k_{i+1} is on the left.
  const std::bitset<FourModeState::kModes>& left() const { return left_; }
  std::vector<int> left_modes() const;
  std::vector<int> right_modes() const;

private:
  std::bitset<FourModeState::kModes> left_;
};

enum class DetectorStage { First, Second };

/// |1001> + |0110>, or the same divided by sqrt2 when `normalized`.
FourModeState postselected_state(bool normalized = false);

/// First detector:  |0001><1001| + e^{i phase} |0010><0110|.
/// Second detector: |0000><0010| + e^{i phase} |0000><0001|.
/// Amplitudes outside the operator's support are dropped.
FourModeState apply_detector(DetectorStage stage, double phase,
                             const FourModeState& s);

/// Vacuum amplitude after both detections, e^{i phi2} + e^{i phi1}.
Complex final_amplitude(double phi1, double phi2);

/// Path-model second-order correlation 1 + v cos(phi2 - phi1).
double g2_path(double phi1, double phi2, const Visibility& v);

/// Singular values of the amplitude matrix reshaped across `split`, divided
/// by the state norm and sorted descending. Throws on the zero state.
std::vector<double> schmidt_coefficients(const FourModeState& s,
                                         const Bipartition& split);

/// Number of singular values above tol times the largest one.
int schmidt_rank(const FourModeState& s, const Bipartition& split,
                 double tol = 1e-10);

}  // namespace twophoton
