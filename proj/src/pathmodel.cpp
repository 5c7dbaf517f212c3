#include "twophoton/pathmodel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twophoton {

namespace {

// Bit position of mode k_m (1-based) inside a basis index; k1 is the MSB.
constexpr std::size_t bit_of_mode(int mode) {
  return FourModeState::kModes - static_cast<std::size_t>(mode);
}

constexpr std::size_t k1001 = 0b1001;
constexpr std::size_t k0110 = 0b0110;
constexpr std::size_t k0001 = 0b0001;
constexpr std::size_t k0010 = 0b0010;
constexpr std::size_t k0000 = 0b0000;

}  // namespace

FourModeState FourModeState::ket(std::string_view occupations) {
  FourModeState s;
  s[index_of(occupations)] = 1.0;
  return s;
}

std::size_t FourModeState::index_of(std::string_view occupations) {
  if (occupations.size() != kModes) {
    throw std::invalid_argument("FourModeState: expected 4 occupations, got '" +
                                std::string(occupations) + "'");
  }
  std::size_t index = 0;
  for (char c : occupations) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("FourModeState: occupations must be 0 or 1, got '" +
                                  std::string(occupations) + "'");
    }
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return index;
}

std::string FourModeState::label_of(std::size_t index) {
  if (index >= kDim) {
    throw std::out_of_range("FourModeState: basis index out of range");
  }
  std::string label(kModes, '0');
  for (std::size_t m = 0; m < kModes; ++m) {
    if (index & (std::size_t{1} << (kModes - 1 - m))) label[m] = '1';
  }
  return label;
}

int FourModeState::photon_number(std::size_t index) {
  if (index >= kDim) {
    throw std::out_of_range("FourModeState: basis index out of range");
  }
  return std::popcount(index);
}

double FourModeState::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return sum;
}

bool FourModeState::is_finite() const {
  return std::all_of(amps_.begin(), amps_.end(), [](const Complex& a) {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
  });
}

FourModeState& FourModeState::operator+=(const FourModeState& other) {
  for (std::size_t i = 0; i < kDim; ++i) amps_[i] += other.amps_[i];
  return *this;
}

FourModeState& FourModeState::operator*=(Complex factor) {
  for (auto& a : amps_) a *= factor;
  return *this;
}

Bipartition::Bipartition(std::initializer_list<int> left_modes) {
  for (int m : left_modes) {
    if (m < 1 || m > static_cast<int>(FourModeState::kModes)) {
      throw std::invalid_argument("Bipartition: modes are numbered 1..4");
    }
    if (left_.test(static_cast<std::size_t>(m - 1))) {
      throw std::invalid_argument("Bipartition: duplicate mode");
    }
    left_.set(static_cast<std::size_t>(m - 1));
  }
  if (left_.none() || left_.all()) {
    throw std::invalid_argument("Bipartition: both sides must be nonempty");
  }
}

std::vector<int> Bipartition::left_modes() const {
  std::vector<int> out;
  for (int m = 1; m <= static_cast<int>(FourModeState::kModes); ++m) {
    if (left_.test(static_cast<std::size_t>(m - 1))) out.push_back(m);
  }
  return out;
}

std::vector<int> Bipartition::right_modes() const {
  std::vector<int> out;
  for (int m = 1; m <= static_cast<int>(FourModeState::kModes); ++m) {
    if (!left_.test(static_cast<std::size_t>(m - 1))) out.push_back(m);
  }
  return out;
}

FourModeState postselected_state(bool normalized) {
  const double a = normalized ? 1.0 / std::numbers::sqrt2 : 1.0;
  FourModeState s;
  s[k1001] = a;
  s[k0110] = a;
  return s;
}

FourModeState apply_detector(DetectorStage stage, double phase,
                             const FourModeState& s) {
  if (!s.is_finite()) {
    throw std::invalid_argument("apply_detector: state has non-finite amplitudes");
  }
  if (!std::isfinite(phase)) {
    throw std::invalid_argument("apply_detector: phase must be finite");
  }
  const Complex shift = std::polar(1.0, phase);
  FourModeState out;
  switch (stage) {
    case DetectorStage::First:
      out[k0001] = s[k1001];
      out[k0010] = shift * s[k0110];
      break;
    case DetectorStage::Second:
      out[k0000] = s[k0010] + shift * s[k0001];
      break;
  }
  return out;
}

Complex final_amplitude(double phi1, double phi2) {
  return std::polar(1.0, phi2) + std::polar(1.0, phi1);
}

double g2_path(double phi1, double phi2, const Visibility& v) {
  return 1.0 + v.value() * std::cos(phi2 - phi1);
}

std::vector<double> schmidt_coefficients(const FourModeState& s,
                                         const Bipartition& split) {
  if (!s.is_finite()) {
    throw std::invalid_argument("schmidt_coefficients: non-finite amplitudes");
  }
  const double norm = std::sqrt(s.norm_squared());
  if (norm == 0.0) {
    throw std::invalid_argument("schmidt_coefficients: zero state has no Schmidt decomposition");
  }

  const std::vector<int> left = split.left_modes();
  const std::vector<int> right = split.right_modes();
  const auto sub_index = [](std::size_t full, const std::vector<int>& modes) {
    std::size_t out = 0;
    for (int m : modes) out = (out << 1) | ((full >> bit_of_mode(m)) & 1u);
    return static_cast<Eigen::Index>(out);
  };

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index{1} << left.size(),
                                              Eigen::Index{1} << right.size());
  for (std::size_t i = 0; i < FourModeState::kDim; ++i) {
    m(sub_index(i, left), sub_index(i, right)) = s[i] / norm;
  }

  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();  // already descending
  return {sv.data(), sv.data() + sv.size()};
}

int schmidt_rank(const FourModeState& s, const Bipartition& split, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("schmidt_rank: tol must be > 0");
  }
  const std::vector<double> coeffs = schmidt_coefficients(s, split);
  const double cutoff = tol * coeffs.front();
  return static_cast<int>(std::count_if(coeffs.begin(), coeffs.end(),
                                        [cutoff](double c) { return c > cutoff; }));
}

}  // namespace twophoton
