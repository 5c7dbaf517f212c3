#include "twophoton/correlations.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twophoton {

namespace {

// G2 / E0^4.
double fringe(double delta_phi, const Visibility& v) {
  if (!std::isfinite(delta_phi)) {
    throw std::invalid_argument("phase difference must be finite");
  }
  return 0.5 * (1.0 + v.value() * std::cos(delta_phi));
}

}  // namespace

Visibility::Visibility(double v) : v_(v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument("Visibility must lie in [0, 1], got " +
                                std::to_string(v));
  }
}

Efficiency::Efficiency(double eta) : eta_(eta) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("Efficiency must lie in (0, 1], got " +
                                std::to_string(eta));
  }
}

double g1(const FieldParams& p) { return p.e0() * p.e0(); }

double g2(double delta_phi, const FieldParams& p, const Visibility& v) {
  const double e2 = p.e0() * p.e0();
  return e2 * e2 * fringe(delta_phi, v);
}

double g2(const EmitterPair& pair, const DetectorSetting& det1,
          const DetectorSetting& det2, const FieldParams& p,
          const Visibility& v) {
  return g2(phase_difference(pair, det1, det2), p, v);
}

double marginal_probability(const Efficiency& e, const FieldParams& p) {
  const double e2 = p.e0() * p.e0();
  return e.value() * (g1(p) / e2);
}

double conditional_probability(double delta_phi, const Visibility& v,
                               const Efficiency& e) {
  return e.value() * fringe(delta_phi, v);
}

double conditional_probability(const EmitterPair& pair,
                               const DetectorSetting& det1_given,
                               const DetectorSetting& det2,
                               const FieldParams& p, const Visibility& v,
                               const Efficiency& e) {
  const double marginal = marginal_probability(e, p);
  if (marginal <= 0.0) {
    throw std::domain_error("conditional_probability: zero marginal probability");
  }
  return conditional_probability(phase_difference(pair, det1_given, det2), v, e);
}

double joint_probability(double delta_phi, const Visibility& v,
                         const Efficiency& e) {
  return conditional_probability(delta_phi, v, e) * e.value();
}

double joint_probability(const EmitterPair& pair, const DetectorSetting& det1,
                         const DetectorSetting& det2, const FieldParams& p,
                         const Visibility& v, const Efficiency& e) {
  return conditional_probability(phase_difference(pair, det1, det2), v, e) *
         marginal_probability(e, p);
}

}  // namespace twophoton
