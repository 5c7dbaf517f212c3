#include "twophoton/quantum_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twophoton {

namespace {

bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_finite(const AtomicState& s, const char* where) {
  if (!s.is_finite()) {
    throw std::invalid_argument(std::string(where) +
                                ": atomic state has non-finite amplitudes");
  }
}

}  // namespace

double AtomicState::norm_squared() const {
  return std::norm(ee) + std::norm(eg) + std::norm(ge) + std::norm(gg);
}

bool AtomicState::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

bool AtomicState::is_finite() const {
  return finite(ee) && finite(eg) && finite(ge) && finite(gg);
}

bool AtomicState::is_zero() const { return norm_squared() == 0.0; }

FieldParams::FieldParams(double e0) : e0_(e0) {
  if (!std::isfinite(e0) || e0 <= 0.0) {
    throw std::invalid_argument("FieldParams: e0 must be finite and > 0, got " +
                                std::to_string(e0));
  }
}

AtomicState lowering(Atom atom, const AtomicState& s) {
  require_finite(s, "lowering");
  AtomicState out;
  if (atom == Atom::A) {
    out.ge = s.ee;
    out.gg = s.eg;
  } else {
    out.eg = s.ee;
    out.gg = s.ge;
  }
  return out;
}

AtomicState apply_field_negative(double phase, const FieldParams& p,
                                 const AtomicState& s) {
  require_finite(s, "apply_field_negative");
  if (!std::isfinite(phase)) {
    throw std::invalid_argument("apply_field_negative: phase must be finite");
  }
  const double scale = p.e0() / std::numbers::sqrt2;
  const Complex path_b = std::polar(1.0, -phase);
  const AtomicState a = lowering(Atom::A, s);
  const AtomicState b = lowering(Atom::B, s);
  return {scale * (a.ee + path_b * b.ee), scale * (a.eg + path_b * b.eg),
          scale * (a.ge + path_b * b.ge), scale * (a.gg + path_b * b.gg)};
}

AtomicState apply_field_negative(const EmitterPair& pair,
                                 const DetectorSetting& det,
                                 const FieldParams& p, const AtomicState& s) {
  return apply_field_negative(phase_at(pair, det), p, s);
}

Complex two_photon_amplitude(double phi1, double phi2, const FieldParams& p) {
  const AtomicState first = apply_field_negative(phi1, p, AtomicState::excited());
  return apply_field_negative(phi2, p, first).gg;
}

Complex two_photon_amplitude(const EmitterPair& pair,
                             const DetectorSetting& det1,
                             const DetectorSetting& det2,
                             const FieldParams& p) {
  return two_photon_amplitude(phase_at(pair, det1), phase_at(pair, det2), p);
}

}  // namespace twophoton
