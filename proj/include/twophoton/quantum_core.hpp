#pragma once

#include <complex>

#include "twophoton/geometry.hpp"

namespace twophoton {

using Complex = std::complex<double>;

enum class Atom { A, B };

/// Pure state of the two two-level atoms in the product basis
/// |ee>, |eg>, |ge>, |gg> (first letter is atom A). Operator images are
/// generally unnormalized; is_normalized() reports which case applies.
struct AtomicState {
  Complex ee{};
  Complex eg{};
  Complex ge{};
  Complex gg{};

  static AtomicState excited() { return {1.0, 0.0, 0.0, 0.0}; }
  static AtomicState ground() { return {0.0, 0.0, 0.0, 1.0}; }
  static AtomicState zero() { return {}; }

  double norm_squared() const;
  bool is_normalized(double tol = 1e-12) const;
  bool is_finite() const;
  bool is_zero() const;

  bool operator==(const AtomicState&) const = default;
};

/// Field amplitude E0 of the negative-frequency field operator.
class FieldParams {
public:
  explicit FieldParams(double e0 = 1.0);

  double e0() const { return e0_; }

private:
  double e0_;
};

/// S^- = |g><e| acting on the selected atom.
AtomicState lowering(Atom atom, const AtomicState& s);

/// (E0/sqrt2)(S_A^- + exp(-i*phase) S_B^-) s. Atom A is the phase reference.
AtomicState apply_field_negative(double phase, const FieldParams& p,
                                 const AtomicState& s);

/// Field operator evaluated at a far-field detector, phase = phase_at(pair, det).
AtomicState apply_field_negative(const EmitterPair& pair,
                                 const DetectorSetting& det,
                                 const FieldParams& p, const AtomicState& s);

/// <gg| E^-(r2) E^-(r1) |ee>, equal to (E0^2/2)(exp(-i*phi2) + exp(-i*phi1)).
Complex two_photon_amplitude(double phi1, double phi2, const FieldParams& p);

Complex two_photon_amplitude(const EmitterPair& pair,
                             const DetectorSetting& det1,
                             const DetectorSetting& det2,
                             const FieldParams& p);

}  // namespace twophoton
