#pragma once

#include "twophoton/geometry.hpp"
#include "twophoton/quantum_core.hpp"

namespace twophoton {

/// Fringe contrast of the second-order correlation, in [0, 1].
class Visibility {
public:
  explicit Visibility(double v = 1.0);

  double value() const { return v_; }

private:
  double v_;
};

/// Lumped detection efficiency (quantum efficiency, solid angle, ...), in (0, 1].
class Efficiency {
public:
  explicit Efficiency(double eta = 1.0);

  double value() const { return eta_; }

private:
  double eta_;
};

/// First-order correlation for the doubly excited pair: E0^2 at every position.
double g1(const FieldParams& p);

/// (E0^4/2)(1 + v cos(delta_phi)).
double g2(double delta_phi, const FieldParams& p, const Visibility& v);

double g2(const EmitterPair& pair, const DetectorSetting& det1,
          const DetectorSetting& det2, const FieldParams& p,
          const Visibility& v);

/// Single-detector probability (eta/E0^2) G1, which is eta.
double marginal_probability(const Efficiency& e, const FieldParams& p);

/// Probability of seeing the second photon at r2 given the first at r1:
/// (eta/2)(1 + v cos(delta_phi)). Independent of E0.
double conditional_probability(double delta_phi, const Visibility& v,
                               const Efficiency& e);

double conditional_probability(const EmitterPair& pair,
                               const DetectorSetting& det1_given,
                               const DetectorSetting& det2,
                               const FieldParams& p, const Visibility& v,
                               const Efficiency& e);

/// Coincidence probability (eta^2/E0^4) G2 = P(r2|r1) P(r1), in [0, eta^2].
double joint_probability(double delta_phi, const Visibility& v,
                         const Efficiency& e);

double joint_probability(const EmitterPair& pair, const DetectorSetting& det1,
                         const DetectorSetting& det2, const FieldParams& p,
                         const Visibility& v, const Efficiency& e);

}  // namespace twophoton
