#pragma once

// Two hyperbolic parametrizations of the mass shell p0^2 - p^2 = m^2
// (natural units, c = 1):
//
//   rapidity          p0 = m cosh(psi),  p = m sinh(psi)
//   counter-rapidity  p0 = m coth(chi),  p = m / sinh(chi),   chi = m * phi
//
// The counter-rapidity form stays regular when m -> 0 at fixed phi, where
// p0 = p = 1/phi = pi0 (the counter-mass).

#include <optional>

namespace relkin {

/// Energy-momentum record; `p` is the magnitude of the 3-momentum.
struct MomentumState {
    double mass = 0.0;
    double p0 = 0.0;
    double p = 0.0;
};

/// Counter-rapidity chi together with phi = chi / m and pi0 = 1 / phi.
struct CounterAngles {
    double chi = 0.0;
    double phi = 0.0;
    double pi0 = 0.0;
};

/// Hyperbolic angles of a massive on-shell state. `counter` is empty at
/// the rest state, where chi diverges.
struct AngleState {
    double psi = 0.0;
    std::optional<CounterAngles> counter;

    bool at_rest() const noexcept { return !counter.has_value(); }
};

/// Velocity v = p/p0 and the complementary velocity with v^2 + v_bar^2 = 1.
struct VelocityPair {
    double v = 0.0;
    double v_bar = 1.0;
};

/// The pair of energies q1 = p0 - m, q2 = p0 + m; the roots of
/// X^2 - 2 p0 X + p^2 = 0 on shell.
struct EnergySplit {
    double q1 = 0.0;
    double q2 = 0.0;
};

/// p0 = m cosh(psi), p = m |sinh(psi)|. Requires mass >= 0.
MomentumState momenta_from_rapidity(double mass, double psi);

/// p0 = m coth(chi), p = m / sinh(chi). Requires mass > 0 and chi > 0;
/// throws DomainError when the momentum would overflow.
MomentumState momenta_from_counter_rapidity(double mass, double chi);

/// Counter-rapidity form parametrized by phi (chi = m phi). Regular at
/// mass == 0, where p0 = p = 1/phi.
MomentumState momenta_from_phi(double mass, double phi);

/// psi = asinh(p/m), chi = asinh(m/p) (equivalently atanh(p/p0), atanh(m/p0)). Returns psi = 0 with an empty
/// `counter` at rest; throws DomainError for lightlike or spacelike input.
AngleState angles_from_momenta(const MomentumState& state);

/// chi = ln coth(psi/2). The map is its own inverse. Requires psi > 0.
double reciprocity(double psi);

VelocityPair velocity_pair(const MomentumState& state);

EnergySplit split_energies(const MomentumState& state);

/// Signed p0^2 - p^2 - m^2.
double mass_shell_residual(const MomentumState& state);

/// |p0^2 - p^2 - m^2| / max(p0^2, m^2), for tolerance checks over wide ranges.
double relative_shell_residual(const MomentumState& state);

}  // namespace relkin
