#pragma once

// Transformations that translate the counter-rapidity, chi -> chi + delta,
// and the algebra of their generators
//
//   G_nu = rho^2 d_nu - x_nu D,   M_{mu nu} = x_mu d_nu - x_nu d_mu,   D = x^mu d_mu,
//
// checked exactly on polynomials and in the 4x4 gamma-matrix realization
// G_mu = gamma_mu / 2, M_{mu nu} = [gamma_mu, gamma_nu] / 4, rho^2 = 1.

#include <array>

#include "relkin/polynomial.hpp"
#include "relkin/report.hpp"
#include "relkin/spinor.hpp"

namespace relkin {

/// Parameters of the translation by delta: V0 = coth(delta),
/// V = 1/sinh(delta), V_bar = tanh(delta).
struct CounterBoostParam {
    double delta = 0.0;
    double V0 = 0.0;
    double V = 0.0;
    double V_bar = 0.0;

    /// Requires delta != 0.
    static CounterBoostParam make(double delta);
};

struct VelocityComponents {
    double u0 = 1.0;
    double u = 0.0;
};

/// (coth chi, 1/sinh chi) -> (coth(chi + delta), 1/sinh(chi + delta)) via
///   u0' = (u0 V0 + 1)/(u0 + V0),  u' = u V/(u0 + V0).
/// The rest point (1, 0) is fixed. Throws DomainError if chi + delta <= 0
/// and PreconditionError for input off the unit shell.
VelocityComponents counter_boost_velocity(double u0, double u, double delta);

/// (v_bar + V_bar)/(1 + v_bar V_bar); v_bar = 1 (rest) is fixed.
double complementary_velocity_add(double v_bar, double V_bar);

struct FourVector {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

    double spatial_norm() const;
    /// x0^2 - x1^2 - x2^2 - x3^2
    double rho2() const;
};

/// x0' = (x0 r0 + rho^2)/(x0 + r0), spatial part scaled by |r|/(x0 + r0).
/// x and r must share rho^2 > 0 (relative 1e-10).
FourVector fourvector_transform(const FourVector& x, const FourVector& r);

/// G_nu applied to a polynomial of degree <= max_degree.
Polynomial generator_apply(int nu, const Polynomial& poly, int max_degree = 3);

/// Exact checks of the generator algebra on all monomials of degree <= max_degree:
/// action on coordinates, [G, G] = rho^2 M, [G, rho^2] = 0, [rho^2, M] = 0,
/// [M, G], [M, M], [M, D] = 0, [D, G] = G, [D, rho^2] = 2 rho^2.
CheckReport commutator_suite(int max_degree = 3);

/// Chiral-basis gamma matrices gamma_mu (obtained from the standard ones by
/// the S basis change) and the derived generators.
struct GammaBasis {
    std::array<Mat4c, 4> gamma;

    static GammaBasis chiral();

    Mat4c sigma(int mu, int nu) const;  ///< [gamma_mu, gamma_nu] / 4
    Mat4c G(int mu) const;              ///< gamma_mu / 2
    Mat4c gamma5() const;               ///< i gamma_0 gamma_1 gamma_2 gamma_3
};

/// Anticommutators, Hermiticity pattern, gamma5, and the three commutation
/// relations in the matrix realization (tolerance 1e-13).
CheckReport gamma_realization_check();

/// [C1, G_mu] = [C1, M_{mu nu}] = 0 for C1 = G^mu G_mu in the matrix
/// realization; candidate second Casimirs are reported as observations.
CheckReport casimir_check();

}  // namespace relkin
