#pragma once

// Chiral (Weyl) basis Dirac machinery in plane-wave form: momenta enter as
// numbers (P0, P) and sigma . P acts on two-component spinors.

#include <Eigen/Core>
#include <complex>

#include "relkin/kinematics.hpp"

namespace relkin {

using Complex = std::complex<double>;
using Spinor = Eigen::Vector2cd;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Bispinor = Eigen::Vector4cd;

/// Pauli matrix sigma_k, k = 1, 2, 3 (standard basis).
Mat2c pauli(int k);

/// sigma . a
Mat2c sigma_dot(const Eigen::Vector3d& a);

/// Helicity eigenspinor of sigma . n with eigenvalue `sign` (+1 or -1),
/// fixed by the spherical angles of n:
///   +1: (cos(theta/2), e^{i phi} sin(theta/2))
///   -1: (-e^{-i phi} sin(theta/2), cos(theta/2))
Spinor helicity_spinor(const Eigen::Vector3d& n, int sign);

/// Right/left spinors with their momentum context. `direction` is the unit
/// vector along P (z when P = 0).
struct SpinorPair {
    Spinor xi_R = Spinor::Zero();
    Spinor xi_L = Spinor::Zero();
    MomentumState context;
    Eigen::Vector3d direction = Eigen::Vector3d::UnitZ();

    Eigen::Vector3d momentum() const { return context.p * direction; }
};

/// Boost of a rest spinor xi0 (xi_R(0) = xi_L(0) = xi0) to momentum P:
///   xi_R = (P0 + m + sigma.P) xi0 / sqrt(2m(P0 + m))
///   xi_L = (P0 + m - sigma.P) xi0 / sqrt(2m(P0 + m))
/// Throws DomainError for mass <= 0.
SpinorPair boost_spinors(double mass, const Eigen::Vector3d& P, const Spinor& xi0);

/// Residual norms of the two coupled equations
///   m xi_R = (P0 + sigma.P) xi_L,   m xi_L = (P0 - sigma.P) xi_R.
struct CoupledResiduals {
    double right = 0.0;
    double left = 0.0;
};
CoupledResiduals coupled_residuals(const SpinorPair& pair);

/// The chiral block operator [[-m, P0 + sigma.P], [P0 - sigma.P, -m]].
Mat4c chiral_block_operator(double mass, double P0, const Eigen::Vector3d& P);

/// Largest of the two block-row norms of the chiral operator applied to
/// (xi_R, xi_L); zero iff the pair solves the chiral Dirac equation.
double chiral_dirac_residual(const SpinorPair& pair);

/// Basis maps between the standard (Dirac) and chiral representations.
struct ChiralBasisMaps {
    Mat4c S;       ///< (1/sqrt 2) [[1, 1], [1, -1]], S = S^dagger = S^{-1}
    Mat4c gamma5;  ///< diag(+1, +1, -1, -1) in the chiral basis

    static ChiralBasisMaps make();
};

/// Standard-representation gamma matrices gamma^mu: gamma^0 = diag(1, 1, -1, -1),
/// gamma^k = [[0, sigma_k], [-sigma_k, 0]].
Mat4c standard_gamma(int mu);

/// gamma^mu P_mu - m in the standard representation, with P_mu = (P0, -P).
Mat4c standard_dirac_operator(double mass, double P0, const Eigen::Vector3d& P);

/// Two conventions for the eigenvalues of the split equations: the half
/// angle m coth(m phi / 2), m tanh(m phi / 2) is the one consistent with
/// P0 = m coth(m phi), P = m / sinh(m phi); the full angle m coth(m phi),
/// m tanh(m phi) is carried for comparison.
enum class EigenvalueConvention { half_angle, full_angle };

struct SplitResiduals {
    double left = 0.0;   ///< |(P0 + sigma.P) xi - lambda_L xi|
    double right = 0.0;  ///< |(P0 - sigma.P) xi - lambda_R xi|
    double left_eigenvalue = 0.0;
    double right_eigenvalue = 0.0;
};

/// Evaluates the split equations at counter-rapidity m phi for a helicity
/// spinor along `direction`. Throws PreconditionError if xi is not a
/// sigma . n eigenvector. Regular at mass == 0.
SplitResiduals split_dirac_residuals(double mass, double phi, const Eigen::Vector3d& direction,
                                     const Spinor& xi,
                                     EigenvalueConvention convention = EigenvalueConvention::half_angle);

/// Massless (Weyl) limit report.
struct WeylReport {
    double right_helicity_residual = 0.0;  ///< |sigma.n xi_R - xi_R|
    double left_helicity_residual = 0.0;   ///< |sigma.n xi_L + xi_L|
    double left_eigenvalue = 0.0;          ///< eigenvalue of (P0 + sigma.P) in the m -> 0 system: 2 pi0
    double right_eigenvalue = 0.0;         ///< eigenvalue of (P0 - sigma.P): 0
    double parity_left_eigenvalue = 0.0;   ///< same quantities after P -> -P, R <-> L
    double parity_right_eigenvalue = 0.0;
    bool parity_symmetric = true;
};
WeylReport massless_weyl_check(double pi0, const Eigen::Vector3d& direction);

/// Eigenvalue pair m coth(m/pi0), m tanh(m/pi0) of the completed equations,
/// with residuals at the momentum for which they are exact (phi = 2/pi0)
/// and at the literal phi = 1/pi0 momentum.
struct CompletedDiracReport {
    double coth_eigenvalue = 0.0;
    double tanh_eigenvalue = 0.0;
    double residual_1 = 0.0;          ///< (P0 + sigma.P) Psi1 equation at phi = 2/pi0
    double residual_2 = 0.0;          ///< (P0 - sigma.P) Psi2 equation at phi = 2/pi0
    double literal_residual_1 = 0.0;  ///< same equations with P from phi = 1/pi0
    double literal_residual_2 = 0.0;
};
CompletedDiracReport completed_dirac_residual(double mass, double pi0, const Eigen::Vector3d& direction,
                                              const Spinor& psi1, const Spinor& psi2);

/// Complex hyperbolic cotangent.
Complex coth(Complex z);

}  // namespace relkin
