#pragma once

// Lorentz-force motion in proper time (natural units):
//
//   dp/dtau  = (e/m) (E p0 + p x B)      dp0/dtau = (e/m) E . p
//   dr/dtau  = p / m                     dt/dtau  = p0 / m
//
// integrated with fixed-step classical RK4. Every step records the
// mass-shell residual and the energy integral p0 + V(r).

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cstddef>
#include <span>
#include <vector>

namespace relkin {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

struct ParticleState {
    double tau = 0.0;
    double t = 0.0;
    Vec3 r = Vec3::Zero();
    Vec3 p = Vec3::Zero();
    double p0 = 0.0;
    double mass = 1.0;
    double charge = 1.0;

    /// Builds a state with p0 = sqrt(m^2 + |p|^2).
    static ParticleState on_shell(double mass, double charge, const Vec3& r, const Vec3& p);
};

enum class FieldKind { uniform_electric, uniform_magnetic, coulomb };

/// External field. The uniform kinds use `E` and `B` as given (so crossed
/// fields are expressible). `coulomb` uses the potential V(r) = k / r with
/// e E = -grad V = k r / |r|^3, plus `B` if nonzero.
struct FieldConfig {
    FieldKind kind = FieldKind::uniform_electric;
    Vec3 E = Vec3::Zero();
    Vec3 B = Vec3::Zero();
    double coulomb_k = 0.0;

    static FieldConfig uniform_electric(const Vec3& E);
    static FieldConfig uniform_magnetic(const Vec3& B);
    static FieldConfig coulomb(double k);

    /// e E at position r.
    Vec3 electric_force(const Vec3& r, double charge) const;
    /// Potential energy V(r) of the stationary electric part; the energy
    /// integral is p0 + V(r).
    double potential(const Vec3& r, double charge) const;
};

/// Covariant field tensor F_{mu nu} (lower indices, signature +,-,-,-).
struct FieldTensor {
    Eigen::Matrix4d lower = Eigen::Matrix4d::Zero();

    static FieldTensor from_fields(const Vec3& E, const Vec3& B);
    /// Tensor seen at position r for a charge e (Coulomb fields vary with r).
    static FieldTensor at(const FieldConfig& fields, const Vec3& r, double charge);

    /// F^mu_nu = eta^{mu alpha} F_{alpha nu}.
    Eigen::Matrix4d mixed() const;
    bool antisymmetric(double tol = 0.0) const;
};

struct TrajectorySample {
    ParticleState state;
    double shell_residual = 0.0;   ///< p0^2 - |p|^2 - m^2
    double energy_integral = 0.0;  ///< p0 + V(r)
};

using Trajectory = std::vector<TrajectorySample>;

struct IntegratorOptions {
    /// Largest tolerated |p0^2 - |p|^2 - m^2| / m^2 before a step is rejected.
    double max_shell_drift = 1e-6;
};

/// Fixed-step RK4 from initial.tau to tau_end. The last step is shortened to
/// land on tau_end exactly. Throws DomainError for mass <= 0 and
/// StepRejected when the shell drift bound is exceeded.
Trajectory integrate_lorentz(const ParticleState& initial, const FieldConfig& fields,
                             double tau_end, double step, const IntegratorOptions& options = {});

/// Advances (p0, p) along the projected system dp/dpsi = p0, dp0/dpsi = p,
/// i.e. a hyperbolic rotation by psi_span.
struct ProjectedMomenta {
    double p0 = 0.0;
    double p = 0.0;
};
ProjectedMomenta projected_evolution(double p0, double p, double psi_span);

/// p0 = A (cosh psi + B sinh psi), p = A (sinh psi + B cosh psi), normalized
/// at psi = 0; A^2 (1 - B^2) = m^2.
struct HyperbolicSolution {
    double A = 0.0;
    double B = 0.0;

    double p0_at(double psi) const;
    double p_at(double psi) const;
};
HyperbolicSolution fit_hyperbolic_solution(double p0, double p, double mass);

/// du^mu/dtau - (e/m) F^mu_nu u^nu at trajectory[index], with du/dtau taken
/// by central difference over the neighbouring samples (uniform step).
Vec4 covariant_residual(std::span<const TrajectorySample> trajectory, std::size_t index,
                        const FieldTensor& tensor);

}  // namespace relkin
