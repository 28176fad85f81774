#include <gtest/gtest.h>

#include <cmath>

#include "relkin/dynamics.hpp"
#include "relkin/errors.hpp"

namespace relkin {
namespace {

TEST(Dynamics, UniformElectricMatchesHyperbolicMotion) {
    const double m = 1.0, e = 1.0, E = 0.4;
    const auto start = ParticleState::on_shell(m, e, Vec3::Zero(), Vec3(0.3, 0.0, 0.0));
    const auto traj = integrate_lorentz(start, FieldConfig::uniform_electric(Vec3(E, 0, 0)), 5.0, 1e-3);
    const auto& last = traj.back().state;
    ASSERT_DOUBLE_EQ(last.tau, 5.0);
    // Independent oracle: p0 + p and p0 - p grow and decay as exp(+-eE tau/m).
    const double w = e * E * 5.0 / m;
    const double plus = (start.p0 + start.p.x()) * std::exp(w);
    const double minus = (start.p0 - start.p.x()) * std::exp(-w);
    EXPECT_NEAR(last.p0, 0.5 * (plus + minus), 1e-8 * last.p0);
    EXPECT_NEAR(last.p.x(), 0.5 * (plus - minus), 1e-8 * last.p0);
}

TEST(Dynamics, UniformMagneticPreservesSpeed) {
    const auto start = ParticleState::on_shell(1.0, 1.0, Vec3::Zero(), Vec3(1.0, 0.0, 0.2));
    const auto traj = integrate_lorentz(start, FieldConfig::uniform_magnetic(Vec3(0, 0, 2.0)), 10.0, 1e-3);
    const double p_start = start.p.norm();
    double worst = 0.0;
    for (const auto& s : traj) worst = std::max(worst, std::abs(s.state.p.norm() - p_start));
    EXPECT_LT(worst, 1e-10);
    // Proper-time cyclotron angle is eB tau / m.
    const double angle = std::atan2(traj.back().state.p.y(), traj.back().state.p.x());
    EXPECT_NEAR(std::remainder(angle + 20.0, 2.0 * M_PI), 0.0, 1e-8);
}

TEST(Dynamics, CoulombEnergyIntegralIsConserved) {
    const auto start = ParticleState::on_shell(1.0, 1.0, Vec3(1.0, 0, 0), Vec3(0, 0.8, 0));
    const auto traj = integrate_lorentz(start, FieldConfig::coulomb(-0.1), 50.0, 1e-3);
    double worst = 0.0;
    for (const auto& s : traj) {
        worst = std::max(worst, std::abs(s.energy_integral - traj.front().energy_integral));
    }
    EXPECT_LT(worst, 1e-8);
    EXPECT_NEAR(traj.front().energy_integral, start.p0 - 0.1, 1e-15);
}

TEST(Dynamics, ShellDriftRejectsCoarseSteps) {
    const auto start = ParticleState::on_shell(1.0, 1.0, Vec3(1.0, 0, 0), Vec3(0, 0.8, 0));
    IntegratorOptions strict;
    strict.max_shell_drift = 1e-16;
    EXPECT_THROW(integrate_lorentz(start, FieldConfig::coulomb(-0.5), 5.0, 0.5, strict), StepRejected);
}

TEST(Dynamics, RejectsNonPositiveMass) {
    auto start = ParticleState::on_shell(1.0, 1.0, Vec3::Zero(), Vec3::Zero());
    start.mass = 0.0;
    EXPECT_THROW(integrate_lorentz(start, FieldConfig::uniform_electric(Vec3(1, 0, 0)), 1.0, 0.1),
                 DomainError);
}

TEST(Dynamics, FieldTensorIsAntisymmetric) {
    const auto F = FieldTensor::from_fields(Vec3(1, 2, 3), Vec3(-1, 0.5, 4));
    EXPECT_TRUE(F.antisymmetric());
    // Raising the time index leaves F^0_k = F_0k; spatial rows flip sign.
    const Eigen::Matrix4d mixed = F.mixed();
    EXPECT_EQ(mixed(0, 1), F.lower(0, 1));
    EXPECT_EQ(mixed(1, 0), -F.lower(1, 0));
}

TEST(Dynamics, CovariantFormHoldsAlongTrajectory) {
    const Vec3 E(0.3, -0.1, 0.2), B(0.1, 0.5, -0.3);
    FieldConfig fields = FieldConfig::uniform_electric(E);
    fields.B = B;
    const auto start = ParticleState::on_shell(1.0, 1.0, Vec3::Zero(), Vec3(0.2, 0.1, -0.4));
    const auto traj = integrate_lorentz(start, fields, 1.0, 1e-3);
    const auto tensor = FieldTensor::from_fields(E, B);
    for (std::size_t i : {std::size_t{1}, traj.size() / 2, traj.size() - 2}) {
        EXPECT_LT(covariant_residual(traj, i, tensor).norm(), 1e-6) << i;
    }
}

TEST(Dynamics, ProjectedEvolutionIsHyperbolicRotation) {
    const auto out = projected_evolution(1.2, 0.3, 0.7);
    EXPECT_NEAR(out.p0, 1.2 * std::cosh(0.7) + 0.3 * std::sinh(0.7), 1e-12);
    EXPECT_NEAR(out.p, 0.3 * std::cosh(0.7) + 1.2 * std::sinh(0.7), 1e-12);
    const auto fit = fit_hyperbolic_solution(1.2, 0.3, std::sqrt(1.2 * 1.2 - 0.09));
    EXPECT_NEAR(fit.p0_at(0.7), out.p0, 1e-12);
    EXPECT_NEAR(fit.p_at(0.7), out.p, 1e-12);
}

}  // namespace
}  // namespace relkin
