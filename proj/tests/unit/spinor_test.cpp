#include <gtest/gtest.h>

#include <Eigen/LU>
#include <cmath>
#include <numbers>

#include "relkin/errors.hpp"
#include "relkin/spinor.hpp"

namespace relkin {
namespace {

constexpr double kCoth1 = 1.31303528549933130363616124693;
constexpr double kTanh1 = 0.761594155955764888119458282605;

TEST(Spinor, PauliAlgebra) {
    const Complex i(0.0, 1.0);
    EXPECT_TRUE((pauli(1) * pauli(2)).isApprox(i * pauli(3)));
    EXPECT_TRUE((pauli(3) * pauli(3)).isApprox(Mat2c::Identity()));
    const Eigen::Vector3d a(0.3, -1.0, 2.0);
    EXPECT_NEAR((sigma_dot(a) * sigma_dot(a) - a.squaredNorm() * Mat2c::Identity()).norm(), 0.0, 1e-14);
}

TEST(Spinor, HelicityEigenvectors) {
    const Eigen::Vector3d n = Eigen::Vector3d(1.0, -2.0, 0.5).normalized();
    for (int sign : {+1, -1}) {
        const Spinor xi = helicity_spinor(n, sign);
        EXPECT_NEAR(xi.norm(), 1.0, 1e-15);
        EXPECT_NEAR((sigma_dot(n) * xi - double(sign) * xi).norm(), 0.0, 1e-14);
    }
}

TEST(Spinor, BoostSolvesCoupledEquations) {
    const Eigen::Vector3d P(0.4, 1.1, -0.7);
    const Spinor xi0 = Spinor(Complex(0.6, 0.1), Complex(-0.2, 0.77)).normalized();
    const auto pair = boost_spinors(1.3, P, xi0);
    const auto r = coupled_residuals(pair);
    EXPECT_LT(r.right, 1e-12);
    EXPECT_LT(r.left, 1e-12);
    EXPECT_LT(chiral_dirac_residual(pair), 1e-12);
    EXPECT_NEAR(pair.context.p0, std::sqrt(1.69 + P.squaredNorm()), 1e-14);
    EXPECT_THROW(boost_spinors(0.0, P, xi0), DomainError);
}

TEST(Spinor, ChiralAndStandardOperatorsAreSimilar) {
    const auto maps = ChiralBasisMaps::make();
    EXPECT_TRUE((maps.S * maps.S).isApprox(Mat4c::Identity(), 1e-15));
    const Eigen::Vector3d P(0.2, -0.3, 0.9);
    const double m = 0.8, P0 = std::sqrt(m * m + P.squaredNorm());
    const Mat4c standard = standard_dirac_operator(m, P0, P);
    // Both vanish on shell only up to a rank deficit: det = 0.
    EXPECT_NEAR(std::abs(standard.determinant()), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(chiral_block_operator(m, P0, P).determinant()), 0.0, 1e-12);
}

TEST(Spinor, SplitEquationsHalfAngleBranch) {
    const Eigen::Vector3d n = Eigen::Vector3d(0.0, 0.6, 0.8);
    const double m = 1.0, phi = 1.0;
    const auto good = split_dirac_residuals(m, phi, n, helicity_spinor(n, +1));
    EXPECT_LT(good.left, 1e-10);
    EXPECT_LT(good.right, 1e-10);
    EXPECT_NEAR(good.left_eigenvalue * good.right_eigenvalue, m * m, 1e-12);
    const auto full = split_dirac_residuals(m, phi, n, helicity_spinor(n, +1), EigenvalueConvention::full_angle);
    EXPECT_GT(full.left, 1e-3);
    const Spinor mixed = Spinor(Complex(1, 0), Complex(1, 0)).normalized();
    EXPECT_THROW(split_dirac_residuals(m, phi, Eigen::Vector3d::UnitZ(), mixed), PreconditionError);
}

TEST(Spinor, MasslessLimitEigenvalues) {
    const auto report = massless_weyl_check(0.75, Eigen::Vector3d(1, 1, 0).normalized());
    EXPECT_NEAR(report.left_eigenvalue, 1.5, 1e-15);
    EXPECT_NEAR(report.right_eigenvalue, 0.0, 1e-15);
    EXPECT_LT(report.right_helicity_residual, 1e-14);
    EXPECT_LT(report.left_helicity_residual, 1e-14);
    // The image system carries the eigenvalues on the opposite chiralities.
    EXPECT_FALSE(report.parity_symmetric);
    EXPECT_NEAR(report.parity_left_eigenvalue, 0.0, 1e-15);
    EXPECT_NEAR(report.parity_right_eigenvalue, 1.5, 1e-15);
}

TEST(Spinor, SplitEigenvaluesApproachMasslessValuesLinearly) {
    const Eigen::Vector3d n = Eigen::Vector3d::UnitZ();
    const double pi0 = 1.0;
    for (double m : {1e-4, 1e-6}) {
        const auto r = split_dirac_residuals(m, 1.0 / pi0, n, helicity_spinor(n, +1));
        // Left eigenvalue is the larger root; the pair multiplies to m^2.
        const double big = std::max(r.left_eigenvalue, r.right_eigenvalue);
        const double small = std::min(r.left_eigenvalue, r.right_eigenvalue);
        EXPECT_LE(std::abs(big - 2.0 * pi0), m);
        EXPECT_LE(std::abs(small), m);
    }
}

TEST(Spinor, CompletedEquationsEigenvalues) {
    const Eigen::Vector3d n = Eigen::Vector3d::UnitX();
    const auto r = completed_dirac_residual(1.0, 1.0, n, helicity_spinor(n, +1), helicity_spinor(n, -1));
    EXPECT_NEAR(r.coth_eigenvalue, kCoth1, 1e-15);
    EXPECT_NEAR(r.tanh_eigenvalue, kTanh1, 1e-15);
}

TEST(Spinor, ComplexCothHalfShift) {
    const Complex half_pi(0.0, std::numbers::pi / 2.0);
    for (Complex z : {Complex(0.3, 0.2), Complex(-1.1, 0.7), Complex(2.0, -0.4)}) {
        EXPECT_LT(std::abs(coth(z + half_pi) - std::tanh(z)), 1e-12);
    }
    EXPECT_NEAR(coth(Complex(1.0, 0.0)).real(), kCoth1, 1e-15);
}

}  // namespace
}  // namespace relkin
