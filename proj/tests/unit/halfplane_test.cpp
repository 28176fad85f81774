#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "relkin/errors.hpp"
#include "relkin/halfplane.hpp"

namespace relkin {
namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kLn4 = 1.3862943611198905078121617804;
constexpr double kRiccatiAnchor = 2.36165075036660473301034483163;  // 1.5 coth(0.75)

// Independent oracle: cosh rho = 1 + |z - w|^2 / (2 Im z Im w).
double acosh_distance(std::complex<double> z, std::complex<double> w) {
    return std::acosh(1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag()));
}

TEST(HalfPlane, PointValidation) {
    EXPECT_THROW(HalfPlanePoint(0.0, 0.0), PreconditionError);
    EXPECT_THROW(HalfPlanePoint(0.0, -1.0), PreconditionError);
    EXPECT_THROW(HalfPlanePoint(NAN, 1.0), PreconditionError);
    EXPECT_TRUE(HalfPlanePoint::boundary(2.0).is_boundary());
    EXPECT_TRUE(HalfPlanePoint::infinity().is_infinite());
}

TEST(HalfPlane, VerticalAnchor) {
    const HalfPlanePoint z(0.0, 1.0), w(0.0, 2.0);
    EXPECT_NEAR(distance(z, w), kLn2, 1e-15);
    const auto e = geodesic_endpoints(z, w);
    EXPECT_EQ(e.z_star.re(), 0.0);
    EXPECT_TRUE(e.w_star.is_infinite());
}

TEST(HalfPlane, SymmetricArcAnchor) {
    const HalfPlanePoint z(-0.6, 0.8), w(0.6, 0.8);
    EXPECT_NEAR(distance(z, w), kLn4, 1e-14);
    const auto e = geodesic_endpoints(z, w);
    EXPECT_NEAR(e.z_star.re(), -1.0, 1e-15);
    EXPECT_NEAR(e.w_star.re(), 1.0, 1e-15);
}

TEST(HalfPlane, ThreeFormulasAgree) {
    const std::complex<double> pts[] = {{0.1, 0.2}, {3.0, 0.5}, {-2.0, 4.0}, {0.1000001, 7.0}, {5.0, 1e-3}};
    for (const auto& a : pts) {
        for (const auto& b : pts) {
            if (a == b) continue;
            const HalfPlanePoint z(a.real(), a.imag()), w(b.real(), b.imag());
            const double oracle = acosh_distance(a, b);
            EXPECT_NEAR(distance(z, w), oracle, 1e-12 * std::max(1.0, oracle));
            EXPECT_NEAR(distance_closed_form(z, w), oracle, 1e-12 * std::max(1.0, oracle));
        }
    }
}

TEST(HalfPlane, DistanceIsSymmetricAndZeroOnDiagonal) {
    const HalfPlanePoint z(1.0, 2.0), w(-3.0, 0.5);
    EXPECT_NEAR(distance(z, w), distance(w, z), 1e-14);
    EXPECT_EQ(distance(z, z), 0.0);
}

TEST(HalfPlane, CrossRatioRejectsRepeatedPoints) {
    const HalfPlanePoint a(0.0, 1.0), b(1.0, 1.0), c(2.0, 1.0);
    EXPECT_THROW(cross_ratio(a, a, b, c), PreconditionError);
    EXPECT_THROW(cross_ratio(HalfPlanePoint::infinity(), HalfPlanePoint::infinity(), b, c), PreconditionError);
}

TEST(HalfPlane, CrossRatioIsMobiusInvariant) {
    const std::complex<double> z[] = {{0.1, 1.0}, {2.0, 0.3}, {-1.0, 2.0}, {0.5, 0.5}};
    const auto mobius = [](std::complex<double> x) { return (2.0 * x + 1.0) / (x + 3.0); };
    const auto make = [](std::complex<double> x) { return HalfPlanePoint(x.real(), x.imag()); };
    const auto before = cross_ratio(make(z[0]), make(z[1]), make(z[2]), make(z[3]));
    const auto after = cross_ratio(make(mobius(z[0])), make(mobius(z[1])), make(mobius(z[2])), make(mobius(z[3])));
    EXPECT_LT(std::abs(before - after), 1e-12);
}

TEST(GFunctions, MatchMatrixExponential) {
    const double p0 = 1.3, p2 = 0.8, phi = 0.7;
    const auto s = g_evolution(p0, p2, phi);
    // Oracle: diagonalize E by its eigenvalues p0 +- m.
    const double m = std::sqrt(p0 * p0 - p2);
    const double l1 = p0 + m, l2 = p0 - m;
    const double e1 = std::exp(l1 * phi), e2 = std::exp(l2 * phi);
    EXPECT_NEAR(s.g1, (e1 - e2) / (l1 - l2), 1e-13);
    EXPECT_NEAR(s.g0, (l1 * e2 - l2 * e1) / (l1 - l2), 1e-13);
    EXPECT_NEAR(s.mass(), m, 1e-15);
    EXPECT_LT(s.determinant_residual(), 1e-14);
    // g0 I + g1 E composes like exp: T(a) T(b) = T(a + b).
    const Eigen::Matrix2d prod = g_evolution(p0, p2, 0.3).transfer() * g_evolution(p0, p2, 0.4).transfer();
    EXPECT_LT((prod - s.transfer()).norm(), 1e-13);
}

TEST(GFunctions, ConfluentCase) {
    const auto s = g_evolution(1.0, 1.0, 0.5);
    EXPECT_NEAR(s.g1, 0.5 * std::exp(0.5), 1e-15);
    EXPECT_NEAR(s.g0, 0.5 * std::exp(0.5), 1e-15);
    EXPECT_LT(s.determinant_residual(), 1e-14);
    EXPECT_THROW(g_evolution(1.0, 2.0, 0.5), PreconditionError);
}

TEST(GFunctions, RiccatiAndAnchor) {
    EXPECT_LT(riccati_residual(1.3, 0.8, 1.1, 1e-5), 1e-8);
    const double p0 = 2.5, p2 = 4.0;  // m = 1.5
    const auto s = g_evolution(p0, p2, 0.5);
    EXPECT_NEAR(p0 - s.U, kRiccatiAnchor, 1e-12);
    EXPECT_THROW(riccati_residual(1.3, 0.8, 1e-6, 1e-5), PreconditionError);
}

TEST(GFunctions, RootShiftKeepsMass) {
    const auto [p0, p2] = shift_roots(2.5, 4.0, -0.7);
    EXPECT_NEAR(p0 * p0 - p2, 2.25, 1e-14);
    const auto [lo, hi] = shell_roots(2.5, 4.0);
    EXPECT_EQ(lo, 1.0);
    EXPECT_EQ(hi, 4.0);
    EXPECT_THROW(shell_roots(1.0, 1.0), DomainError);
}

TEST(MomentumDistance, AnchorAndAgreement) {
    EXPECT_NEAR(momentum_distance_integral(2.0, 3.0, 2.5, 4.0), kLn4, 1e-10);
    EXPECT_NEAR(momentum_distance_cross_ratio(2.0, 3.0, 2.5, 4.0), kLn4, 1e-14);
    EXPECT_NEAR(momentum_distance_closed_form(2.0, 3.0, 2.5, 4.0), kLn4, 1e-14);
    EXPECT_NEAR(momentum_distance_cross_ratio(3.0, 2.0, 2.5, 4.0), kLn4, 1e-14);
    EXPECT_NEAR(momentum_distance_integral(1.1, 3.9, 2.5, 4.0), momentum_distance_closed_form(1.1, 3.9, 2.5, 4.0),
                1e-8);
}

TEST(MomentumDistance, SegmentMustBeInsideRoots) {
    EXPECT_THROW(momentum_distance_integral(0.5, 3.0, 2.5, 4.0), DomainError);
    EXPECT_THROW(momentum_distance_closed_form(1.0, 3.0, 2.5, 4.0), DomainError);
}

}  // namespace
}  // namespace relkin
