#include <gtest/gtest.h>

#include <cmath>

#include "relkin/errors.hpp"
#include "relkin/kinematics.hpp"

namespace relkin {
namespace {

// Reference values from 30-digit arithmetic.
constexpr double kCosh1 = 1.54308063481524377847790562076;
constexpr double kSinh1 = 1.17520119364380145688238185060;
constexpr double kCoth1 = 1.31303528549933130363616124693;
constexpr double kCsch1 = 0.850918128239321545133842763288;

TEST(Kinematics, RapidityAnchor) {
    const auto s = momenta_from_rapidity(1.0, 1.0);
    EXPECT_NEAR(s.p0, kCosh1, 1e-15);
    EXPECT_NEAR(s.p, kSinh1, 1e-15);
    EXPECT_EQ(s.mass, 1.0);
}

TEST(Kinematics, CounterRapidityAnchor) {
    const auto s = momenta_from_counter_rapidity(1.0, 1.0);
    EXPECT_NEAR(s.p0, kCoth1, 1e-15);
    EXPECT_NEAR(s.p, kCsch1, 1e-15);
}

TEST(Kinematics, PhiFormIsRegularAtZeroMass) {
    const auto s = momenta_from_phi(0.0, 2.0);
    EXPECT_EQ(s.p0, 0.5);
    EXPECT_EQ(s.p, 0.5);
    const auto tiny = momenta_from_phi(1e-9, 2.0);
    EXPECT_NEAR(tiny.p0, 0.5, 1e-15);
    EXPECT_NEAR(tiny.p, 0.5, 1e-15);
}

TEST(Kinematics, ReciprocityIsAnInvolution) {
    for (double psi : {0.01, 0.3, 1.0, 2.5, 5.0}) {
        const double chi = reciprocity(psi);
        EXPECT_NEAR(reciprocity(chi), psi, 1e-12 * std::max(1.0, psi)) << psi;
        EXPECT_NEAR(std::sinh(psi) * std::sinh(chi), 1.0, 1e-12);
    }
    EXPECT_THROW(reciprocity(0.0), DomainError);
}

TEST(Kinematics, TwoParametrizationsMeet) {
    const double m = 0.7, psi = 1.3;
    const auto a = momenta_from_rapidity(m, psi);
    const auto b = momenta_from_counter_rapidity(m, reciprocity(psi));
    EXPECT_NEAR(a.p0, b.p0, 1e-14 * a.p0);
    EXPECT_NEAR(a.p, b.p, 1e-14 * a.p0);
}

TEST(Kinematics, AnglesRoundTrip) {
    const auto s = momenta_from_rapidity(2.0, 0.8);
    const auto angles = angles_from_momenta(s);
    ASSERT_FALSE(angles.at_rest());
    EXPECT_NEAR(angles.psi, 0.8, 1e-14);
    EXPECT_NEAR(angles.counter->chi, reciprocity(0.8), 1e-14);
    EXPECT_NEAR(angles.counter->phi * angles.counter->pi0, 1.0, 1e-15);
    EXPECT_NEAR(std::tanh(angles.psi) * std::tanh(angles.psi) +
                    std::tanh(angles.counter->chi) * std::tanh(angles.counter->chi),
                1.0, 1e-14);
}

TEST(Kinematics, RestStateHasNoCounterAngle) {
    const auto angles = angles_from_momenta({1.0, 1.0, 0.0});
    EXPECT_TRUE(angles.at_rest());
    EXPECT_EQ(angles.psi, 0.0);
}

TEST(Kinematics, LightlikeAndSpacelikeRejected) {
    EXPECT_THROW(angles_from_momenta({0.0, 1.0, 1.0}), DomainError);
    EXPECT_THROW(angles_from_momenta({1.0, 1.0, 2.0}), std::exception);
}

TEST(Kinematics, CounterRapidityRejectsRest) {
    EXPECT_THROW(momenta_from_counter_rapidity(1.0, 0.0), std::exception);
    EXPECT_THROW(momenta_from_rapidity(-1.0, 0.5), std::exception);
}

TEST(Kinematics, VelocityPairIsComplementary) {
    const auto s = momenta_from_rapidity(1.0, 0.6);
    const auto v = velocity_pair(s);
    EXPECT_NEAR(v.v, std::tanh(0.6), 1e-15);
    EXPECT_NEAR(v.v * v.v + v.v_bar * v.v_bar, 1.0, 1e-15);
    EXPECT_NEAR(v.v_bar, std::tanh(reciprocity(0.6)), 1e-14);
}

TEST(Kinematics, SplitEnergiesAreShellRoots) {
    const auto s = momenta_from_rapidity(1.5, 0.9);
    const auto q = split_energies(s);
    EXPECT_NEAR(q.q1 * q.q2, s.p * s.p, 1e-13);
    EXPECT_NEAR(q.q1 + q.q2, 2.0 * s.p0, 1e-14);
}

TEST(Kinematics, ShellResidualsOnAndOff) {
    EXPECT_NEAR(mass_shell_residual(momenta_from_rapidity(3.0, 2.0)), 0.0, 1e-12);
    EXPECT_DOUBLE_EQ(mass_shell_residual({1.0, 2.0, 1.0}), 2.0);
    EXPECT_DOUBLE_EQ(relative_shell_residual({1.0, 2.0, 1.0}), 0.5);
}

}  // namespace
}  // namespace relkin
