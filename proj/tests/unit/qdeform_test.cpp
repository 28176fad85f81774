#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "relkin/errors.hpp"
#include "relkin/qdeform.hpp"

namespace relkin {
namespace {

// Positive roots of tanh y = y / K (30-digit bisection).
constexpr double kRootK11 = 0.553234632439105796302283053709;
constexpr double kRootK15 = 1.2878394549601655432197357775;
constexpr double kBracket25 = 3.67845283191690730360331428939;  // (2.5)_q at q = e^0.7
constexpr double kSinh2 = 3.6268604078470187676682139828;

TEST(QDeform, HalfIntegerParsing) {
    EXPECT_EQ(parse_half_integer("3/2").twice(), 3);
    EXPECT_EQ(parse_half_integer("1.5").twice(), 3);
    EXPECT_EQ(parse_half_integer("2").twice(), 4);
    EXPECT_EQ(HalfInteger::from_twice(3).alpha(), 4);
    EXPECT_THROW(parse_half_integer("0.3"), PreconditionError);
    EXPECT_THROW(parse_half_integer("-1"), PreconditionError);
}

TEST(QDeform, BracketValues) {
    EXPECT_NEAR(q_bracket(2.5, std::exp(0.7)), kBracket25, 1e-13);
    EXPECT_EQ(q_bracket(3.0, 1.0), 3.0);
    EXPECT_NEAR(q_bracket(3.0, 1.0 + 1e-9), 3.0, 1e-12);
    EXPECT_THROW(q_bracket(1.0, 0.0), std::exception);
}

TEST(QDeform, NoMassiveRootAtOrBelowCriticalCoupling) {
    for (double K : {0.5, 1.0}) {
        const auto r = solve_mass_equation(K, 1.0);
        EXPECT_EQ(r.zero_root, 0.0);
        EXPECT_FALSE(r.y.has_value()) << K;
    }
}

TEST(QDeform, MassRootsMatchOracle) {
    const auto r = solve_mass_equation(1.1, 2.0);
    ASSERT_TRUE(r.y && r.mass && r.cubic_y && r.relative_gap && r.residual);
    EXPECT_NEAR(*r.y, kRootK11, 1e-13);
    EXPECT_NEAR(*r.mass, 2.0 * kRootK11, 1e-12);
    EXPECT_NEAR(*r.cubic_y, std::sqrt(3.0 * (1.0 - 1.0 / 1.1)), 1e-15);
    EXPECT_LT(*r.relative_gap, 0.1);
    EXPECT_LE(*r.residual, 1e-12);
    EXPECT_NEAR(*solve_mass_equation(1.5, 1.0).y, kRootK15, 1e-13);
    EXPECT_LT(*solve_mass_equation(1.001, 1.0).relative_gap, 1e-3);
}

TEST(QDeform, KappaStateAtUnitAlpha) {
    for (double m : {0.0, 0.1, 1.0, 10.0}) {
        const auto s = kappa_state(m, 1.0, 1.0);
        EXPECT_NEAR(s.deformed_P, 1.0, 4e-16) << m;
    }
    const auto s = kappa_state(1.0, 1.0, 1.0);
    EXPECT_NEAR(s.P0, 1.31303528549933130363616124693, 1e-15);
    EXPECT_NEAR(s.deformed_P0, 1.54308063481524377847790562076, 1e-15);
    EXPECT_NEAR(s.v, 1.0 / 1.54308063481524377847790562076, 1e-15);
}

TEST(QDeform, KappaOverMomentumIsBracket) {
    const double m = 0.7, kappa = 1.0, alpha = 2.5;
    const auto s = kappa_state(m, kappa, alpha);
    EXPECT_NEAR(kappa / s.deformed_P, kBracket25, 1e-12);
    const auto massless = kappa_state(0.0, 2.0, 4.0);
    EXPECT_EQ(massless.P, 0.5);
    EXPECT_EQ(massless.v, 1.0);
}

TEST(QDeform, IntegralRepresentation) {
    EXPECT_LT(integral_representation_check(1.0, 1.0, 2.0), 1e-9);
    EXPECT_LT(integral_representation_check(0.3, 2.0, 5.0), 1e-9);
}

TEST(QDeform, CircleLength) {
    EXPECT_NEAR(circle_length(1.0, 1.0, 2.0), 2.0 * std::numbers::pi * kSinh2, 1e-13);
}

TEST(QDeform, FiniteSumClosedForm) {
    const double x = 0.3;
    for (int twice = 1; twice <= 10; ++twice) {
        const HalfInteger J = HalfInteger::from_twice(twice);
        const double expected = std::sinh(J.alpha() * x) / std::sinh(x);
        EXPECT_NEAR(finite_exponential_sum(J, x), expected, 1e-12 * expected) << twice;
    }
    EXPECT_NEAR(finite_exponential_sum(HalfInteger::from_twice(4), 0.3), 6.99224157113328526016125673289, 1e-13);
}

TEST(QDeform, LadderRows) {
    const auto rows = quantized_ladder(0.5, 1.0, HalfInteger::from_twice(4), 2.0);
    ASSERT_EQ(rows.size(), 5u);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        EXPECT_EQ(rows[k].J.twice(), int(k));
        EXPECT_EQ(rows[k].alpha, int(k) + 1);
        EXPECT_NEAR(rows[k].lambda, 2.0 * (k + 1), 1e-15);
        EXPECT_LT(rows[k].sum_residual, 1e-12);
        if (k > 0) EXPECT_LT(rows[k].v, rows[k - 1].v);
    }
    EXPECT_GT(rows[2].printed_sum_residual, 1e-3);
}

TEST(QDeform, DeBroglieMapAndWavelength) {
    const auto tiny = de_broglie_map(1e-8, 1.0);
    EXPECT_NEAR(tiny.P0, 1.0, 1e-15);
    EXPECT_NEAR(tiny.P, 1.0, 1e-15);
    const auto unit = de_broglie_map(1.0, 1.0);
    EXPECT_NEAR(unit.P0, 1.31303528549933130363616124693, 1e-15);
    EXPECT_NEAR(counter_mass_from_wavelength(wavelength_from_counter_mass(3.0, 2.0), 2.0), 3.0, 1e-15);
}

}  // namespace
}  // namespace relkin
