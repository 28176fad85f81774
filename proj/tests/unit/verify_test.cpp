#include <gtest/gtest.h>

#include "relkin/errors.hpp"
#include "relkin/verify/suites.hpp"

namespace relkin::verify {
namespace {

TEST(Verify, RngIsReproducible) {
    Rng a(5), b(5);
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform();
        EXPECT_EQ(x, b.uniform());
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
}

TEST(Verify, ToleranceTable) {
    Tolerances t;
    EXPECT_EQ(t.get("gamma_matrix"), 1e-13);
    t.set("distance", 1e-9);
    EXPECT_EQ(t.get("distance"), 1e-9);
    EXPECT_THROW(t.set("distance", 0.0), PreconditionError);
    EXPECT_THROW(t.set("unknown", 1.0), PreconditionError);
}

TEST(Verify, SuitesPassAtDefaultSeed) {
    const auto results = run_suites("all", VerifyConfig{});
    ASSERT_EQ(results.size(), suite_names().size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        EXPECT_EQ(results[i].name, suite_names()[i]);
        for (const auto& c : results[i].report.checks) EXPECT_TRUE(c.pass) << c.id << " " << c.residual;
    }
}

TEST(Verify, SingleSuiteIndependentOfSelection) {
    VerifyConfig config;
    config.seed = 99;
    const auto alone = run_suites("spinor", config);
    const auto all = run_suites("all", config);
    ASSERT_EQ(alone.size(), 1u);
    for (const auto& r : all) {
        if (r.name != "spinor") continue;
        ASSERT_EQ(r.report.checks.size(), alone[0].report.checks.size());
        for (std::size_t i = 0; i < r.report.checks.size(); ++i) {
            EXPECT_EQ(r.report.checks[i].residual, alone[0].report.checks[i].residual);
        }
    }
}

TEST(Verify, UnknownSuiteRejected) {
    EXPECT_THROW(run_suite("bogus", VerifyConfig{}), PreconditionError);
}

}  // namespace
}  // namespace relkin::verify
