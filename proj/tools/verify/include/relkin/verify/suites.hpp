#pragma once

// Property suites behind `relkin verify`. Each suite draws from its own
// seeded generator, so results do not depend on which suites run or in
// what order.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "relkin/report.hpp"

namespace relkin::verify {

inline constexpr std::string_view kPrngName = "mt19937_64";
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Uniform doubles from the top 53 bits of mt19937_64, so sequences are
/// reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

/// Named tolerance table; defaults reproduce the acceptance settings.
class Tolerances {
public:
    Tolerances();

    /// Throws PreconditionError for unknown names or non-positive values.
    void set(const std::string& name, double value);
    double get(const std::string& name) const;
    const std::map<std::string, double>& all() const noexcept { return values_; }

private:
    std::map<std::string, double> values_;
};

struct VerifyConfig {
    std::uint64_t seed = kDefaultSeed;
    Tolerances tolerances;
};

struct SuiteResult {
    std::string name;
    CheckReport report;
};

/// Suite names in declaration order.
const std::vector<std::string>& suite_names();

/// Runs one suite ("kinematics", "dynamics", ...). Throws PreconditionError
/// for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyConfig& config);

/// Runs "all" or a single suite; suites run concurrently and are returned
/// in declaration order.
std::vector<SuiteResult> run_suites(const std::string& selection, const VerifyConfig& config);

}  // namespace relkin::verify
