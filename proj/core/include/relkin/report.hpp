#pragma once

#include <optional>
#include <string>
#include <vector>

namespace relkin {

/// One verified identity: `residual` is compared against `tolerance`
/// (exact identities use tolerance 0 and residual 0).
struct IdentityCheck {
    std::string id;
    std::string formula;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// A printed formula that does not hold as written, with what is used instead.
struct Erratum {
    std::string id;
    std::string printed;
    std::string used;
    /// Empty when the printed form cannot be evaluated as written.
    std::optional<double> printed_residual;
    std::string note;
};

/// A measured quantity reported without a pass/fail verdict.
struct Observation {
    std::string id;
    double value = 0.0;
    std::string note;
};

struct CheckReport {
    std::vector<IdentityCheck> checks;
    std::vector<Erratum> errata;
    std::vector<Observation> observations;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }

    void add(std::string id, std::string formula, double residual, double tolerance) {
        checks.push_back({std::move(id), std::move(formula), residual, tolerance, residual <= tolerance});
    }

    void append(CheckReport other) {
        for (auto& c : other.checks) checks.push_back(std::move(c));
        for (auto& e : other.errata) errata.push_back(std::move(e));
        for (auto& o : other.observations) observations.push_back(std::move(o));
    }
};

}  // namespace relkin
