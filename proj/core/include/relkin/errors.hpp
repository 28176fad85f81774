#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relkin {

/// Input lies outside the region where a formula is finite or defined
/// (e.g. counter-rapidity at the rest state, rapidity at the light-speed state).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A caller-side contract was violated (wrong shell, non-eigenvector spinor, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative solver or quadrature failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The integrator refused a step because the mass-shell drift exceeded its bound.
class StepRejected : public std::runtime_error {
public:
    StepRejected(std::size_t step, double drift, const std::string& what)
        : std::runtime_error(what), step_(step), drift_(drift) {}

    std::size_t step() const noexcept { return step_; }
    double drift() const noexcept { return drift_; }

private:
    std::size_t step_;
    double drift_;
};

}  // namespace relkin
