#pragma once

#include <cstddef>
#include <functional>

namespace relkin {

struct SimpsonOptions {
    double abs_tol = 1e-10;
    std::size_t max_subdivisions = 1'000'000;
    int max_depth = 60;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t subdivisions = 0;
};

/// Adaptive Simpson quadrature with Richardson correction. Throws
/// ConvergenceError when the subdivision cap is hit before the tolerance.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const SimpsonOptions& options = {});

}  // namespace relkin
