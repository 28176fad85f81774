#include "relkin/qdeform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <numbers>
#include <string>

#include "relkin/errors.hpp"
#include "relkin/quadrature.hpp"

namespace relkin {
namespace {

constexpr double kRootResidualTol = 1e-14;

/// sinh(a x) / sinh(x), with the x -> 0 limit a.
double sinh_ratio(double a, double x) {
    return x == 0.0 ? a : std::sinh(a * x) / std::sinh(x);
}

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw PreconditionError(std::string(what) + " must be positive and finite");
    }
}

}  // namespace

HalfInteger parse_half_integer(const char* text) {
    if (text == nullptr || *text == '\0') {
        throw PreconditionError("empty half-integer");
    }
    char* end = nullptr;
    double value = std::strtod(text, &end);
    if (end == text) {
        throw PreconditionError(std::string("not a number: ") + text);
    }
    if (*end == '/') {
        const char* den_text = end + 1;
        const double den = std::strtod(den_text, &end);
        if (end == den_text || den == 0.0) {
            throw PreconditionError(std::string("bad fraction: ") + text);
        }
        value /= den;
    }
    if (*end != '\0') {
        throw PreconditionError(std::string("trailing characters in: ") + text);
    }
    const double twice = 2.0 * value;
    const double rounded = std::round(twice);
    if (value < 0.0 || std::abs(twice - rounded) > 1e-9) {
        throw PreconditionError(std::string("not a non-negative half-integer: ") + text);
    }
    return HalfInteger::from_twice(static_cast<int>(rounded));
}

QParams QParams::quantized(double kappa, HalfInteger J, double planck) {
    QParams p;
    p.kappa = kappa;
    p.J = J;
    p.alpha = J.alpha();
    p.planck = planck;
    return p;
}

double QParams::q(double mass) const {
    return std::exp(mass / kappa);
}

double q_bracket(double N, double q) {
    require_positive(q, "q");
    // (q^N - q^-N)/(q - 1/q) = sinh(N ln q)/sinh(ln q)
    return sinh_ratio(N, std::log(q));
}

MassRoots solve_mass_equation(double K, double pi0) {
    require_positive(K, "K");
    require_positive(pi0, "pi0");

    MassRoots roots;
    if (K <= 1.0) {
        return roots;
    }

    const auto f = [K](double y) { return std::tanh(y) - y / K; };
    double lo = 1e-12;
    double hi = 1.5 * K;
    if (!(f(lo) > 0.0) || !(f(hi) < 0.0)) {
        throw ConvergenceError("mass equation: root is not bracketed");
    }
    for (int i = 0; i < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    double y = 0.5 * (lo + hi);
    for (int i = 0; i < 5; ++i) {
        const double sech = 1.0 / std::cosh(y);
        const double slope = sech * sech - 1.0 / K;
        if (slope == 0.0) {
            break;
        }
        const double next = y - f(y) / slope;
        if (!(next > 0.0) || !std::isfinite(next)) {
            break;
        }
        if (std::abs(f(next)) <= std::abs(f(y))) {
            y = next;
        }
    }

    const double residual = std::abs(f(y));
    if (!(residual <= kRootResidualTol)) {
        throw ConvergenceError("mass equation: residual above tolerance");
    }
    const double cubic = std::sqrt(3.0) * std::sqrt(1.0 - 1.0 / K);
    roots.y = y;
    roots.mass = y * pi0;
    roots.cubic_y = cubic;
    roots.relative_gap = std::abs(cubic - y) / y;
    roots.residual = residual;
    return roots;
}

KappaState kappa_state(double mass, double kappa, double alpha) {
    if (!(mass >= 0.0)) {
        throw PreconditionError("mass must be non-negative");
    }
    require_positive(kappa, "kappa");
    require_positive(alpha, "alpha");

    KappaState s;
    const double x = mass / kappa;
    const double xa = x * alpha;
    if (xa == 0.0) {
        s.P = s.P0 = kappa / alpha;
        s.deformed_P = s.deformed_P0 = kappa / alpha;
        s.v = 1.0;
        return s;
    }
    s.P = mass / std::sinh(xa);
    s.P0 = mass / std::tanh(xa);
    s.v = 1.0 / std::cosh(xa);
    s.deformed_P = kappa * std::sinh(x) / std::sinh(xa);
    s.deformed_P0 = kappa * std::sinh(x) / std::tanh(xa);
    return s;
}

double integral_representation_check(double mass, double kappa, double alpha) {
    require_positive(mass, "mass");
    require_positive(kappa, "kappa");
    if (!(alpha >= 0.0)) {
        throw PreconditionError("alpha must be non-negative");
    }
    const double x = mass / kappa;
    const double kappa_over_P = std::sinh(x * alpha) / x;
    SimpsonOptions opts;
    opts.abs_tol = 1e-13 * std::max(1.0, kappa_over_P);
    const auto quad = adaptive_simpson([x](double t) { return std::exp(2.0 * x * t); },
                                       -0.5 * alpha, 0.5 * alpha, opts);
    return std::abs(quad.value - kappa_over_P);
}

double circle_length(double kappa, double radius_mass, double alpha) {
    require_positive(kappa, "kappa");
    return 2.0 * std::numbers::pi * kappa * std::sinh(radius_mass / kappa * alpha);
}

double finite_exponential_sum(HalfInteger J, double x, double factor) {
    double sum = 0.0;
    for (int k = 0; k <= J.twice(); ++k) {
        const double n = 0.5 * static_cast<double>(2 * k - J.twice());
        sum += std::exp(factor * n * x);
    }
    return sum;
}

std::vector<LadderRow> quantized_ladder(double mass, double kappa, HalfInteger J_max, double planck) {
    if (!(mass >= 0.0)) {
        throw PreconditionError("mass must be non-negative");
    }
    require_positive(kappa, "kappa");
    const double x = mass / kappa;

    std::vector<LadderRow> rows;
    rows.reserve(static_cast<std::size_t>(J_max.twice()) + 1);
    for (int twice = 0; twice <= J_max.twice(); ++twice) {
        LadderRow row;
        row.J = HalfInteger::from_twice(twice);
        row.alpha = row.J.alpha();
        const double a = row.alpha;
        row.v = 1.0 / std::cosh(x * a);
        row.lambda = planck / kappa * a;
        row.closed_form = sinh_ratio(a, x);
        row.sum_residual = std::abs(finite_exponential_sum(row.J, x, 2.0) - row.closed_form);
        row.printed_sum_residual = std::abs(finite_exponential_sum(row.J, x, 1.0) - row.closed_form);
        rows.push_back(row);
    }
    return rows;
}

DeBroglieMomenta de_broglie_map(double mass, double pi0) {
    if (!(mass >= 0.0)) {
        throw PreconditionError("mass must be non-negative");
    }
    require_positive(pi0, "pi0");
    const double x = mass / pi0;
    if (x == 0.0) {
        return {pi0, pi0};
    }
    return {pi0 * (x / std::tanh(x)), pi0 * (x / std::sinh(x))};
}

double wavelength_from_counter_mass(double pi0, double planck) {
    require_positive(pi0, "pi0");
    return planck / pi0;
}

double counter_mass_from_wavelength(double lambda, double planck) {
    require_positive(lambda, "wavelength");
    return planck / lambda;
}

}  // namespace relkin
