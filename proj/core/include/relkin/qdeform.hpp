#pragma once

// Energy-momentum near the zero-mass point read as a q-deformation:
// with x = m / kappa and q = e^x,
//
//   kappa / P = sinh(x alpha) / sinh(x) = (alpha)_q        (deformed momentum)
//
// plus the mass equation m / (K pi0) = tanh(m / pi0), circle lengths in a
// space of curvature 1/kappa, and the quantized ladder alpha = 2J + 1.

#include <optional>
#include <vector>

namespace relkin {

/// Half-integer J = 0, 1/2, 1, ... stored as 2J.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }

    constexpr int twice() const noexcept { return twice_; }
    constexpr double value() const noexcept { return 0.5 * twice_; }
    /// alpha = 2J + 1
    constexpr int alpha() const noexcept { return twice_ + 1; }

    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

private:
    constexpr explicit HalfInteger(int twice) : twice_(twice) {}
    int twice_ = 0;
};

/// Parses "2", "1.5", "3/2" into a half-integer; throws PreconditionError.
HalfInteger parse_half_integer(const char* text);

struct QParams {
    double kappa = 1.0;
    double alpha = 1.0;
    std::optional<HalfInteger> J;  ///< when set, alpha = 2J + 1
    double planck = 1.0;

    static QParams quantized(double kappa, HalfInteger J, double planck = 1.0);
    /// q = exp(m / kappa)
    double q(double mass) const;
};

/// (N)_q = (q^N - q^-N) / (q - q^-1); equals N at q = 1. Requires q > 0.
double q_bracket(double N, double q);

/// Roots of m / (K pi0) = tanh(m / pi0) in y = m / pi0.
struct MassRoots {
    double zero_root = 0.0;
    std::optional<double> y;          ///< positive root, present iff K > 1
    std::optional<double> mass;       ///< y * pi0; the roots are +/- mass
    std::optional<double> cubic_y;    ///< sqrt(3) sqrt(1 - 1/K)
    std::optional<double> relative_gap;
    std::optional<double> residual;   ///< |tanh y - y/K|
};

/// Bracketed bisection on [1e-12, 1.5 K] followed by Newton polishing.
/// Throws ConvergenceError if the residual does not reach 1e-14.
MassRoots solve_mass_equation(double K, double pi0);

struct KappaState {
    double P = 0.0;    ///< m / sinh(x alpha)
    double P0 = 0.0;   ///< m coth(x alpha)
    double v = 0.0;    ///< 1 / cosh(x alpha)
    double deformed_P = 0.0;   ///< kappa sinh(x) / sinh(x alpha); = kappa at alpha = 1
    double deformed_P0 = 0.0;  ///< kappa sinh(x) coth(x alpha); = kappa cosh(x) at alpha = 1
};

/// Momenta in the (kappa, alpha) parametrization, x = m / kappa. At m = 0
/// all momenta take their limits P = P0 = kappa / alpha and v = 1.
KappaState kappa_state(double mass, double kappa, double alpha);

/// |int_{-alpha/2}^{alpha/2} exp(2 x t) dt - kappa / P| with P = m / sinh(x alpha),
/// evaluated by adaptive Simpson.
double integral_representation_check(double mass, double kappa, double alpha);

/// 2 pi kappa sinh((m / kappa) alpha): circle of radius m alpha at curvature 1/kappa.
double circle_length(double kappa, double radius_mass, double alpha);

/// sum_{n=-J}^{J} exp(factor * n * x), n stepping by one.
double finite_exponential_sum(HalfInteger J, double x, double factor = 2.0);

struct LadderRow {
    HalfInteger J;
    int alpha = 1;
    double v = 0.0;        ///< 1 / cosh(x (2J + 1))
    double lambda = 0.0;   ///< (h / kappa)(2J + 1)
    double closed_form = 0.0;        ///< sinh((2J + 1) x) / sinh(x)
    double sum_residual = 0.0;       ///< vs sum of exp(2 n x)
    double printed_sum_residual = 0.0;  ///< vs sum of exp(n x)
};

/// Rows for J = 0, 1/2, ..., J_max.
std::vector<LadderRow> quantized_ladder(double mass, double kappa, HalfInteger J_max,
                                        double planck = 1.0);

struct DeBroglieMomenta {
    double P0 = 0.0;  ///< m coth(m / pi0)
    double P = 0.0;   ///< m / sinh(m / pi0)
};

/// Massless -> massive map at phi = 1/pi0; both momenta tend to pi0 as m -> 0.
DeBroglieMomenta de_broglie_map(double mass, double pi0);

/// lambda = h / pi0
double wavelength_from_counter_mass(double pi0, double planck = 1.0);
/// pi0 = h / lambda
double counter_mass_from_wavelength(double lambda, double planck = 1.0);

}  // namespace relkin
