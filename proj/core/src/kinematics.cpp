#include "relkin/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "relkin/errors.hpp"

namespace relkin {
namespace {

constexpr double kShellPrecondition = 1e-8;

void require_nonnegative_mass(double mass) {
    if (!(mass >= 0.0) || !std::isfinite(mass)) {
        throw PreconditionError("mass must be finite and non-negative");
    }
}

MomentumState checked(MomentumState s) {
    if (!std::isfinite(s.p0) || !std::isfinite(s.p)) {
        throw DomainError("momentum overflows: counter-rapidity too close to the light-speed state");
    }
    return s;
}

}  // namespace

MomentumState momenta_from_rapidity(double mass, double psi) {
    require_nonnegative_mass(mass);
    return checked({mass, mass * std::cosh(psi), mass * std::abs(std::sinh(psi))});
}

MomentumState momenta_from_counter_rapidity(double mass, double chi) {
    require_nonnegative_mass(mass);
    if (mass == 0.0) {
        throw PreconditionError("massless state needs phi: use momenta_from_phi");
    }
    if (!(chi > 0.0)) {
        throw DomainError("counter-rapidity must be positive for a massive state");
    }
    if (std::isinf(chi)) {
        return {mass, mass, 0.0};
    }
    return checked({mass, mass / std::tanh(chi), mass / std::sinh(chi)});
}

MomentumState momenta_from_phi(double mass, double phi) {
    require_nonnegative_mass(mass);
    if (!(phi > 0.0)) {
        throw DomainError("phi must be positive");
    }
    const double x = mass * phi;
    if (std::isinf(x)) {
        return {mass, mass, 0.0};
    }
    // x coth x and x / sinh x are both 1 at x = 0; evaluating them as ratios
    // keeps the m -> 0 limit p0 = p = 1/phi exact.
    const double p0_scaled = x == 0.0 ? 1.0 : x / std::tanh(x);
    const double p_scaled = x == 0.0 ? 1.0 : x / std::sinh(x);
    return checked({mass, p0_scaled / phi, p_scaled / phi});
}

AngleState angles_from_momenta(const MomentumState& s) {
    require_nonnegative_mass(s.mass);
    if (!(s.p0 > 0.0) || !(s.p >= 0.0)) {
        throw PreconditionError("need p0 > 0 and p >= 0");
    }
    if (s.p >= s.p0) {
        throw DomainError("lightlike state: rapidity is infinite (use phi / pi0)");
    }
    if (relative_shell_residual(s) > kShellPrecondition) {
        throw PreconditionError("state is off the mass shell");
    }

    // sinh(psi) = p/m and sinh(chi) = m/p are well conditioned on the whole
    // shell, unlike the atanh forms near rest and near light speed.
    AngleState out;
    out.psi = s.mass > 0.0 ? std::asinh(s.p / s.mass) : std::atanh(s.p / s.p0);
    if (s.p == 0.0 || s.p0 - s.mass <= std::numeric_limits<double>::epsilon() * s.mass) {
        return out;  // rest: chi diverges
    }
    CounterAngles c;
    c.chi = std::asinh(s.mass / s.p);
    c.phi = c.chi / s.mass;
    c.pi0 = s.mass / c.chi;
    out.counter = c;
    return out;
}

double reciprocity(double psi) {
    if (!(psi > 0.0)) {
        throw DomainError("reciprocity needs a positive angle");
    }
    if (std::isinf(psi)) {
        return 0.0;
    }
    // ln coth(psi/2) = 2 atanh(exp(-psi)); for small psi use the expm1 form
    // so that 1 - exp(-psi) keeps its relative precision.
    if (psi > 1.0) {
        return 2.0 * std::atanh(std::exp(-psi));
    }
    const double y = std::exp(-psi);
    return std::log((1.0 + y) / -std::expm1(-psi));
}

VelocityPair velocity_pair(const MomentumState& s) {
    if (!(s.p0 > 0.0)) {
        throw PreconditionError("velocity needs p0 > 0");
    }
    if (s.p > s.p0) {
        throw PreconditionError("spacelike state has no velocity pair");
    }
    const double v = s.p / s.p0;
    const double v_bar = std::sqrt((s.p0 - s.p) * (s.p0 + s.p)) / s.p0;
    return {v, v_bar};
}

EnergySplit split_energies(const MomentumState& s) {
    return {s.p0 - s.mass, s.p0 + s.mass};
}

double mass_shell_residual(const MomentumState& s) {
    return (s.p0 - s.p) * (s.p0 + s.p) - s.mass * s.mass;
}

double relative_shell_residual(const MomentumState& s) {
    const double scale = std::max({s.p0 * s.p0, s.p * s.p, s.mass * s.mass});
    if (scale == 0.0) {
        return 0.0;
    }
    return std::abs(mass_shell_residual(s)) / scale;
}

}  // namespace relkin
