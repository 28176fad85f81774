#pragma once

#include <string_view>

namespace relkin {

/// Conversion between natural units (c = h = 1, used throughout the core)
/// and a dimensional system given by the values of c and h. Applied only at
/// the command-line boundary.
struct UnitSystem {
    double c = 1.0;
    double h = 1.0;

    static UnitSystem natural() { return {}; }
    static UnitSystem si() { return {299'792'458.0, 6.626'070'15e-34}; }

    bool is_natural() const noexcept { return c == 1.0 && h == 1.0; }

    /// Rest mass [kg] -> momentum-scale mass m c used by the core.
    double mass_to_core(double mass) const noexcept { return mass * c; }
    double mass_from_core(double mc) const noexcept { return mc / c; }
    /// Energy [J] <-> core momentum p0 = E / c.
    double energy_to_core(double energy) const noexcept { return energy / c; }
    double energy_from_core(double p0) const noexcept { return p0 * c; }
    /// Velocity [m/s] <-> fraction of c.
    double velocity_to_core(double v) const noexcept { return v / c; }
    double velocity_from_core(double beta) const noexcept { return beta * c; }
};

/// Parses "natural" or "si"; throws PreconditionError otherwise.
UnitSystem parse_unit_system(std::string_view name);

}  // namespace relkin
