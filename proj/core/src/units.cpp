#include "relkin/units.hpp"

#include <string>

#include "relkin/errors.hpp"

namespace relkin {

UnitSystem parse_unit_system(std::string_view name) {
    if (name == "natural") {
        return UnitSystem::natural();
    }
    if (name == "si") {
        return UnitSystem::si();
    }
    throw PreconditionError("unknown unit system '" + std::string(name) + "'");
}

}  // namespace relkin
