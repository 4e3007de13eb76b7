#include "monopole/state.hpp"

#include <cmath>

#include "monopole/errors.hpp"

namespace monopole {

StringConfig::StringConfig(StringSide side, const Vec3& direction)
    : side_(side), direction_(direction) {
  if (!direction.allFinite() || std::abs(direction.norm() - 1.0) > 1e-12) {
    throw ValidationError("string direction must be unit length (within 1e-12)");
  }
}

StringConfig StringConfig::magnetic_along(const Vec3& v) {
  return StringConfig(StringSide::kMagnetic, unit_or_throw(v, "string direction"));
}

StringConfig StringConfig::electric_along(const Vec3& v) {
  return StringConfig(StringSide::kElectric, unit_or_throw(v, "string direction"));
}

}  // namespace monopole
