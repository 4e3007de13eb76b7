#pragma once

#include "monopole/geometry.hpp"

namespace monopole {

/// Point particle phase-space state.
struct ParticleState {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  double time = 0.0;
};

/// Which particle carries the return-flux line in a given description.
enum class StringSide { kMagnetic, kElectric, kBoth };

/// Points closer than this angle (radians) to a string half-line count as
/// on-string and are rejected by field evaluations.
inline constexpr double kStringCutoffAngle = 1e-6;

/// Half-line attached to a particle, described by the unit vector along which
/// it extends. Direction must be unit length within 1e-12.
class StringConfig {
 public:
  StringConfig(StringSide side, const Vec3& direction);

  /// Convenience: normalize an arbitrary non-zero vector first.
  static StringConfig magnetic_along(const Vec3& v);
  static StringConfig electric_along(const Vec3& v);

  StringSide side() const { return side_; }
  const Vec3& direction() const { return direction_; }

 private:
  StringSide side_;
  Vec3 direction_;
};

}  // namespace monopole
