#pragma once

#include <Eigen/Dense>
#include <numbers>

namespace monopole {

using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

/// Wrap an angle into (-pi, pi].
double wrap_angle(double x);

/// Rodrigues rotation of v about the unit axis by the given angle (radians).
Vec3 rotate_about(const Vec3& v, const Vec3& unit_axis, double angle);

/// Normalize, throwing ValidationError when the norm is ~0. `what` names the
/// offending quantity in the error message.
Vec3 unit_or_throw(const Vec3& v, const char* what);

}  // namespace monopole
