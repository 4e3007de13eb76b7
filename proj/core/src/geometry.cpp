#include "monopole/geometry.hpp"

#include <cmath>

#include "monopole/errors.hpp"

namespace monopole {

double wrap_angle(double x) {
  double w = std::remainder(x, kTwoPi);
  if (w <= -kPi) w += kTwoPi;  // remainder lands in [-pi, pi]
  return w;
}

Vec3 rotate_about(const Vec3& v, const Vec3& unit_axis, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return v * c + unit_axis.cross(v) * s + unit_axis * (unit_axis.dot(v)) * (1.0 - c);
}

Vec3 unit_or_throw(const Vec3& v, const char* what) {
  const double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw ValidationError(std::string(what) + " must be a finite non-zero vector");
  }
  return v / n;
}

}  // namespace monopole
