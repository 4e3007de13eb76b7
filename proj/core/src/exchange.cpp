#include "monopole/exchange.hpp"

#include <cmath>

#include "monopole/errors.hpp"
#include "monopole/loops.hpp"

namespace monopole {

CompositeSpec::CompositeSpec(double spin_in, int n_in) : spin(spin_in), n(n_in) {
  if (!std::isfinite(spin) || spin < 0.0) {
    throw ValidationError("composite spin must be a non-negative half-integer");
  }
  const double doubled = 2.0 * spin;
  if (std::abs(doubled - std::round(doubled)) > 1e-9) {
    throw ValidationError("composite spin must be a non-negative half-integer");
  }
}

Vec3 relative_momentum_field(const Vec3& r, const PhysicalSetup& setup,
                             const StringConfig& string) {
  return string_momentum(r, setup, string) - string_momentum(-r, setup, string);
}

double exchange_phase(std::span<const Vec3> path, const PhysicalSetup& setup,
                      const StringConfig& string, double tolerance) {
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  if (path.size() < 2) throw ValidationError("exchange path needs at least 2 vertices");
  const Vec3& first = path.front();
  const Vec3& last = path.back();
  const double scale = std::max(first.norm(), last.norm());
  if ((first + last).norm() > 1e-9 * scale) {
    throw ValidationError("exchange path endpoints must be antipodal");
  }
  // the relative field is singular on the whole string line (the mirrored
  // term blows up on the opposite half-line), so demand clearance from both
  if (polyline_axis_clearance(path, string.direction()) < kStringCutoffAngle) {
    throw SingularityError("exchange path or its mirror touches the string");
  }
  const double quad_tol = std::min(1e-10, 0.01 * tolerance);
  auto field = [&](const Vec3& r) {
    return relative_momentum_field(r, setup, string);
  };
  const double value = line_integral_open(field, path, quad_tol) / setup.hbar();
  const double residual = wrap_angle(value - setup.n() * kPi);
  if (std::abs(residual) > tolerance) {
    throw ToleranceError("exchange phase is away from the half-turn grid");
  }
  return value;
}

int exchange_statistics(const CompositeSpec& composite) {
  const long twice_spin = std::lround(2.0 * composite.spin);
  return ((twice_spin + composite.n) % 2 == 0) ? 1 : -1;
}

}  // namespace monopole
