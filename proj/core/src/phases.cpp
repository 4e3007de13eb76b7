#include "monopole/phases.hpp"

#include <cmath>

#include "monopole/errors.hpp"

namespace monopole {

double type1_phase(double omega, const PhysicalSetup& setup) {
  const double n = static_cast<double>(setup.n());
  return 0.5 * n * omega - n * kPi;
}

Type2Phase type2_phase(const ClosedPath& path, const PhysicalSetup& setup,
                       const StringConfig& string, double tolerance) {
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  const double quad_tol = std::min(1e-10, 0.01 * tolerance);
  auto field = [&](const Vec3& r) { return string_momentum(r, setup, string); };
  Type2Phase result;
  result.value = line_integral(field, path, quad_tol) / setup.hbar();
  result.from_solid_angle = 0.5 * setup.n() * solid_angle(path).omega;
  result.mismatch = wrap_angle(result.value - result.from_solid_angle);
  if (std::abs(result.mismatch) > tolerance) {
    throw ToleranceError("circulation disagrees with the enclosed solid angle");
  }
  return result;
}

PhaseReport duality_report(const ClosedPath& path, const PhysicalSetup& setup,
                           const StringConfig& string, double tolerance) {
  PhaseReport report;
  report.omega = solid_angle(path).omega;
  report.phi_type1 = type1_phase(report.omega, setup);
  report.phi_type2 = type2_phase(path, setup, string, tolerance).value;
  report.delta_mod_2pi = wrap_angle(report.phi_type2 - report.phi_type1);
  const double offset =
      wrap_angle(report.phi_type2 - report.phi_type1 - setup.n() * kPi);
  if (std::abs(offset) > tolerance) {
    throw ToleranceError("loop phases do not differ by the expected offset");
  }
  return report;
}

int amplitude_ratio(int n) { return (n % 2 == 0) ? 1 : -1; }

double unitary_loop_condition(const ClosedPath& path, const PhysicalSetup& setup,
                              double tolerance) {
  // rejects paths hugging the axis before running the quadrature
  winding_number(path, Vec3::UnitZ());
  const double half_n = 0.5 * setup.n();
  auto gauge = [half_n](const Vec3& r) {
    const double rho2 = r.x() * r.x() + r.y() * r.y();
    return Vec3(-half_n * r.y() / rho2, half_n * r.x() / rho2, 0.0);
  };
  return line_integral(gauge, path, tolerance);
}

}  // namespace monopole
