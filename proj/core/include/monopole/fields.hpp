#pragma once

#include "monopole/geometry.hpp"
#include "monopole/loops.hpp"
#include "monopole/setup.hpp"
#include "monopole/state.hpp"

namespace monopole {

/// Radial monopole field g*rhat/r^2. Throws SingularityError at the origin.
Vec3 monopole_field(const Vec3& r, const PhysicalSetup& setup);

/// Closed-form angular momentum stored in the crossed fields of the pair:
/// -(eg/c)*rhat. Throws SingularityError at the origin.
Vec3 field_angular_momentum(const Vec3& r, const PhysicalSetup& setup);

/// Field momentum of the string description at charge position r, for a
/// string attached at the origin along string.direction():
///   (eg/c) * (a x rhat) / (r * (1 + a.rhat)),  a = -direction.
/// Azimuthal about the string axis, magnitude (eg/c)(1-cos th)/(r sin th)
/// with th measured from a. Throws SingularityError within `cutoff_angle`
/// of the string half-line and at the origin.
Vec3 string_momentum(const Vec3& r, const PhysicalSetup& setup,
                     const StringConfig& string,
                     double cutoff_angle = kStringCutoffAngle);

/// Loop integral of the difference of two string placements,
/// circulation of (P_b - P_a) around `path`. Pure gauge: equals
/// 2*pi*n*hbar times the loop's winding around the axis oriented along
/// string_a's direction when the strings are antiparallel, and 0 for loops
/// enclosing neither string.
double gauge_mismatch(const ClosedPath& path, const PhysicalSetup& setup,
                      const StringConfig& string_a, const StringConfig& string_b,
                      double tolerance = 1e-10);

/// Resolution/acceptance knobs for the volume quadratures.
struct QuadratureSpec {
  int resolution = 1;        // >= 1, multiplies panel counts
  double tolerance = 1e-3;   // absolute, on the vector result
};

struct VolumeIntegralResult {
  Vec3 value = Vec3::Zero();
  double error_estimate = 0.0;
};

/// Microscopic field angular momentum: quadrature of
/// x cross (E_charge cross B_monopole) / (4 pi c) over all space, in
/// origin-centered spherical coordinates with log-spaced radial panels,
/// per-ray exclusion of balls around both particles, and Richardson
/// extrapolation of the exclusion radius to zero. Converges to
/// field_angular_momentum(r). Throws ValidationError for r at the origin,
/// ToleranceError when the error estimate exceeds spec.tolerance.
VolumeIntegralResult thomson_integral(const Vec3& r_charge,
                                      const PhysicalSetup& setup,
                                      const QuadratureSpec& spec = {});

/// Finite flux tube standing in for the string: uniform axial interior field
/// over a cylinder of radius `radius` and length `length`, open end at the
/// origin, extending along `axis`. Carries the full return flux 4*pi*g.
class FluxTube {
 public:
  FluxTube(const Vec3& axis, double radius, double length);

  const Vec3& axis() const { return axis_; }
  double radius() const { return radius_; }
  double length() const { return length_; }

  /// Interior field magnitude 4g/radius^2 (directed toward the open end).
  double interior_field(const PhysicalSetup& setup) const;
  /// Total carried flux, 4*pi*g.
  double flux(const PhysicalSetup& setup) const;

 private:
  Vec3 axis_;
  double radius_;
  double length_;
};

/// Field momentum (1/4 pi c) * integral of E_charge cross B_tube over the
/// tube interior. Converges to string_momentum as radius -> 0, length -> inf.
/// error_estimate includes the analytic truncation tail. Throws
/// ValidationError if the charge sits inside the tube.
VolumeIntegralResult flux_tube_momentum(const Vec3& r_charge,
                                        const PhysicalSetup& setup,
                                        const FluxTube& tube,
                                        const QuadratureSpec& spec = {});

}  // namespace monopole
