#pragma once

#include "monopole/fields.hpp"
#include "monopole/loops.hpp"
#include "monopole/setup.hpp"

namespace monopole {

/// Loop phase of the stored-angular-momentum description for an enclosed
/// solid angle omega: (n/2)*omega - n*pi.
double type1_phase(double omega, const PhysicalSetup& setup);

/// Loop phase of the string description, computed two ways.
struct Type2Phase {
  double value = 0.0;             // quadrature: circulation of P / hbar
  double from_solid_angle = 0.0;  // geometric: (n/2) * omega
  double mismatch = 0.0;          // wrap(value - from_solid_angle)
};

/// Circulation of the string field momentum around `path` divided by hbar,
/// cross-checked against the enclosed solid angle. Throws SingularityError
/// if the path touches the string, ToleranceError when the cross-check
/// mismatch exceeds `tolerance` (mod 2*pi).
Type2Phase type2_phase(const ClosedPath& path, const PhysicalSetup& setup,
                       const StringConfig& string, double tolerance = 1e-6);

/// Both phases for one loop, with their wrapped difference.
struct PhaseReport {
  double omega = 0.0;
  double phi_type1 = 0.0;
  double phi_type2 = 0.0;
  double delta_mod_2pi = 0.0;  // wrap(phi_type2 - phi_type1)
};

/// Assembles the report and asserts the two descriptions differ by exactly
/// the string-independent offset: wrap(phi2 - phi1 - n*pi) = 0 within
/// `tolerance` (ToleranceError otherwise).
PhaseReport duality_report(const ClosedPath& path, const PhysicalSetup& setup,
                           const StringConfig& string, double tolerance = 1e-6);

/// Relative sign between the descriptions' loop amplitudes: (-1)^n.
int amplitude_ratio(int n);

/// Circulation of the compensating gauge field a = (n/2) * grad(azimuth)
/// around `path`. Equals n*pi times the loop's winding about +z, the
/// single-valuedness condition for the rotation that maps one description
/// onto the other. Throws SingularityError if the path meets the z axis.
double unitary_loop_condition(const ClosedPath& path, const PhysicalSetup& setup,
                              double tolerance = 1e-10);

}  // namespace monopole
