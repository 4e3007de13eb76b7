#pragma once

#include <span>

#include "monopole/fields.hpp"
#include "monopole/setup.hpp"

namespace monopole {

/// Charge-monopole composite: intrinsic spin s (half-integer) plus the
/// coupling index n. Construction rejects s unless 2s is a non-negative
/// integer (within 1e-9).
struct CompositeSpec {
  CompositeSpec(double spin, int n);
  double spin;
  int n;
};

/// Momentum field governing the relative coordinate of two identical
/// composites: P(r) - P(-r). Curl-free away from the string axis.
Vec3 relative_momentum_field(const Vec3& r, const PhysicalSetup& setup,
                             const StringConfig& string);

/// Phase accumulated along an open exchange path from r to -r:
/// (1/hbar) * integral of [P(r') - P(-r')] . dr'. Always n*pi mod 2*pi;
/// asserted within `tolerance` (ToleranceError otherwise). The raw value is
/// returned. Throws ValidationError unless the endpoints are antipodal, and
/// SingularityError when the path (or its mirror image) comes within the
/// string cutoff angle of the string line.
double exchange_phase(std::span<const Vec3> path, const PhysicalSetup& setup,
                      const StringConfig& string, double tolerance = 1e-6);

/// Statistics sign picked up when two identical composites swap: (-1)^(2s+n).
int exchange_statistics(const CompositeSpec& composite);

}  // namespace monopole
