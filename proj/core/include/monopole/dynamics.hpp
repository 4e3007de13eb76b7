#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "monopole/setup.hpp"
#include "monopole/state.hpp"

namespace monopole {

/// Adaptive step controls. The displacement cap and the minimum radius are
/// scaled off a fixed reference length (normally the initial radius), so the
/// step budget does not inflate as an escaping orbit runs out.
struct IntegratorSpec {
  double max_rotation_angle = 0.05;      // radians of velocity rotation per step
  double max_displacement_fraction = 0.01;  // of reference_radius, per step
  double reference_radius = 1.0;
  double min_radius = 1e-3;              // hard floor; crossing it is an error

  /// Defaults scaled to a trajectory starting at `initial_radius`.
  static IntegratorSpec defaults_for(double initial_radius);

  void validate() const;  // all fields positive and finite
};

/// One split step: drift half, rotate the velocity exactly about the field
/// at the midpoint, drift half. Speed is preserved to roundoff. The step
/// size honors both spec caps and never exceeds max_dt. Throws
/// SingularityError if the state starts at or below spec.min_radius.
ParticleState step(const ParticleState& state, const PhysicalSetup& setup,
                   const IntegratorSpec& spec,
                   double max_dt = std::numeric_limits<double>::infinity());

/// Per-sample conserved-quantity diagnostics.
struct TrajectorySample {
  ParticleState state;
  Vec3 kinetic_angular_momentum = Vec3::Zero();  // m r x v
  Vec3 total_angular_momentum = Vec3::Zero();    // m r x v - (eg/c) rhat
  double cone_projection = 0.0;                  // rhat . J
  double speed = 0.0;
  double energy = 0.0;                           // rest + kinetic
};

enum class Termination { kReachedEnd, kNearOrigin };

struct TrajectoryRecord {
  std::vector<TrajectorySample> samples;  // includes the initial state
  Termination termination = Termination::kReachedEnd;
};

/// March `step` until t_end (or max_steps). A min-radius violation ends the
/// run early with Termination::kNearOrigin; the partial record is returned.
TrajectoryRecord integrate(const ParticleState& initial, const PhysicalSetup& setup,
                           const IntegratorSpec& spec, double t_end,
                           std::size_t max_steps = SIZE_MAX);

/// Radial form of the energy in the monopole-string description:
/// mc^2 + (p_r^2 + (J^2 - S^2)/r^2) / (2m), with J built from the state.
double energy_type1(const ParticleState& state, const PhysicalSetup& setup);

/// Minimally-coupled form: sqrt(c^2 (p - P)^2 + m^2 c^4) with canonical
/// p = m v + P(r), P the string field momentum. Throws on-string.
double energy_type2(const ParticleState& state, const PhysicalSetup& setup,
                    const StringConfig& string);

}  // namespace monopole
