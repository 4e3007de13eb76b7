#pragma once

#include "monopole/setup.hpp"

namespace monopole {

/// Pendulum riding a rotating frame at a fixed latitude.
/// The oscillation plane is the local horizontal; the frame vector seen from
/// the pendulum splits into a vertical part (rate * sin(latitude), Coriolis)
/// and a horizontal part entering the centrifugal potential.
struct RotatingFrameSpec {
  double frame_rate = 1.0;          // revolutions take 2*pi / frame_rate
  double latitude = 0.0;            // radians, in [-pi/2, pi/2]
  double pendulum_frequency = 200.0;
  double mass = 1.0;

  double frequency_ratio() const { return pendulum_frequency / frame_rate; }
  /// Averaging over fast oscillations needs the ratio comfortably large.
  bool adiabatic() const { return frequency_ratio() >= 50.0; }

  void validate() const;
};

struct PendulumRun {
  double precession = 0.0;         // oscillation-plane angle swept (radians)
  double energy_drift = 0.0;       // relative, incl. the centrifugal potential
  bool adiabatic = true;           // false flags a frequency ratio below 50
  int revolutions = 0;
};

/// Integrate the planar pendulum in the rotating frame for whole frame
/// revolutions: spring + centrifugal half-kicks around an exact Coriolis
/// rotation of the velocity. The plane azimuth is extracted per fast period
/// from windowed second moments of (u, v). steps_per_fast_period sets dt.
PendulumRun simulate_pendulum(const RotatingFrameSpec& spec, int revolutions = 1,
                              int steps_per_fast_period = 4000);

/// Foucault shift against the geometric cap of the latitude circle.
struct PrecessionComparison {
  double precession = 0.0;        // measured, per revolution
  double omega_minus_2pi = 0.0;   // cap solid angle 2*pi(1 - sin lat) - 2*pi
  double residual = 0.0;          // |difference|
  bool adiabatic = true;
};

PrecessionComparison precession_vs_solid_angle(double latitude,
                                               double frequency_ratio = 200.0,
                                               int steps_per_fast_period = 4000);

/// The same shift read as a loop phase of the n = 2 coupling (stored spin
/// hbar). Throws ValidationError for any other n.
struct CorrespondenceReport {
  double foucault = 0.0;   // measured precession per revolution
  double phase = 0.0;      // type1_phase at the latitude-circle solid angle
  double residual = 0.0;
};

CorrespondenceReport type1_correspondence(double latitude, const PhysicalSetup& setup,
                                          double frequency_ratio = 200.0);

}  // namespace monopole
