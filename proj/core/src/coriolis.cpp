#include "monopole/coriolis.hpp"

#include <cmath>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/geometry.hpp"
#include "monopole/phases.hpp"

namespace monopole {

void RotatingFrameSpec::validate() const {
  if (!std::isfinite(frame_rate) || !(frame_rate > 0.0)) {
    throw ValidationError("frame rate must be positive and finite");
  }
  if (!std::isfinite(latitude) || std::abs(latitude) > 0.5 * kPi) {
    throw ValidationError("latitude must lie in [-pi/2, pi/2]");
  }
  if (!std::isfinite(pendulum_frequency) || !(pendulum_frequency > frame_rate)) {
    throw ValidationError("pendulum frequency must exceed the frame rate");
  }
  if (!std::isfinite(mass) || !(mass > 0.0)) {
    throw ValidationError("mass must be positive and finite");
  }
}

PendulumRun simulate_pendulum(const RotatingFrameSpec& spec, int revolutions,
                              int steps_per_fast_period) {
  spec.validate();
  if (revolutions < 1) throw ValidationError("revolutions must be at least 1");
  if (steps_per_fast_period < 16) {
    throw ValidationError("steps per fast period must be at least 16");
  }
  const double w0 = spec.frame_rate;
  const double oz = w0 * std::sin(spec.latitude);
  const double oh = w0 * std::cos(spec.latitude);
  const double wp = spec.pendulum_frequency;
  const double dt = kTwoPi / wp / steps_per_fast_period;
  const auto nsteps = static_cast<long long>(
      std::llround(revolutions * kTwoPi / w0 / dt));
  // in-plane stiffnesses; the u axis carries the full horizontal frame
  // component in its centrifugal softening
  const double ku = wp * wp - w0 * w0;
  const double kv = wp * wp - oz * oz;
  const double cth = std::cos(-2.0 * oz * dt);
  const double sth = std::sin(-2.0 * oz * dt);

  double u = 1.0, v = 0.0;
  double wu = 0.0, wv = 0.0;
  auto energy = [&](double pu, double pv, double su, double sv) {
    return 0.5 * (su * su + sv * sv) + 0.5 * wp * wp * (pu * pu + pv * pv) -
           0.5 * (oz * oz * (pu * pu + pv * pv) + oh * oh * pu * pu);
  };
  const double e0 = energy(u, v, wu, wv);
  double e_min = e0, e_max = e0;

  const long long window = steps_per_fast_period;
  double muu = 0.0, mvv = 0.0, muv = 0.0;
  std::vector<double> azimuths;
  azimuths.reserve(static_cast<std::size_t>(nsteps / window) + 1);

  for (long long k = 0; k < nsteps; ++k) {
    u += 0.5 * dt * wu;
    v += 0.5 * dt * wv;
    wu += -0.5 * dt * ku * u;
    wv += -0.5 * dt * kv * v;
    const double ru = cth * wu - sth * wv;
    const double rv = sth * wu + cth * wv;
    wu = ru;
    wv = rv;
    wu += -0.5 * dt * ku * u;
    wv += -0.5 * dt * kv * v;
    u += 0.5 * dt * wu;
    v += 0.5 * dt * wv;
    muu += u * u;
    mvv += v * v;
    muv += u * v;
    const double e = energy(u, v, wu, wv);
    e_min = std::min(e_min, e);
    e_max = std::max(e_max, e);
    if ((k + 1) % window == 0) {
      azimuths.push_back(0.5 * std::atan2(2.0 * muv, muu - mvv));
      muu = mvv = muv = 0.0;
    }
  }

  // plane angle is defined mod pi; unwrap window-to-window steps and scale
  // up for the half-open last window
  double total = 0.0;
  for (std::size_t i = 1; i < azimuths.size(); ++i) {
    double d = azimuths[i] - azimuths[i - 1];
    while (d > 0.5 * kPi) d -= kPi;
    while (d < -0.5 * kPi) d += kPi;
    total += d;
  }
  if (azimuths.size() > 1) {
    total *= static_cast<double>(azimuths.size()) /
             static_cast<double>(azimuths.size() - 1);
  }

  PendulumRun run;
  run.precession = total;
  run.energy_drift = (e_max - e_min) / std::abs(e0);
  run.adiabatic = spec.adiabatic();
  run.revolutions = revolutions;
  return run;
}

PrecessionComparison precession_vs_solid_angle(double latitude,
                                               double frequency_ratio,
                                               int steps_per_fast_period) {
  RotatingFrameSpec spec;
  spec.latitude = latitude;
  spec.pendulum_frequency = frequency_ratio * spec.frame_rate;
  const PendulumRun run = simulate_pendulum(spec, 1, steps_per_fast_period);
  PrecessionComparison cmp;
  cmp.precession = run.precession;
  cmp.omega_minus_2pi = kTwoPi * (1.0 - std::sin(latitude)) - kTwoPi;
  cmp.residual = std::abs(cmp.precession - cmp.omega_minus_2pi);
  cmp.adiabatic = run.adiabatic;
  return cmp;
}

CorrespondenceReport type1_correspondence(double latitude, const PhysicalSetup& setup,
                                          double frequency_ratio) {
  if (setup.n() != 2) {
    throw ValidationError("the plane-precession reading needs n = 2");
  }
  const PrecessionComparison cmp =
      precession_vs_solid_angle(latitude, frequency_ratio);
  const double omega = kTwoPi * (1.0 - std::sin(latitude));
  CorrespondenceReport report;
  report.foucault = cmp.precession;
  report.phase = type1_phase(omega, setup);
  report.residual = std::abs(report.foucault - report.phase);
  return report;
}

}  // namespace monopole
