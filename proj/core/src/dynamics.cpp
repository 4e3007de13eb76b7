#include "monopole/dynamics.hpp"

#include <cmath>

#include "monopole/errors.hpp"
#include "monopole/fields.hpp"

namespace monopole {

namespace {

TrajectorySample make_sample(const ParticleState& state, const PhysicalSetup& setup) {
  TrajectorySample s;
  s.state = state;
  const double m = setup.mass();
  s.kinetic_angular_momentum = m * state.position.cross(state.velocity);
  s.total_angular_momentum =
      s.kinetic_angular_momentum - setup.coupling() * state.position.normalized();
  s.cone_projection = state.position.normalized().dot(s.total_angular_momentum);
  s.speed = state.velocity.norm();
  const double c = setup.light_speed();
  s.energy = m * c * c + 0.5 * m * s.speed * s.speed;
  return s;
}

}  // namespace

IntegratorSpec IntegratorSpec::defaults_for(double initial_radius) {
  if (!(initial_radius > 0.0) || !std::isfinite(initial_radius)) {
    throw ValidationError("initial radius must be positive and finite");
  }
  IntegratorSpec spec;
  spec.reference_radius = initial_radius;
  spec.min_radius = 1e-3 * initial_radius;
  return spec;
}

void IntegratorSpec::validate() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(max_rotation_angle) || !positive(max_displacement_fraction) ||
      !positive(reference_radius) || !positive(min_radius)) {
    throw ValidationError("integrator spec fields must be positive and finite");
  }
}

ParticleState step(const ParticleState& state, const PhysicalSetup& setup,
                   const IntegratorSpec& spec, double max_dt) {
  spec.validate();
  if (!(max_dt > 0.0)) throw ValidationError("max_dt must be positive");
  const double r = state.position.norm();
  if (r <= spec.min_radius) {
    throw SingularityError("trajectory reached the minimum radius");
  }
  const double m = setup.mass();
  const double c = setup.light_speed();
  const double eg = std::abs(setup.charge() * setup.monopole_strength());
  const double omega = eg / (m * c * r * r);
  const double speed = state.velocity.norm();
  double dt = max_dt;
  if (omega > 0.0) dt = std::min(dt, spec.max_rotation_angle / omega);
  if (speed > 0.0) {
    dt = std::min(dt, spec.max_displacement_fraction * spec.reference_radius / speed);
  }
  if (!std::isfinite(dt)) dt = 1.0;

  ParticleState next = state;
  const Vec3 mid = state.position + 0.5 * dt * state.velocity;
  const Vec3 b = monopole_field(mid, setup);
  const Vec3 rot = -(setup.charge() / (m * c)) * b;
  const double angle = rot.norm() * dt;
  if (angle > 0.0) {
    next.velocity = rotate_about(state.velocity, rot / rot.norm(), angle);
  }
  next.position = mid + 0.5 * dt * next.velocity;
  next.time = state.time + dt;
  return next;
}

TrajectoryRecord integrate(const ParticleState& initial, const PhysicalSetup& setup,
                           const IntegratorSpec& spec, double t_end,
                           std::size_t max_steps) {
  if (!std::isfinite(t_end) || t_end < initial.time) {
    throw ValidationError("t_end must be finite and not precede the initial time");
  }
  TrajectoryRecord record;
  record.samples.push_back(make_sample(initial, setup));
  const double time_eps = 1e-12 * std::max(1.0, std::abs(t_end));
  std::size_t steps = 0;
  while (t_end - record.samples.back().state.time > time_eps && steps < max_steps) {
    const ParticleState& current = record.samples.back().state;
    try {
      ParticleState next = step(current, setup, spec, t_end - current.time);
      record.samples.push_back(make_sample(next, setup));
    } catch (const SingularityError&) {
      record.termination = Termination::kNearOrigin;
      return record;
    }
    ++steps;
  }
  record.termination = Termination::kReachedEnd;
  return record;
}

double energy_type1(const ParticleState& state, const PhysicalSetup& setup) {
  const double r = state.position.norm();
  if (!(r > 0.0)) throw SingularityError("state at the origin");
  const double m = setup.mass();
  const double c = setup.light_speed();
  const Vec3 rhat = state.position / r;
  const double p_r = m * rhat.dot(state.velocity);
  const Vec3 j = m * state.position.cross(state.velocity) - setup.coupling() * rhat;
  const double s2 = setup.coupling() * setup.coupling();
  return m * c * c + (p_r * p_r + (j.squaredNorm() - s2) / (r * r)) / (2.0 * m);
}

double energy_type2(const ParticleState& state, const PhysicalSetup& setup,
                    const StringConfig& string) {
  const double m = setup.mass();
  const double c = setup.light_speed();
  const Vec3 momentum_field = string_momentum(state.position, setup, string);
  const Vec3 canonical = m * state.velocity + momentum_field;
  const Vec3 kinetic = canonical - momentum_field;
  return std::sqrt(c * c * kinetic.squaredNorm() + m * m * c * c * c * c);
}

}  // namespace monopole
