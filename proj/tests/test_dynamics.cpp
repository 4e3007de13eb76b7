#include <cmath>

#include "doctest.h"
#include "monopole/dynamics.hpp"
#include "monopole/errors.hpp"
#include "monopole/setup.hpp"

using namespace monopole;

TEST_CASE("integrator spec validates and scales its defaults") {
  IntegratorSpec spec = IntegratorSpec::defaults_for(2.0);
  CHECK(spec.reference_radius == 2.0);
  CHECK(spec.min_radius == doctest::Approx(2e-3).epsilon(1e-14));
  CHECK_NOTHROW(spec.validate());
  spec.max_rotation_angle = 0.0;
  CHECK_THROWS_AS(spec.validate(), ValidationError);
  CHECK_THROWS_AS(IntegratorSpec::defaults_for(-1.0), ValidationError);
}

TEST_CASE("single step preserves speed and honors the time cap") {
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  const IntegratorSpec spec = IntegratorSpec::defaults_for(1.0);
  const ParticleState state{Vec3(1, 0, 0), Vec3(0, 0.5, 0), 3.0};
  const ParticleState next = step(state, setup, spec, 1e-4);
  CHECK(next.time == doctest::Approx(3.0 + 1e-4).epsilon(1e-14));
  CHECK(next.velocity.norm() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK((next.position - state.position).norm() < 0.5 * 1.1e-4);

  ParticleState deep = state;
  deep.position = Vec3(5e-4, 0, 0);
  CHECK_THROWS_AS(step(deep, setup, spec), SingularityError);
  CHECK_THROWS_AS(step(state, setup, spec, 0.0), ValidationError);
}

TEST_CASE("free drift fallback applies when no force scale exists") {
  // n = 0: no monopole, zero velocity -> the step cannot pick a scale
  const PhysicalSetup setup = PhysicalSetup::quantized(0);
  const IntegratorSpec spec = IntegratorSpec::defaults_for(1.0);
  const ParticleState rest{Vec3(1, 0, 0), Vec3::Zero(), 0.0};
  const ParticleState next = step(rest, setup, spec);
  CHECK(next.time == doctest::Approx(1.0));  // unit fallback step
  CHECK((next.position - rest.position).norm() == 0.0);
}

TEST_CASE("squared radius grows exactly quadratically in time") {
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  const IntegratorSpec spec = IntegratorSpec::defaults_for(1.0);
  const ParticleState start{Vec3(1, 0, 0), Vec3(0, 0.5, 0), 0.0};
  const TrajectoryRecord record = integrate(start, setup, spec, 4.0);
  REQUIRE(record.termination == Termination::kReachedEnd);
  const ParticleState& end = record.samples.back().state;
  CHECK(end.time == doctest::Approx(4.0).epsilon(1e-12));
  // r(t)^2 = r0^2 + |v|^2 t^2 for r0 . v0 = 0
  const double expected = std::sqrt(1.0 + 0.25 * 16.0);
  CHECK(end.position.norm() == doctest::Approx(expected).epsilon(1e-4));
}

TEST_CASE("conserved quantities stay put over a generic orbit") {
  const PhysicalSetup setup = PhysicalSetup::quantized(2);
  const ParticleState start{Vec3(1.2, -0.3, 0.4), Vec3(0.2, 0.3, -0.1), 0.0};
  const IntegratorSpec spec = IntegratorSpec::defaults_for(start.position.norm());
  const TrajectoryRecord record = integrate(start, setup, spec, 1e9, 500);
  REQUIRE(record.samples.size() == 501);
  const double j0 = record.samples.front().total_angular_momentum.norm();
  const double speed0 = record.samples.front().speed;
  for (const TrajectorySample& s : record.samples) {
    CHECK(std::abs(s.cone_projection + setup.coupling()) < 1e-9);
    CHECK(std::abs(s.total_angular_momentum.norm() - j0) / j0 < 1e-9);
    CHECK(std::abs(s.speed - speed0) < 1e-13);
  }
}

TEST_CASE("radial plunge ends the run at the minimum radius") {
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  const IntegratorSpec spec = IntegratorSpec::defaults_for(1.0);
  const ParticleState start{Vec3(1, 0, 0), Vec3(-1, 0, 0), 0.0};
  const TrajectoryRecord record = integrate(start, setup, spec, 10.0);
  CHECK(record.termination == Termination::kNearOrigin);
  CHECK(record.samples.back().state.position.norm() < 2e-2);
  CHECK(record.samples.back().state.time < 1.01);
}

TEST_CASE("integrate respects the step budget and initial sample") {
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  const IntegratorSpec spec = IntegratorSpec::defaults_for(1.0);
  const ParticleState start{Vec3(1, 0, 0), Vec3(0, 0.5, 0), 0.0};
  const TrajectoryRecord record = integrate(start, setup, spec, 1e9, 7);
  CHECK(record.samples.size() == 8);
  CHECK(record.samples.front().state.time == 0.0);
  CHECK_THROWS_AS(integrate(start, setup, spec, -1.0), ValidationError);
}

TEST_CASE("both energy forms reduce to rest plus kinetic terms") {
  const PhysicalSetup setup = PhysicalSetup::quantized(3);
  const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
  const ParticleState states[] = {
      {Vec3(1.1, 0.4, -0.2), Vec3(0.3, -0.2, 0.5), 0.0},
      {Vec3(-2.0, 0.1, 0.9), Vec3(0.0, 0.4, 0.0), 0.0},
      {Vec3(0.2, 1.7, 1.3), Vec3(-0.6, 0.1, 0.2), 0.0},
  };
  for (const ParticleState& s : states) {
    const double v2 = s.velocity.squaredNorm();
    const double split_form = energy_type1(s, setup);
    CHECK(split_form == doctest::Approx(1.0 + 0.5 * v2).epsilon(1e-12));
    const double coupled_form = energy_type2(s, setup, string);
    CHECK(coupled_form == doctest::Approx(std::sqrt(1.0 + v2)).epsilon(1e-12));
  }
}

TEST_CASE("the minimally coupled energy rejects on-string states") {
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
  const ParticleState on_string{Vec3(0, 0, -1), Vec3(0.1, 0, 0), 0.0};
  CHECK_THROWS_AS(energy_type2(on_string, setup, string), SingularityError);
}
