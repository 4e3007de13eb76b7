#include <cmath>
#include <vector>

#include "doctest.h"
#include "monopole/errors.hpp"
#include "monopole/exchange.hpp"

using namespace monopole;

namespace {

std::vector<Vec3> semicircle(int segments, double tilt) {
  // half great circle from +x to -x, tilted out of the equator plane
  std::vector<Vec3> path;
  path.reserve(segments + 1);
  for (int k = 0; k <= segments; ++k) {
    const double t = kPi * k / segments;
    path.emplace_back(std::cos(t), std::sin(t) * std::cos(tilt),
                      std::sin(t) * std::sin(tilt));
  }
  return path;
}

}  // namespace

TEST_CASE("composite spec accepts only half-integer spins") {
  CHECK_NOTHROW(CompositeSpec(0.0, 1));
  CHECK_NOTHROW(CompositeSpec(0.5, 2));
  CHECK_NOTHROW(CompositeSpec(1.5, 0));
  CHECK_THROWS_AS(CompositeSpec(-0.5, 1), ValidationError);
  CHECK_THROWS_AS(CompositeSpec(0.3, 1), ValidationError);
  CHECK_THROWS_AS(CompositeSpec(std::nan(""), 1), ValidationError);
}

TEST_CASE("relative momentum field is odd under point reflection") {
  const PhysicalSetup setup = PhysicalSetup::quantized(2);
  const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
  for (const Vec3& p :
       {Vec3(1.0, 0.3, 0.2), Vec3(-0.4, 0.9, -0.6), Vec3(0.1, -1.2, 0.5)}) {
    CAPTURE(p.transpose());
    const Vec3 there = relative_momentum_field(p, setup, string);
    const Vec3 mirrored = relative_momentum_field(-p, setup, string);
    CHECK((there + mirrored).norm() < 1e-13);
  }
}

TEST_CASE("equatorial exchange accumulates exactly the half-turn phase") {
  const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
  const std::vector<Vec3> path = semicircle(200, 0.0);
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const PhysicalSetup setup = PhysicalSetup::quantized(n);
    const double alpha = exchange_phase(path, setup, string);
    CHECK(alpha == doctest::Approx(n * kPi).epsilon(1e-9));
  }
}

TEST_CASE("tilted exchange paths keep the phase modulo a full turn") {
  const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  for (double tilt : {0.2, 0.4, -0.35}) {
    CAPTURE(tilt);
    const double alpha = exchange_phase(semicircle(240, tilt), setup, string);
    CHECK(std::abs(wrap_angle(alpha - kPi)) < 1e-9);
  }
}

TEST_CASE("exchange paths must join antipodal endpoints away from the string") {
  const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  std::vector<Vec3> open_path = {Vec3(1, 0, 0), Vec3(0, 1, 0)};
  CHECK_THROWS_AS(exchange_phase(open_path, setup, string), ValidationError);
  std::vector<Vec3> single = {Vec3(1, 0, 0)};
  CHECK_THROWS_AS(exchange_phase(single, setup, string), ValidationError);

  // a meridian through the poles mirrors onto the string half-line
  std::vector<Vec3> meridian;
  for (int k = 0; k <= 64; ++k) {
    const double t = kPi * k / 64;
    meridian.emplace_back(std::cos(t), 0.0, std::sin(t));
  }
  CHECK_THROWS_AS(exchange_phase(meridian, setup, string), SingularityError);
}

TEST_CASE("exchange statistics sign combines spin and coupling parity") {
  for (int twice_spin = 0; twice_spin <= 2; ++twice_spin) {
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(twice_spin);
      CAPTURE(n);
      const int expected = ((twice_spin + n) % 2 == 0) ? 1 : -1;
      CHECK(exchange_statistics(CompositeSpec(0.5 * twice_spin, n)) == expected);
    }
  }
  // two spinless bosons bound to an odd coupling swap like fermions
  CHECK(exchange_statistics(CompositeSpec(0.0, 1)) == -1);
  // half-integer spin with odd coupling restores symmetric exchange
  CHECK(exchange_statistics(CompositeSpec(0.5, 1)) == 1);
}
