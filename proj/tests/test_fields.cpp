#include <cmath>

#include "doctest.h"
#include "monopole/errors.hpp"
#include "monopole/fields.hpp"
#include "monopole/loops.hpp"
#include "monopole/setup.hpp"

using namespace monopole;

namespace {

Vec3 numeric_curl(const VectorField& field, const Vec3& p, double h) {
  auto partial = [&](int i) {
    Vec3 e = Vec3::Zero();
    e[i] = h;
    return Vec3((field(p + e) - field(p - e)) / (2.0 * h));
  };
  const Vec3 dx = partial(0), dy = partial(1), dz = partial(2);
  return Vec3(dy.z() - dz.y(), dz.x() - dx.z(), dx.y() - dy.x());
}

}  // namespace

TEST_CASE("monopole field is radial with inverse-square falloff") {
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  const Vec3 b = monopole_field(Vec3(2, 0, 0), setup);
  CHECK((b - Vec3(0.125, 0, 0)).norm() < 1e-15);
  const Vec3 p(0.3, -1.1, 0.7);
  const Vec3 bp = monopole_field(p, setup);
  CHECK(bp.cross(p).norm() < 1e-15);
  CHECK(bp.norm() == doctest::Approx(0.5 / p.squaredNorm()).epsilon(1e-14));
  CHECK_THROWS_AS(monopole_field(Vec3::Zero(), setup), SingularityError);
}

TEST_CASE("stored angular momentum points against the separation") {
  const PhysicalSetup setup = PhysicalSetup::quantized(2);
  const Vec3 s = field_angular_momentum(Vec3(0, 0, 2), setup);
  CHECK((s - Vec3(0, 0, -1)).norm() < 1e-15);
  CHECK(s.norm() == doctest::Approx(setup.spin_magnitude()).epsilon(1e-14));
  // magnitude independent of the separation distance
  CHECK(field_angular_momentum(Vec3(17, 0, 0), setup).norm() ==
        doctest::Approx(setup.spin_magnitude()).epsilon(1e-14));
  CHECK_THROWS_AS(field_angular_momentum(Vec3::Zero(), setup), SingularityError);
}

TEST_CASE("string momentum is azimuthal about the string with the known profile") {
  const PhysicalSetup setup = PhysicalSetup::quantized(3);
  const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
  const double eg = setup.coupling();

  // equator: (eg/c) / r along +phi
  const Vec3 pi_eq = string_momentum(Vec3(2, 0, 0), setup, string);
  CHECK((pi_eq - Vec3(0, eg / 2.0, 0)).norm() < 1e-14);

  // generic polar angle: magnitude (eg/c)(1 - cos th)/(r sin th)
  const double theta = kPi / 4.0, phi = 0.7, r = 1.5;
  const Vec3 p(r * std::sin(theta) * std::cos(phi),
               r * std::sin(theta) * std::sin(phi), r * std::cos(theta));
  const Vec3 pi_p = string_momentum(p, setup, string);
  const double expected_mag = eg * (1.0 - std::cos(theta)) / (r * std::sin(theta));
  CHECK(pi_p.norm() == doctest::Approx(expected_mag).epsilon(1e-13));
  CHECK(std::abs(pi_p.dot(p)) < 1e-14);                    // no radial part
  CHECK(std::abs(pi_p.dot(Vec3::UnitZ())) < 1e-14);        // no axial part
  CHECK(pi_p.dot(Vec3(-p.y(), p.x(), 0.0)) > 0.0);         // +phi sense

  CHECK_THROWS_AS(string_momentum(Vec3::Zero(), setup, string), SingularityError);
}

TEST_CASE("string momentum rejects points inside the cutoff cone only") {
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
  const double inside = 0.5 * kStringCutoffAngle;
  const double outside = 2.0 * kStringCutoffAngle;
  CHECK_THROWS_AS(
      string_momentum(Vec3(std::sin(inside), 0, -std::cos(inside)), setup, string),
      SingularityError);
  CHECK_NOTHROW(
      string_momentum(Vec3(std::sin(outside), 0, -std::cos(outside)), setup, string));
  // the opposite pole is regular
  CHECK(string_momentum(Vec3(0, 0, 1), setup, string).norm() < 1e-14);
}

TEST_CASE("string momentum curls into the monopole field away from the string") {
  const PhysicalSetup setup = PhysicalSetup::quantized(2);
  const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
  auto momentum = [&](const Vec3& r) { return string_momentum(r, setup, string); };
  for (const Vec3& p : {Vec3(1.0, 0.2, 0.4), Vec3(-0.5, 0.8, -0.3), Vec3(0.2, 0.1, 1.4)}) {
    CAPTURE(p.transpose());
    const Vec3 curl = numeric_curl(momentum, p, 1e-5);
    const Vec3 expected = setup.charge() * monopole_field(p, setup) /
                          setup.light_speed();
    CHECK((curl - expected).norm() < 1e-5 * expected.norm());
  }
}

TEST_CASE("gauge mismatch of antiparallel strings counts full turns") {
  const StringConfig up = StringConfig::magnetic_along(Vec3::UnitZ());
  const StringConfig down = StringConfig::magnetic_along(-Vec3::UnitZ());
  const ClosedPath equator = ClosedPath::cap(kPi / 2.0, 256);
  for (int n = 1; n <= 2; ++n) {
    CAPTURE(n);
    const PhysicalSetup setup = PhysicalSetup::quantized(n);
    const double mismatch = gauge_mismatch(equator, setup, up, down);
    CHECK(mismatch ==
          doctest::Approx(kTwoPi * n * setup.hbar()).epsilon(1e-10));
  }
  // swapped order flips the sign
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  CHECK(gauge_mismatch(equator, setup, down, up) ==
        doctest::Approx(-kTwoPi).epsilon(1e-10));
  // a tilted axis pair behaves identically
  const Vec3 axis = Vec3(1, 1, 1).normalized();
  const StringConfig a = StringConfig::magnetic_along(axis);
  const StringConfig b = StringConfig::magnetic_along(-axis);
  const double tilted = gauge_mismatch(ClosedPath::cap(kPi / 2.0, 256, 1.0, axis),
                                       setup, a, b);
  CHECK(tilted == doctest::Approx(kTwoPi).epsilon(1e-10));
}

TEST_CASE("gauge mismatch vanishes for loops enclosing neither string") {
  const PhysicalSetup setup = PhysicalSetup::quantized(2);
  const StringConfig a = StringConfig::magnetic_along(Vec3::UnitZ());
  const StringConfig b = StringConfig::magnetic_along(Vec3::UnitX());
  const ClosedPath loop = ClosedPath::cap(0.3, 200, 1.0, Vec3::UnitY());
  CHECK(std::abs(gauge_mismatch(loop, setup, a, b)) < 1e-9);
}

TEST_CASE("thomson quadrature recovers the stored angular momentum") {
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  const Vec3 r_charge = 1.3 * Vec3(0.6, -0.8, 0.0);
  const VolumeIntegralResult result = thomson_integral(r_charge, setup);
  const Vec3 expected = field_angular_momentum(r_charge, setup);
  const double err = (result.value - expected).norm();
  CHECK(err / expected.norm() < 1e-3);
  CHECK(err <= result.error_estimate);  // the estimate must not understate
  CHECK(result.error_estimate < 1e-3);
}

TEST_CASE("thomson quadrature validates its inputs") {
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  CHECK_THROWS_AS(thomson_integral(Vec3::Zero(), setup), ValidationError);
  QuadratureSpec bad;
  bad.resolution = 0;
  CHECK_THROWS_AS(thomson_integral(Vec3(0, 0, 1), setup, bad), ValidationError);
  QuadratureSpec absurd;
  absurd.tolerance = 1e-9;
  CHECK_THROWS_AS(thomson_integral(Vec3(0, 0, 1), setup, absurd), ToleranceError);
}

TEST_CASE("flux tube carries the full return flux") {
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  const FluxTube tube(-Vec3::UnitZ(), 0.01, 200.0);
  CHECK(tube.interior_field(setup) == doctest::Approx(20000.0).epsilon(1e-13));
  CHECK(tube.flux(setup) == doctest::Approx(kTwoPi).epsilon(1e-13));
  CHECK(tube.flux(setup) ==
        doctest::Approx(tube.interior_field(setup) * kPi * 0.01 * 0.01)
            .epsilon(1e-12));
  CHECK_THROWS_AS(FluxTube(Vec3::UnitZ(), 0.0, 1.0), ValidationError);
  CHECK_THROWS_AS(FluxTube(Vec3::UnitZ(), 0.1, -1.0), ValidationError);
  CHECK_THROWS_AS(FluxTube(Vec3::Zero(), 0.1, 1.0), ValidationError);
}

TEST_CASE("flux tube momentum approaches the ideal string value") {
  const PhysicalSetup setup = PhysicalSetup::quantized(1);
  const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
  const FluxTube tube(-Vec3::UnitZ(), 0.01, 200.0);
  const Vec3 charge_pos(0.0, 1.2, 0.3);
  const VolumeIntegralResult result = flux_tube_momentum(charge_pos, setup, tube);
  const Vec3 expected = string_momentum(charge_pos, setup, string);
  CHECK((result.value - expected).norm() / expected.norm() < 1e-3);

  // charge inside the tube is rejected
  CHECK_THROWS_AS(flux_tube_momentum(Vec3(0.005, 0, -50.0), setup, tube),
                  ValidationError);
  QuadratureSpec absurd;
  absurd.tolerance = 1e-12;
  CHECK_THROWS_AS(flux_tube_momentum(charge_pos, setup, tube, absurd),
                  ToleranceError);
}
