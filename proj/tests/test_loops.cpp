#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <vector>

#include "doctest.h"
#include "monopole/errors.hpp"
#include "monopole/loops.hpp"

using namespace monopole;

TEST_CASE("closed path construction rejects degenerate input") {
  CHECK_THROWS_AS(ClosedPath({Vec3(1, 0, 0), Vec3(0, 1, 0)}), ValidationError);
  CHECK_THROWS_AS(
      ClosedPath({Vec3(1, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)}), ValidationError);
  CHECK_THROWS_AS(
      ClosedPath({Vec3(1, 0, 0), Vec3(0, 0, 0), Vec3(0, 1, 0)}), ValidationError);
  // middle segment runs straight through the origin
  CHECK_THROWS_AS(
      ClosedPath({Vec3(1, 0, 0), Vec3(-1, 0, 0), Vec3(0, 1, 0)}), ValidationError);
  CHECK_NOTHROW(ClosedPath({Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)}));
}

TEST_CASE("cap factory places the first vertex on +x for the default axis") {
  const ClosedPath path = ClosedPath::cap(kPi / 2.0, 4, 2.0);
  REQUIRE(path.size() == 4);
  CHECK(path.vertices()[0].x() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(path.vertices()[0].y() == doctest::Approx(0.0));
  CHECK(path.vertices()[1].y() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(path.vertices()[2].x() == doctest::Approx(-2.0).epsilon(1e-14));
  for (const Vec3& v : path.vertices()) {
    CHECK(v.norm() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(v.z()) < 1e-14);
  }
}

TEST_CASE("cap loops run counterclockwise seen from the +axis side") {
  CHECK(winding_number(ClosedPath::cap(kPi / 2.0, 100), Vec3::UnitZ()).winding == 1);
  const Vec3 tilted = Vec3(1.0, 1.0, 1.0).normalized();
  CHECK(winding_number(ClosedPath::cap(0.8, 64, 1.0, tilted), tilted).winding == 1);
  CHECK(winding_number(ClosedPath::cap_wound(kPi / 2.0, 100, 3), Vec3::UnitZ())
            .winding == 3);
  // a cap about +x at 30 degrees never encircles the z axis
  CHECK(winding_number(ClosedPath::cap(kPi / 6.0, 50, 1.0, Vec3::UnitX()),
                       Vec3::UnitZ())
            .winding == 0);
}

TEST_CASE("cap factory validates its arguments") {
  CHECK_THROWS_AS(ClosedPath::cap(kPi / 2.0, 2), ValidationError);
  CHECK_THROWS_AS(ClosedPath::cap(0.0, 16), ValidationError);
  CHECK_THROWS_AS(ClosedPath::cap(kPi, 16), ValidationError);
  CHECK_THROWS_AS(ClosedPath::cap(1.0, 16, -1.0), ValidationError);
  CHECK_THROWS_AS(ClosedPath::cap_wound(1.0, 16, 0), ValidationError);
  CHECK_THROWS_AS(ClosedPath::cap(1.0, 16, 1.0, Vec3::Zero()), ValidationError);
}

TEST_CASE("csv round trip preserves vertices bit-exactly") {
  namespace fs = std::filesystem;
  const fs::path file = fs::temp_directory_path() / "loop_roundtrip.csv";
  const ClosedPath original = ClosedPath::cap(1.1, 17, 0.37);
  original.to_csv(file);
  const ClosedPath loaded = ClosedPath::from_csv(file);
  REQUIRE(loaded.size() == original.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK((loaded.vertices()[i] - original.vertices()[i]).norm() == 0.0);
  }
  fs::remove(file);
}

TEST_CASE("csv loader skips comments and headers and flags bad rows") {
  namespace fs = std::filesystem;
  const fs::path good = fs::temp_directory_path() / "loop_good.csv";
  {
    std::FILE* f = std::fopen(good.string().c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("# generated loop\nx,y,z\n1,0,0\n\n0, 1, 0\n0,0,1\n", f);
    std::fclose(f);
  }
  const ClosedPath path = ClosedPath::from_csv(good);
  CHECK(path.size() == 3);
  CHECK((path.vertices()[1] - Vec3(0, 1, 0)).norm() == 0.0);
  fs::remove(good);

  const fs::path bad = fs::temp_directory_path() / "loop_bad.csv";
  {
    std::FILE* f = std::fopen(bad.string().c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("1,0,0\n0;1;0\n0,0,1\n", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(ClosedPath::from_csv(bad), ValidationError);
  fs::remove(bad);
  CHECK_THROWS_AS(ClosedPath::from_csv("/nonexistent/loop.csv"), ValidationError);
}

TEST_CASE("solid angle of polar caps matches the closed form") {
  for (double theta : {0.4, kPi / 3.0, kPi / 2.0, 2.2}) {
    CAPTURE(theta);
    const double omega = solid_angle(ClosedPath::cap(theta, 2000)).omega;
    CHECK(std::abs(omega - kTwoPi * (1.0 - std::cos(theta))) < 1e-5);
  }
}

TEST_CASE("solid angle flips to the complement when the loop reverses") {
  const ClosedPath forward = ClosedPath::cap(1.0, 500);
  std::vector<Vec3> rev(forward.vertices().rbegin(), forward.vertices().rend());
  const SolidAngleResult a = solid_angle(forward);
  const SolidAngleResult b = solid_angle(ClosedPath(rev));
  CHECK(a.omega + b.omega == doctest::Approx(kFourPi).epsilon(1e-12));
  CHECK(a.complement == doctest::Approx(a.omega - kFourPi));
}

TEST_CASE("solid angle handles great-circle loops") {
  const double omega = solid_angle(ClosedPath::cap(kPi / 2.0, 360)).omega;
  CHECK(omega == doctest::Approx(kTwoPi).epsilon(1e-9));
}

TEST_CASE("solid angle stays tiny for sliver loops") {
  const ClosedPath sliver(
      {Vec3(1, 0, 0), Vec3(2, 1e-7, 0), Vec3(3, 0, 1e-7)});
  CHECK(std::abs(solid_angle(sliver).omega) < 1e-6);
}

TEST_CASE("solid angle respects a shifted apex") {
  const ClosedPath equator = ClosedPath::cap(kPi / 2.0, 3000);
  const Vec3 apex(0.0, 0.0, 0.3);
  // unit circle seen from (0,0,0.3): cone about -z with cos = 0.3/sqrt(1.09)
  const double expected = kTwoPi * (1.0 + 0.3 / std::sqrt(1.09));
  CHECK(solid_angle(equator, apex).omega == doctest::Approx(expected).epsilon(1e-6));
  CHECK_THROWS_AS(solid_angle(equator, equator.vertices()[5]), SingularityError);
}

TEST_CASE("winding number accumulates azimuth turns with tiny residual") {
  const WindingResult w = winding_number(ClosedPath::cap_wound(2.0, 64, 2),
                                         Vec3::UnitZ());
  CHECK(w.winding == 2);
  CHECK(std::abs(w.residual) < 1e-12);
  // reversed loop winds the other way
  const ClosedPath fwd = ClosedPath::cap(kPi / 2.0, 64);
  std::vector<Vec3> rev(fwd.vertices().rbegin(), fwd.vertices().rend());
  CHECK(winding_number(ClosedPath(rev), Vec3::UnitZ()).winding == -1);
}

TEST_CASE("winding number rejects paths touching the axis") {
  // (0,0,+-1) vertices sit exactly on the z axis
  CHECK_THROWS_AS(
      winding_number(ClosedPath::cap(kPi / 2.0, 4, 1.0, Vec3::UnitX()),
                     Vec3::UnitZ()),
      SingularityError);
  // segment crossing the axis off-vertex
  const ClosedPath crossing(
      {Vec3(1, -1e-9, 1), Vec3(-1, -1e-9, 1), Vec3(-1, 1e-9, 1), Vec3(1, 1e-9, 1)});
  CHECK_THROWS_AS(winding_number(crossing, Vec3::UnitZ()), SingularityError);
}

TEST_CASE("axis clearance finds the exact interior minimum of a chord") {
  // chord from (1,0,1) to (-1,0,1) touches the z axis at its midpoint even
  // though both endpoints sit 45 degrees away
  const std::vector<Vec3> touching = {Vec3(1, 0, 1), Vec3(-1, 0, 1)};
  CHECK(polyline_axis_clearance(touching, Vec3::UnitZ()) == 0.0);

  // both half-lines count, and the minimum sits inside the chord: the
  // closest point to -z is the midpoint, at cylinder radius 0.1*sqrt(1/2)
  const std::vector<Vec3> below = {Vec3(0.1, 0, -1), Vec3(0, 0.1, -1)};
  CHECK(polyline_axis_clearance(below, Vec3::UnitZ()) ==
        doctest::Approx(std::atan(0.1 * std::sqrt(0.5))).epsilon(1e-12));

  // equatorial chord: minimum stays at the endpoints, pi/2 off the axis
  const std::vector<Vec3> equator = {Vec3(1, 0, 0), Vec3(0, 1, 0)};
  CHECK(polyline_axis_clearance(equator, Vec3::UnitZ()) ==
        doctest::Approx(kPi / 2.0).epsilon(1e-12));

  // a vertex at the origin counts as on-axis
  const std::vector<Vec3> through_origin = {Vec3(1, 0, 0), Vec3(0, 0, 0)};
  CHECK(polyline_axis_clearance(through_origin, Vec3::UnitZ()) == 0.0);

  const std::vector<Vec3> lone = {Vec3(1, 0, 0)};
  CHECK_THROWS_AS(polyline_axis_clearance(lone, Vec3::UnitZ()), ValidationError);
}

TEST_CASE("line integral reproduces the azimuth circulation") {
  auto gradient_azimuth = [](const Vec3& r) {
    const double rho2 = r.x() * r.x() + r.y() * r.y();
    return Vec3(-r.y() / rho2, r.x() / rho2, 0.0);
  };
  const double circ = line_integral(gradient_azimuth, ClosedPath::cap(1.3, 48));
  CHECK(circ == doctest::Approx(kTwoPi).epsilon(1e-10));
}

TEST_CASE("line integral of a gradient field closes to zero") {
  auto gradient = [](const Vec3& r) { return Vec3(2.0 * r); };  // grad |r|^2
  const double circ = line_integral(gradient, ClosedPath::cap(0.9, 33, 1.7));
  CHECK(std::abs(circ) < 1e-10);
}

TEST_CASE("open line integral handles constant fields exactly") {
  const Vec3 c(1.0, 2.0, 3.0);
  const std::vector<Vec3> path = {Vec3(0, 0, 0), Vec3(1, 1, 0), Vec3(2, 0, 1)};
  auto constant = [&c](const Vec3&) { return c; };
  CHECK(line_integral_open(constant, path) ==
        doctest::Approx(c.dot(Vec3(2, 0, 1))).epsilon(1e-14));
  CHECK_THROWS_AS(line_integral_open(constant, std::vector<Vec3>{Vec3(1, 0, 0)}),
                  ValidationError);
  CHECK_THROWS_AS(line_integral_open(constant, path, -1.0), ValidationError);
}

TEST_CASE("line integral reports unresolvable structure as a tolerance failure") {
  auto noisy = [](const Vec3& r) { return Vec3(std::sin(1e8 * r.x()), 0.0, 0.0); };
  const std::vector<Vec3> path = {Vec3(0.1, 0, 0), Vec3(1.1, 0, 0)};
  CHECK_THROWS_AS(line_integral_open(noisy, path, 1e-12), ToleranceError);
}

TEST_CASE("line integral flags non-finite samples as singularities") {
  auto radial_unit = [](const Vec3& r) { return Vec3(r / r.norm()); };
  // the middle quadrature node of the single segment lands on the origin
  const std::vector<Vec3> path = {Vec3(-1, 0, 0), Vec3(1, 0, 0)};
  CHECK_THROWS_AS(line_integral_open(radial_unit, path), SingularityError);
}

TEST_CASE("random shell loops are deterministic and respect the keep-out rules") {
  std::mt19937_64 rng_a(42), rng_b(42);
  const ClosedPath a = random_shell_loop(rng_a);
  const ClosedPath b = random_shell_loop(rng_b);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK((a.vertices()[i] - b.vertices()[i]).norm() == 0.0);
  }

  std::mt19937_64 rng(7);
  const Vec3 avoid = -Vec3::UnitZ();
  for (int trial = 0; trial < 20; ++trial) {
    const ClosedPath loop = random_shell_loop(rng, 8, 2.0, avoid, 0.3, 0.25);
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Vec3& v = loop.vertices()[i];
      CHECK(v.norm() == doctest::Approx(2.0).epsilon(1e-12));
      const double axis_angle =
          std::acos(std::clamp(v.normalized().dot(avoid), -1.0, 1.0));
      CHECK(axis_angle >= 0.3);
      const Vec3& w = loop.vertices()[(i + 1) % loop.size()];
      const Vec3 d = w - v;
      const double t = std::clamp(-v.dot(d) / d.squaredNorm(), 0.0, 1.0);
      CHECK((v + t * d).norm() >= 0.25 * 2.0);
    }
  }
}
