#include "monopole/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "monopole/coriolis.hpp"
#include "monopole/dynamics.hpp"
#include "monopole/errors.hpp"
#include "monopole/exchange.hpp"
#include "monopole/fields.hpp"
#include "monopole/loops.hpp"
#include "monopole/phases.hpp"
#include "monopole/setup.hpp"

namespace monopole {

namespace {

std::string text(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

Vec3 central_curl(const VectorField& field, const Vec3& p, double h) {
  auto partial = [&](int i) {
    Vec3 e = Vec3::Zero();
    e[i] = h;
    return Vec3((field(p + e) - field(p - e)) / (2.0 * h));
  };
  const Vec3 dx = partial(0), dy = partial(1), dz = partial(2);
  return Vec3(dy.z() - dz.y(), dz.x() - dx.z(), dx.y() - dy.x());
}

}  // namespace

std::vector<CriterionResult> run_acceptance(double tolerance_scale) {
  if (!(tolerance_scale > 0.0)) {
    throw ValidationError("tolerance scale must be positive");
  }
  const double ts = tolerance_scale;
  std::vector<CriterionResult> results;
  auto add = [&results](int index, const char* name, auto&& body) {
    CriterionResult r;
    r.index = index;
    r.name = name;
    try {
      body(r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  };

  // shared benchmark trajectory for the first two criteria
  const PhysicalSetup unit_setup = PhysicalSetup::quantized(1);
  const ParticleState start{Vec3(1.0, 0.0, 0.0), Vec3(0.0, 0.5, 0.0), 0.0};
  const IntegratorSpec ispec = IntegratorSpec::defaults_for(1.0);
  const TrajectoryRecord record = integrate(start, unit_setup, ispec, 1e9, 10000);

  add(1, "cone invariant", [&](CriterionResult& r) {
    const double tol_cone = 1e-6 * ts;
    const double tol_j = 1e-6 * ts;
    const double tol_speed = 1e-12 * ts;
    if (record.samples.size() != 10001) {
      r.passed = false;
      r.detail = text("expected 10001 samples, got %zu", record.samples.size());
      return;
    }
    const double j0 = record.samples.front().total_angular_momentum.norm();
    const double speed0 = record.samples.front().speed;
    double worst_cone = 0.0, worst_j = 0.0, worst_speed = 0.0;
    for (const TrajectorySample& s : record.samples) {
      worst_cone = std::max(worst_cone,
                            std::abs(s.cone_projection + unit_setup.coupling()));
      worst_j = std::max(worst_j,
                         std::abs(s.total_angular_momentum.norm() - j0) / j0);
      worst_speed = std::max(worst_speed, std::abs(s.speed - speed0));
    }
    r.passed = worst_cone <= tol_cone && worst_j <= tol_j && worst_speed <= tol_speed;
    r.detail = text("cone %.3g (tol %.1g), |J| drift %.3g (tol %.1g), speed %.3g (tol %.1g)",
                    worst_cone, tol_cone, worst_j, tol_j, worst_speed, tol_speed);
  });

  add(2, "energy constancy", [&](CriterionResult& r) {
    const double tol = 1e-6 * ts;
    const StringConfig string = StringConfig::magnetic_along(Vec3::UnitZ());
    double lo1 = 0, hi1 = 0, lo2 = 0, hi2 = 0;
    bool first = true;
    for (const TrajectorySample& s : record.samples) {
      const double e1 = energy_type1(s.state, unit_setup);
      const double e2 = energy_type2(s.state, unit_setup, string);
      if (first) {
        lo1 = hi1 = e1;
        lo2 = hi2 = e2;
        first = false;
      } else {
        lo1 = std::min(lo1, e1);
        hi1 = std::max(hi1, e1);
        lo2 = std::min(lo2, e2);
        hi2 = std::max(hi2, e2);
      }
    }
    const double drift1 = (hi1 - lo1) / std::abs(lo1);
    const double drift2 = (hi2 - lo2) / std::abs(lo2);
    r.passed = drift1 <= tol && drift2 <= tol;
    r.detail = text("radial-form drift %.3g, minimal-coupling drift %.3g (tol %.1g)",
                    drift1, drift2, tol);
  });

  add(3, "phase duality sweep", [&](CriterionResult& r) {
    const double tol = 1e-6 * ts;
    const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
    std::mt19937_64 rng(0x0ddba11dULL);
    double worst_offset = 0.0, worst_parity = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const PhysicalSetup setup = PhysicalSetup::quantized(n);
      for (int trial = 0; trial < 100; ++trial) {
        const ClosedPath loop = random_shell_loop(rng);
        const PhaseReport report = duality_report(loop, setup, string, tol);
        const double offset = std::abs(
            wrap_angle(report.phi_type2 - report.phi_type1 - n * kPi));
        worst_offset = std::max(worst_offset, offset);
        const double parity = (n % 2 == 0)
                                  ? std::abs(report.delta_mod_2pi)
                                  : std::abs(std::abs(report.delta_mod_2pi) - kPi);
        worst_parity = std::max(worst_parity, parity);
      }
    }
    r.passed = worst_offset <= tol && worst_parity <= tol;
    r.detail = text("300 loops, worst offset %.3g, worst parity residual %.3g (tol %.1g)",
                    worst_offset, worst_parity, tol);
  });

  add(4, "circulation closed form", [&](CriterionResult& r) {
    const double tol = 1e-8 * ts;
    const PhysicalSetup setup = PhysicalSetup::quantized(2);
    const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
    const ClosedPath circle = ClosedPath::cap(kPi / 3.0, 50000);
    const Type2Phase phase = type2_phase(circle, setup, string, tol);
    const double err = std::abs(phase.value - kPi);
    r.passed = err <= tol;
    r.detail = text("phi' %.12g vs pi, err %.3g (tol %.1g)", phase.value, err, tol);
  });

  add(5, "spin grid residual", [&](CriterionResult& r) {
    const double tol = 1e-12 * ts;
    double worst = 0.0;
    for (int n = -3; n <= 3; ++n) {
      const PhysicalSetup setup = PhysicalSetup::quantized(n);
      worst = std::max(worst, std::abs(quantization_residual(
                                  setup.spin_magnitude(), setup.hbar())));
    }
    const double off_grid = quantization_residual(0.6, 1.0);
    const double off_err = std::abs(off_grid + 0.4 * kPi);
    r.passed = worst <= tol && off_err <= tol;
    r.detail = text("grid worst %.3g, off-grid residual %.12g vs -0.4*pi err %.3g (tol %.1g)",
                    worst, off_grid, off_err, tol);
  });

  add(6, "solid angle oracle", [&](CriterionResult& r) {
    const double tol = 1e-4 * ts;
    const double thetas[] = {kPi / 6.0, kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0};
    double worst = 0.0;
    for (double theta : thetas) {
      const double omega = solid_angle(ClosedPath::cap(theta, 1000)).omega;
      worst = std::max(worst, std::abs(omega - kTwoPi * (1.0 - std::cos(theta))));
    }
    r.passed = worst <= tol;
    r.detail = text("4 caps at 1000 vertices, worst error %.3g (tol %.1g)", worst, tol);
  });

  add(7, "gauge mismatch", [&](CriterionResult& r) {
    const double tol = 1e-8 * ts;
    const PhysicalSetup setup = PhysicalSetup::quantized(1);
    const StringConfig string_a = StringConfig::magnetic_along(Vec3::UnitZ());
    const StringConfig string_b = StringConfig::magnetic_along(-Vec3::UnitZ());
    const ClosedPath equator = ClosedPath::cap(kPi / 2.0, 720);
    const double mismatch = gauge_mismatch(equator, setup, string_a, string_b);
    const double mismatch_err = std::abs(mismatch - kTwoPi);
    const double phase_a = type2_phase(equator, setup, string_a).value;
    const double phase_b = type2_phase(equator, setup, string_b).value;
    const double phase_shift = std::abs(wrap_angle(phase_b - phase_a));
    r.passed = mismatch_err <= tol && phase_shift <= tol;
    r.detail = text("mismatch %.12g vs 2*pi err %.3g, wrapped phase shift %.3g (tol %.1g)",
                    mismatch, mismatch_err, phase_shift, tol);
  });

  add(8, "unitary winding grid", [&](CriterionResult& r) {
    const double tol = 1e-8 * ts;
    const ClosedPath loops[] = {
        ClosedPath::cap(kPi / 6.0, 400, 1.0, Vec3::UnitX()),  // winding 0
        ClosedPath::cap(kPi / 2.0, 400),                      // winding 1
        ClosedPath::cap_wound(kPi / 2.0, 400, 2),             // winding 2
    };
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const PhysicalSetup setup = PhysicalSetup::quantized(n);
      for (int w = 0; w < 3; ++w) {
        const double value = unitary_loop_condition(loops[w], setup);
        worst = std::max(worst, std::abs(value - n * kPi * w));
      }
    }
    r.passed = worst <= tol;
    r.detail = text("n in {1,2,3} x windings {0,1,2}, worst error %.3g (tol %.1g)",
                    worst, tol);
  });

  add(9, "volume quadratures", [&](CriterionResult& r) {
    const double tol_thomson = 1e-3 * ts;
    const double tol_tube = 1e-2 * ts;
    const PhysicalSetup setup = PhysicalSetup::quantized(1);
    const Vec3 r_charge(0.0, 0.0, 1.0);
    const VolumeIntegralResult thomson = thomson_integral(r_charge, setup);
    const Vec3 expected = field_angular_momentum(r_charge, setup);
    const double rel = (thomson.value - expected).norm() / expected.norm();
    const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
    const FluxTube tube(-Vec3::UnitZ(), 0.01, 200.0);
    const Vec3 charge_pos(1.0, 0.0, 0.0);
    const VolumeIntegralResult tube_momentum =
        flux_tube_momentum(charge_pos, setup, tube);
    const Vec3 tube_expected = string_momentum(charge_pos, setup, string);
    const double tube_rel =
        (tube_momentum.value - tube_expected).norm() / tube_expected.norm();
    r.passed = rel <= tol_thomson && tube_rel <= tol_tube;
    r.detail = text("stored-spin quadrature rel %.3g (tol %.1g), tube rel %.3g (tol %.1g)",
                    rel, tol_thomson, tube_rel, tol_tube);
  });

  add(10, "exchange statistics", [&](CriterionResult& r) {
    const double tol = 1e-6 * ts;
    const StringConfig string = StringConfig::magnetic_along(-Vec3::UnitZ());
    const PhysicalSetup setup1 = PhysicalSetup::quantized(1);
    auto field = [&](const Vec3& p) {
      return relative_momentum_field(p, setup1, string);
    };
    double worst_curl = 0.0;
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        for (int k = 0; k < 5; ++k) {
          const Vec3 p(0.4 + 0.3 * i, 0.35 + 0.3 * j, -1.0 + 0.5 * k);
          worst_curl = std::max(worst_curl, central_curl(field, p, 1e-4).norm());
        }
      }
    }
    double worst_phase = 0.0;
    for (int n = 1; n <= 2; ++n) {
      const PhysicalSetup setup = PhysicalSetup::quantized(n);
      std::vector<Vec3> half_circle;
      const int m = 200;
      half_circle.reserve(m + 1);
      for (int k = 0; k <= m; ++k) {
        const double angle = kPi * k / m;
        half_circle.emplace_back(std::cos(angle), std::sin(angle), 0.0);
      }
      const double alpha = exchange_phase(half_circle, setup, string, tol);
      worst_phase = std::max(worst_phase, std::abs(alpha - n * kPi));
    }
    bool table_ok = true;
    for (int twice_spin = 0; twice_spin <= 2; ++twice_spin) {
      for (int n = 0; n <= 3; ++n) {
        const CompositeSpec composite(0.5 * twice_spin, n);
        const int expected = ((twice_spin + n) % 2 == 0) ? 1 : -1;
        if (exchange_statistics(composite) != expected) table_ok = false;
      }
    }
    r.passed = worst_curl <= tol && worst_phase <= tol && table_ok;
    r.detail = text("grid curl %.3g, half-turn phase err %.3g (tol %.1g), sign table %s",
                    worst_curl, worst_phase, tol, table_ok ? "ok" : "WRONG");
  });

  add(11, "plane precession", [&](CriterionResult& r) {
    const double tol_rel = 1e-3 * ts;
    const PhysicalSetup setup = PhysicalSetup::quantized(2);
    const CorrespondenceReport report =
        type1_correspondence(kPi / 6.0, setup, 200.0);
    const double rel = std::abs(report.foucault + kPi) / kPi;
    const double cap_shift = kTwoPi * (1.0 - std::sin(kPi / 6.0)) - kTwoPi;
    const double vs_cap = std::abs(report.foucault - cap_shift) / kPi;
    const double vs_phase = report.residual / kPi;
    r.passed = rel <= tol_rel && vs_cap <= tol_rel && vs_phase <= tol_rel;
    r.detail = text("precession %.8g vs -pi rel %.3g, vs cap %.3g, vs loop phase %.3g (tol %.1g)",
                    report.foucault, rel, vs_cap, vs_phase, tol_rel);
  });

  return results;
}

}  // namespace monopole
