#pragma once

#include <optional>

namespace monopole {

/// Optional replacements for the unit-system defaults e = hbar = c = m = 1.
struct SetupOverrides {
  std::optional<double> charge;
  std::optional<double> hbar;
  std::optional<double> light_speed;
  std::optional<double> mass;
};

/// Charge/monopole pair with the coupling locked to an integer index n:
/// g = n*hbar*c/(2e), so that eg/c = n*hbar/2 by construction.
class PhysicalSetup {
 public:
  /// Build a quantized setup. Throws ValidationError on non-finite overrides,
  /// zero charge, or non-positive hbar/c/m.
  static PhysicalSetup quantized(int n, const SetupOverrides& o = {});

  int n() const { return n_; }
  double charge() const { return e_; }
  double monopole_strength() const { return g_; }
  double hbar() const { return hbar_; }
  double light_speed() const { return c_; }
  double mass() const { return m_; }

  /// Signed coupling eg/c. Equals n*hbar/2.
  double coupling() const { return e_ * g_ / c_; }

  /// Magnitude of the stored field angular momentum, |n|*hbar/2.
  double spin_magnitude() const;

 private:
  PhysicalSetup() = default;
  int n_ = 0;
  double e_ = 1.0, g_ = 0.0, hbar_ = 1.0, c_ = 1.0, m_ = 1.0;
};

/// Distance of a candidate spin value from the nearest quantized level,
/// reported as the wrapped return-phase defect wrap(-4*pi*spin/hbar) in
/// (-pi, pi]. Zero exactly at spin = k*hbar/2.
double quantization_residual(double spin, double hbar);

}  // namespace monopole
