#include "monopole/setup.hpp"

#include <cmath>
#include <string>

#include "monopole/errors.hpp"
#include "monopole/geometry.hpp"

namespace monopole {

namespace {

double checked(std::optional<double> v, double fallback, const char* name,
               bool must_be_positive) {
  const double x = v.value_or(fallback);
  if (!std::isfinite(x)) {
    throw ValidationError(std::string(name) + " must be finite");
  }
  if (must_be_positive && !(x > 0.0)) {
    throw ValidationError(std::string(name) + " must be positive");
  }
  return x;
}

}  // namespace

PhysicalSetup PhysicalSetup::quantized(int n, const SetupOverrides& o) {
  PhysicalSetup s;
  s.n_ = n;
  s.e_ = checked(o.charge, 1.0, "charge", false);
  if (s.e_ == 0.0) throw ValidationError("charge must be non-zero");
  s.hbar_ = checked(o.hbar, 1.0, "hbar", true);
  s.c_ = checked(o.light_speed, 1.0, "light_speed", true);
  s.m_ = checked(o.mass, 1.0, "mass", true);
  s.g_ = n * s.hbar_ * s.c_ / (2.0 * s.e_);
  return s;
}

double PhysicalSetup::spin_magnitude() const {
  return std::abs(n_) * hbar_ / 2.0;
}

double quantization_residual(double spin, double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(spin)) {
    throw ValidationError("quantization_residual needs finite spin and positive hbar");
  }
  return wrap_angle(-2.0 * kTwoPi * spin / hbar);
}

}  // namespace monopole
