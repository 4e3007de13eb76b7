#include "monopole/fields.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "monopole/errors.hpp"

namespace monopole {

namespace {

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGl8X = {
    -0.96028985649753623, -0.79666647741362674, -0.52553240991632899,
    -0.18343464249564980,
    0.18343464249564980, 0.52553240991632899, 0.79666647741362674,
    0.96028985649753623};
constexpr std::array<double, 8> kGl8W = {
    0.10122853629037626, 0.22238103445337447, 0.31370664587788729,
    0.36268378337836198,
    0.36268378337836198, 0.31370664587788729, 0.22238103445337447,
    0.10122853629037626};

// 7-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 7> kGl7X = {
    -0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
    0.0,
    0.4058451513773972, 0.7415311855993945, 0.9491079123427585};
constexpr std::array<double, 7> kGl7W = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694,
    0.3818300505051189, 0.2797053914892767, 0.1294849661688697};

// 4-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 4> kGl4X = {
    -0.86113631159405258, -0.33998104358485626,
    0.33998104358485626, 0.86113631159405258};
constexpr std::array<double, 4> kGl4W = {
    0.34785484513745386, 0.65214515486254614,
    0.65214515486254614, 0.34785484513745386};

using Panel = std::pair<double, double>;

// Panels geometrically graded toward c0 from both sides, clamped into [a, b].
void graded_panels(double a, double b, double c0, double min_w,
                   std::vector<Panel>& out) {
  c0 = std::clamp(c0, a, b);
  auto side = [&](double lo, double hi, bool towards_hi) {
    const double length = hi - lo;
    if (length <= min_w) {
      out.emplace_back(lo, hi);
      return;
    }
    double w = 0.5 * length;
    if (towards_hi) {
      double pos = lo;
      while (w > min_w) {
        out.emplace_back(pos, pos + w);
        pos += w;
        w *= 0.5;
      }
      out.emplace_back(pos, hi);
    } else {
      double pos = hi;
      while (w > min_w) {
        out.emplace_back(pos - w, pos);
        pos -= w;
        w *= 0.5;
      }
      out.emplace_back(lo, pos);
    }
  };
  if (c0 - a > 1e-14) side(a, c0, true);
  if (b - c0 > 1e-14) side(c0, b, false);
}

// Uniform panels of width base_w over [u_min, u_max], refined around
// refine_at down to min_w where a panel touches its neighborhood.
std::vector<Panel> radial_panels(double u_min, double u_max, double base_w,
                                 double refine_at, double min_w) {
  std::vector<Panel> out;
  std::vector<double> edges;
  for (double e = u_min; e < u_max; e += base_w) edges.push_back(e);
  edges.push_back(u_max);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i], b = edges[i + 1];
    const bool near = (a < refine_at && refine_at < b) ||
                      std::abs(a - refine_at) < base_w ||
                      std::abs(b - refine_at) < base_w;
    if (near && min_w < base_w) {
      graded_panels(a, b, refine_at, min_w, out);
    } else {
      out.emplace_back(a, b);
    }
  }
  return out;
}

struct ThomsonFrame {
  double charge;     // e
  double strength;   // g
  double light;      // c
  double distance;   // R, charge rotated onto +z
};

// Angular momentum density integrand in the log-radial measure:
// x cross (E cross B) / (4 pi c) * r^3 * sin(theta).
Vec3 thomson_integrand(double r, double theta, double phi,
                       const ThomsonFrame& f) {
  const double s = std::sin(theta);
  const Vec3 x(r * s * std::cos(phi), r * s * std::sin(phi),
               r * std::cos(theta));
  const Vec3 d = x - Vec3(0.0, 0.0, f.distance);
  const double dn = d.norm();
  const Vec3 electric = f.charge * d / (dn * dn * dn);
  const Vec3 magnetic = f.strength * x / (r * r * r);
  const Vec3 density = x.cross(electric.cross(magnetic)) / (kFourPi * f.light);
  return density * (r * r * r) * s;
}

Vec3 thomson_ray(double theta, double phi, const ThomsonFrame& f, double eps,
                 double u_min, double u_max, double base_w) {
  const double s = std::sin(theta);
  const double cth = std::cos(theta);
  const double R = f.distance;
  std::vector<Panel> intervals;
  if (cth > 0.0 && R * s < eps) {
    // the ray pierces the exclusion ball around the charge
    const double h = std::sqrt(eps * eps - R * s * R * s);
    const double r_in = std::max(R * cth - h, std::exp(u_min));
    const double r_out = R * cth + h;
    intervals.emplace_back(u_min, std::log(r_in));
    intervals.emplace_back(std::log(r_out), u_max);
  } else {
    intervals.emplace_back(u_min, u_max);
  }
  const double ln_R = std::log(R);
  const double d_ray = std::max(cth > 0.0 ? R * s : R, eps);
  const double min_w = std::max(0.25 * d_ray / R, 1e-4);
  Vec3 total = Vec3::Zero();
  for (const auto& [a, b] : intervals) {
    if (b <= a) continue;
    for (const auto& [pa, pb] : radial_panels(a, b, base_w, ln_R, min_w)) {
      const double mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
      for (int i = 0; i < 8; ++i) {
        const double u = mid + half * kGl8X[i];
        total += (half * kGl8W[i]) * thomson_integrand(std::exp(u), theta, phi, f);
      }
    }
  }
  return total;
}

Vec3 thomson_at_eps(const ThomsonFrame& f, double eps, int resolution,
                    double r_outer_factor) {
  const double R = f.distance;
  const double u_min = std::log(std::max(1e-3 * R, eps));
  const double u_max = std::log(r_outer_factor * R);
  const double base_w = 0.5 / resolution;
  const double theta_cap = std::asin(std::min(eps / R, 1.0));
  std::vector<Panel> panels = {{0.0, 0.5 * theta_cap},
                               {0.5 * theta_cap, 0.9 * theta_cap},
                               {0.9 * theta_cap, theta_cap}};
  double pos = theta_cap;
  double w = theta_cap / resolution;
  while (pos < kPi) {
    panels.emplace_back(pos, std::min(pos + w, kPi));
    pos += w;
    w *= 1.7;
  }
  // 8 azimuth nodes integrate the low-harmonic phi dependence exactly
  constexpr int kNPhi = 8;
  Vec3 total = Vec3::Zero();
  for (const auto& [ta, tb] : panels) {
    if (tb <= ta) continue;
    const double mid = 0.5 * (ta + tb), half = 0.5 * (tb - ta);
    for (int i = 0; i < 8; ++i) {
      const double theta = mid + half * kGl8X[i];
      Vec3 ring = Vec3::Zero();
      for (int k = 0; k < kNPhi; ++k) {
        const double phi = kTwoPi * k / kNPhi;
        ring += thomson_ray(theta, phi, f, eps, u_min, u_max, base_w);
      }
      total += (half * kGl8W[i]) * ring * (kTwoPi / kNPhi);
    }
  }
  return total;
}

}  // namespace

Vec3 monopole_field(const Vec3& r, const PhysicalSetup& setup) {
  const double rn = r.norm();
  if (!(rn > 0.0)) throw SingularityError("monopole field evaluated at the origin");
  return setup.monopole_strength() * r / (rn * rn * rn);
}

Vec3 field_angular_momentum(const Vec3& r, const PhysicalSetup& setup) {
  const double rn = r.norm();
  if (!(rn > 0.0)) {
    throw SingularityError("field angular momentum evaluated at the origin");
  }
  return -setup.coupling() * r / rn;
}

Vec3 string_momentum(const Vec3& r, const PhysicalSetup& setup,
                     const StringConfig& string, double cutoff_angle) {
  const double rn = r.norm();
  if (!(rn > 0.0)) throw SingularityError("string momentum evaluated at the origin");
  const Vec3 rhat = r / rn;
  const Vec3 d = string.direction();
  if (std::acos(std::clamp(rhat.dot(d), -1.0, 1.0)) < cutoff_angle) {
    throw SingularityError("point within the cutoff cone of the string");
  }
  const Vec3 a = -d;
  return setup.coupling() * a.cross(rhat) / (rn * (1.0 + a.dot(rhat)));
}

double gauge_mismatch(const ClosedPath& path, const PhysicalSetup& setup,
                      const StringConfig& string_a, const StringConfig& string_b,
                      double tolerance) {
  auto difference = [&](const Vec3& r) {
    return string_momentum(r, setup, string_b) - string_momentum(r, setup, string_a);
  };
  return line_integral(difference, path, tolerance);
}

VolumeIntegralResult thomson_integral(const Vec3& r_charge,
                                      const PhysicalSetup& setup,
                                      const QuadratureSpec& spec) {
  if (spec.resolution < 1) throw ValidationError("quadrature resolution must be >= 1");
  if (!(spec.tolerance > 0.0)) throw ValidationError("quadrature tolerance must be positive");
  const double R = r_charge.norm();
  if (!(R > 0.0) || !r_charge.allFinite()) {
    throw ValidationError("charge must sit away from the monopole");
  }
  const ThomsonFrame frame{setup.charge(), setup.monopole_strength(),
                           setup.light_speed(), R};
  constexpr double kOuterFactor = 1e4;
  const double eps = 1e-2 * R;
  const Vec3 coarse = thomson_at_eps(frame, eps, spec.resolution, kOuterFactor);
  const Vec3 fine = thomson_at_eps(frame, 0.5 * eps, spec.resolution, kOuterFactor);
  const Vec3 value_z = (4.0 * fine - coarse) / 3.0;
  // exclusion-radius extrapolation residual plus the analytic outer tail
  const double tail = std::abs(setup.coupling()) / kOuterFactor;
  const double estimate = (fine - coarse).norm() / 3.0 + tail;
  if (estimate > spec.tolerance) {
    throw ToleranceError("volume quadrature error estimate exceeds the tolerance");
  }
  // rotate the +z-frame result back to the charge direction
  const Eigen::Quaterniond q =
      Eigen::Quaterniond::FromTwoVectors(r_charge, Vec3::UnitZ());
  return VolumeIntegralResult{q.conjugate() * value_z, estimate};
}

FluxTube::FluxTube(const Vec3& axis, double radius, double length)
    : axis_(unit_or_throw(axis, "flux tube axis")), radius_(radius), length_(length) {
  if (!(radius > 0.0)) throw ValidationError("flux tube radius must be positive");
  if (!(length > 0.0)) throw ValidationError("flux tube length must be positive");
}

double FluxTube::interior_field(const PhysicalSetup& setup) const {
  return 4.0 * setup.monopole_strength() / (radius_ * radius_);
}

double FluxTube::flux(const PhysicalSetup& setup) const {
  return kFourPi * setup.monopole_strength();
}

VolumeIntegralResult flux_tube_momentum(const Vec3& r_charge,
                                        const PhysicalSetup& setup,
                                        const FluxTube& tube,
                                        const QuadratureSpec& spec) {
  if (spec.resolution < 1) throw ValidationError("quadrature resolution must be >= 1");
  if (!(spec.tolerance > 0.0)) throw ValidationError("quadrature tolerance must be positive");
  if (!r_charge.allFinite()) throw ValidationError("charge position is not finite");
  const Vec3 n = tube.axis();
  const double s_c = r_charge.dot(n);
  const double rho_c = (r_charge - s_c * n).norm();
  if (s_c >= 0.0 && s_c <= tube.length() && rho_c <= tube.radius()) {
    throw ValidationError("charge sits inside the flux tube");
  }
  const Vec3 seed = std::abs(n.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX();
  const Vec3 e2 = n.cross(seed).normalized();
  const Vec3 e1 = e2.cross(n);
  // interior field points toward the open end at the origin
  const Vec3 field_vec = -n * tube.interior_field(setup);

  auto sweep = [&](double first_width) {
    std::vector<Panel> panels;
    double pos = 0.0, w = first_width;
    while (pos < tube.length()) {
      panels.emplace_back(pos, std::min(pos + w, tube.length()));
      pos += w;
      w *= 1.6;
    }
    constexpr int kNPhi = 8;
    const int n_rho = spec.resolution;
    Vec3 total = Vec3::Zero();
    for (const auto& [za, zb] : panels) {
      const double zm = 0.5 * (za + zb), zh = 0.5 * (zb - za);
      for (int iz = 0; iz < 7; ++iz) {
        const double s = zm + zh * kGl7X[iz];
        const double wz = zh * kGl7W[iz];
        for (int ir = 0; ir < n_rho; ++ir) {
          const double ra = tube.radius() * ir / n_rho;
          const double rb = tube.radius() * (ir + 1) / n_rho;
          const double rm = 0.5 * (ra + rb), rh = 0.5 * (rb - ra);
          for (int jr = 0; jr < 4; ++jr) {
            const double rho = rm + rh * kGl4X[jr];
            const double wr = rh * kGl4W[jr];
            for (int k = 0; k < kNPhi; ++k) {
              const double phi = kTwoPi * k / kNPhi;
              const Vec3 x = s * n + rho * (std::cos(phi) * e1 + std::sin(phi) * e2);
              const Vec3 d = x - r_charge;
              const double dn = d.norm();
              const Vec3 electric = setup.charge() * d / (dn * dn * dn);
              total += wz * wr * (kTwoPi / kNPhi) * rho *
                       electric.cross(field_vec) / (kFourPi * setup.light_speed());
            }
          }
        }
      }
    }
    return total;
  };

  const Vec3 coarse = sweep(0.25 / spec.resolution);
  const Vec3 fine = sweep(0.125 / spec.resolution);
  const double perp = rho_c;
  const double tail = std::abs(setup.coupling()) * perp /
                      (2.0 * tube.length() * tube.length());
  const double estimate = (fine - coarse).norm() + tail;
  if (estimate > spec.tolerance) {
    throw ToleranceError("volume quadrature error estimate exceeds the tolerance");
  }
  return VolumeIntegralResult{fine, estimate};
}

}  // namespace monopole
