#include "monopole/loops.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "monopole/errors.hpp"

namespace monopole {

namespace {

// 7-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 7> kGaussX = {
    -0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
    0.0,
    0.4058451513773972, 0.7415311855993945, 0.9491079123427585};
constexpr std::array<double, 7> kGaussW = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694,
    0.3818300505051189, 0.2797053914892767, 0.1294849661688697};

constexpr int kMaxSubdivisionDepth = 20;

double gauss7(const VectorField& field, const Vec3& a, const Vec3& b) {
  const Vec3 mid = 0.5 * (a + b);
  const Vec3 half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 7; ++i) {
    const Vec3 x = mid + kGaussX[i] * half;
    const Vec3 f = field(x);
    if (!f.allFinite()) {
      std::ostringstream os;
      os << "non-finite field sample at (" << x.x() << ", " << x.y() << ", "
         << x.z() << ")";
      throw SingularityError(os.str());
    }
    acc += kGaussW[i] * f.dot(half);
  }
  return acc;
}

double adaptive_segment(const VectorField& field, const Vec3& a, const Vec3& b,
                        double tolerance, int depth) {
  const double whole = gauss7(field, a, b);
  const Vec3 mid = 0.5 * (a + b);
  const double left = gauss7(field, a, mid);
  const double right = gauss7(field, mid, b);
  const double split = left + right;
  if (std::abs(whole - split) <= tolerance) return split;
  if (depth >= kMaxSubdivisionDepth) {
    throw ToleranceError("line integral did not converge within the subdivision cap");
  }
  return adaptive_segment(field, a, mid, 0.5 * tolerance, depth + 1) +
         adaptive_segment(field, mid, b, 0.5 * tolerance, depth + 1);
}

double polyline_integral(const VectorField& field, std::span<const Vec3> verts,
                         bool closed, double tolerance) {
  if (verts.size() < 2) throw ValidationError("polyline needs at least 2 vertices");
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  const std::size_t nseg = closed ? verts.size() : verts.size() - 1;
  const double seg_tol = tolerance / static_cast<double>(nseg);
  double total = 0.0;
  for (std::size_t i = 0; i < nseg; ++i) {
    const Vec3& a = verts[i];
    const Vec3& b = verts[(i + 1) % verts.size()];
    total += adaptive_segment(field, a, b, seg_tol, 0);
  }
  return total;
}

double segment_origin_distance(const Vec3& a, const Vec3& b) {
  const Vec3 d = b - a;
  const double len2 = d.squaredNorm();
  if (len2 == 0.0) return a.norm();
  const double t = std::clamp(-a.dot(d) / len2, 0.0, 1.0);
  return (a + t * d).norm();
}

}  // namespace

ClosedPath::ClosedPath(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw ValidationError("closed path needs at least 3 vertices");
  }
  double scale = 0.0;
  for (const Vec3& v : vertices_) {
    if (!v.allFinite()) throw ValidationError("closed path vertex is not finite");
    scale = std::max(scale, v.norm());
  }
  const double eps = 1e-12 * scale;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vec3& a = vertices_[i];
    const Vec3& b = vertices_[(i + 1) % vertices_.size()];
    if (a.norm() <= eps) throw ValidationError("closed path vertex at the origin");
    if ((b - a).norm() <= eps) {
      throw ValidationError("consecutive closed path vertices coincide");
    }
    if (segment_origin_distance(a, b) <= eps) {
      throw ValidationError("closed path segment passes through the origin");
    }
  }
}

ClosedPath ClosedPath::cap(double theta, int n_vertices, double radius,
                           const Vec3& axis) {
  return cap_wound(theta, n_vertices, 1, radius, axis);
}

ClosedPath ClosedPath::cap_wound(double theta, int n_vertices_per_turn, int turns,
                                 double radius, const Vec3& axis) {
  if (n_vertices_per_turn < 3) throw ValidationError("cap needs at least 3 vertices");
  if (turns < 1) throw ValidationError("cap winding must be at least 1");
  if (!(radius > 0.0)) throw ValidationError("cap radius must be positive");
  if (!(theta > 0.0) || !(theta < kPi)) {
    throw ValidationError("cap polar angle must lie strictly inside (0, pi)");
  }
  const Vec3 n = unit_or_throw(axis, "cap axis");
  // right-handed in-plane pair; +z axis keeps the usual (x, y) start
  const Vec3 seed = std::abs(n.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX();
  const Vec3 e2 = n.cross(seed).normalized();
  const Vec3 e1 = e2.cross(n);
  const double s = std::sin(theta), c = std::cos(theta);
  std::vector<Vec3> verts;
  verts.reserve(static_cast<std::size_t>(n_vertices_per_turn) * turns);
  const int total = n_vertices_per_turn * turns;
  for (int k = 0; k < total; ++k) {
    const double phi = kTwoPi * static_cast<double>(k) / n_vertices_per_turn;
    verts.push_back(radius * (s * (std::cos(phi) * e1 + std::sin(phi) * e2) + c * n));
  }
  // wound copies revisit the same geometric circle; nudge nothing, the path
  // is still a valid polyline because consecutive vertices stay distinct
  return ClosedPath(std::move(verts));
}

ClosedPath ClosedPath::from_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot open path file: " + file.string());
  std::vector<Vec3> verts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::string squashed;
    for (char ch : line) {
      if (!std::isspace(static_cast<unsigned char>(ch))) squashed += ch;
    }
    if (squashed.empty() || squashed == "x,y,z") continue;
    std::istringstream ss(squashed);
    Vec3 v;
    char c1 = 0, c2 = 0;
    if (!(ss >> v.x() >> c1 >> v.y() >> c2 >> v.z()) || c1 != ',' || c2 != ',') {
      throw ValidationError("bad vertex row at line " + std::to_string(lineno) +
                            " of " + file.string());
    }
    verts.push_back(v);
  }
  return ClosedPath(std::move(verts));
}

void ClosedPath::to_csv(const std::filesystem::path& file) const {
  std::ofstream out(file);
  if (!out) throw ValidationError("cannot write path file: " + file.string());
  out << "x,y,z\n";
  char buf[96];
  for (const Vec3& v : vertices_) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", v.x(), v.y(), v.z());
    out << buf;
  }
}

SolidAngleResult solid_angle(const ClosedPath& path, const Vec3& apex) {
  const auto& verts = path.vertices();
  const std::size_t n = verts.size();
  std::vector<Vec3> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 d = verts[i] - apex;
    const double dn = d.norm();
    if (dn <= 1e-12) throw SingularityError("solid angle apex lies on the path");
    u[i] = d / dn;
  }
  // Fan apex: the loop's spherical area vector. Anchoring the fan there keeps
  // every triangle well conditioned (a fan from a path vertex collapses for
  // loops hugging a great circle) and lands simple loops directly on the
  // counterclockwise-side branch.
  Vec3 pole = Vec3::Zero();
  for (std::size_t i = 0; i < n; ++i) pole += u[i].cross(u[(i + 1) % n]);
  if (pole.norm() < 1e-12) pole = u[0].cross(u[1]);
  if (pole.norm() < 1e-12) pole = u[0];
  pole.normalize();

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& b = u[i];
    const Vec3& c = u[(i + 1) % n];
    const double num = pole.dot(b.cross(c));
    const double den = 1.0 + pole.dot(b) + b.dot(c) + c.dot(pole);
    total += 2.0 * std::atan2(num, den);
  }
  // Simple loops whose mean normal points away from the enclosed cap come out
  // shifted by a full sphere; slivers keep their tiny signed value.
  while (total < -1e-9) total += kFourPi;
  return SolidAngleResult{total, total - kFourPi};
}

WindingResult winding_number(const ClosedPath& path, const Vec3& axis_direction,
                             double cutoff_angle) {
  const Vec3 axis = unit_or_throw(axis_direction, "winding axis");
  const auto& verts = path.vertices();
  const std::size_t n = verts.size();
  const Vec3 seed = std::abs(axis.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX();
  const Vec3 e1 = axis.cross(seed).normalized();
  const Vec3 e2 = axis.cross(e1);

  auto azimuth_checked = [&](const Vec3& v) {
    const double x = v.dot(e1), y = v.dot(e2);
    const double rho = std::hypot(x, y);
    // angular distance from the axis line, as seen from the origin
    if (std::atan2(rho, std::abs(v.dot(axis))) < cutoff_angle) {
      throw SingularityError("path vertex within the axis cutoff");
    }
    return std::atan2(y, x);
  };

  double accumulated = 0.0;
  double prev = azimuth_checked(verts[0]);
  for (std::size_t i = 1; i <= n; ++i) {
    const Vec3& a = verts[(i - 1) % n];
    const Vec3& b = verts[i % n];
    const double cur = azimuth_checked(b);
    double d = wrap_angle(cur - prev);
    // a near-half-turn jump means the segment runs through the axis plane
    // too close to the axis for the branch to be trustworthy
    if (std::abs(std::abs(d) - kPi) < 1e-9) {
      throw SingularityError("path segment crosses the axis");
    }
    // in-plane proximity check for the segment itself
    const Eigen::Vector2d pa(a.dot(e1), a.dot(e2));
    const Eigen::Vector2d pb(b.dot(e1), b.dot(e2));
    const Eigen::Vector2d dd = pb - pa;
    const double len2 = dd.squaredNorm();
    double t = len2 > 0.0 ? std::clamp(-pa.dot(dd) / len2, 0.0, 1.0) : 0.0;
    const Eigen::Vector2d closest = pa + t * dd;
    const Vec3 at = verts[(i - 1) % n] + t * (verts[i % n] - verts[(i - 1) % n]);
    if (std::atan2(closest.norm(), std::abs(at.dot(axis))) < cutoff_angle) {
      throw SingularityError("path segment within the axis cutoff");
    }
    accumulated += d;
    prev = cur;
  }
  const double turns = accumulated / kTwoPi;
  const int w = static_cast<int>(std::llround(turns));
  return WindingResult{w, accumulated - kTwoPi * w};
}

double line_integral(const VectorField& field, const ClosedPath& path,
                     double tolerance) {
  return polyline_integral(field, path.vertices(), true, tolerance);
}

double line_integral_open(const VectorField& field, std::span<const Vec3> vertices,
                          double tolerance) {
  return polyline_integral(field, vertices, false, tolerance);
}

double polyline_axis_clearance(std::span<const Vec3> vertices,
                               const Vec3& axis_direction) {
  if (vertices.size() < 2) {
    throw ValidationError("axis clearance needs at least 2 vertices");
  }
  const Vec3 axis = unit_or_throw(axis_direction, "axis direction");
  double best = -1.0;  // largest |cos| of the angle to the axis
  auto consider = [&](const Vec3& p) {
    const double pn = p.norm();
    if (pn == 0.0) {
      best = 1.0;  // the origin lies on every axis line
      return;
    }
    best = std::max(best, std::abs(p.dot(axis)) / pn);
  };
  consider(vertices.front());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const Vec3& a = vertices[i];
    const Vec3 d = vertices[i + 1] - a;
    consider(vertices[i + 1]);
    // the signed cosine along the chord has a single interior extremum
    // (its derivative is linear in t); |cos| peaks there or at the ends
    const double pa = a.dot(axis), da = d.dot(axis);
    const double aa = a.squaredNorm(), ad = a.dot(d), dd = d.squaredNorm();
    const double denom = da * ad - pa * dd;
    if (denom != 0.0) {
      const double t = (pa * ad - da * aa) / denom;
      if (t > 0.0 && t < 1.0) consider(a + t * d);
    }
  }
  return std::acos(std::clamp(best, -1.0, 1.0));
}

ClosedPath random_shell_loop(std::mt19937_64& rng, int n_vertices, double radius,
                             const Vec3& avoid_axis, double min_axis_angle,
                             double min_origin_distance) {
  if (n_vertices < 3) throw ValidationError("random loop needs at least 3 vertices");
  const Vec3 axis = unit_or_throw(avoid_axis, "avoid axis");
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  };
  auto axis_angle = [&](const Vec3& v) {
    return std::acos(std::clamp(v.normalized().dot(axis), -1.0, 1.0));
  };
  // exact closest approach of a chord to the half-line along `axis`: the
  // derivative of cos(angle) along the chord is linear in t, so one interior
  // candidate plus the endpoints cover all extrema
  auto min_chord_axis_angle = [&](const Vec3& a, const Vec3& b) {
    const Vec3 d = b - a;
    double best = std::max(a.normalized().dot(axis), b.normalized().dot(axis));
    const double pa = a.dot(axis), da = d.dot(axis);
    const double aa = a.squaredNorm(), ad = a.dot(d), dd = d.squaredNorm();
    const double denom = da * ad - pa * dd;
    if (denom != 0.0) {
      const double t = (pa * ad - da * aa) / denom;
      if (t > 0.0 && t < 1.0) {
        const Vec3 p = a + t * d;
        const double pn = p.norm();
        if (pn > 0.0) best = std::max(best, p.dot(axis) / pn);
      }
    }
    return std::acos(std::clamp(best, -1.0, 1.0));
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Vec3> verts;
    verts.reserve(n_vertices);
    for (int i = 0; i < n_vertices; ++i) {
      const double z = 1.0 - 2.0 * uniform();
      const double phi = kTwoPi * uniform();
      const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
      verts.push_back(radius * Vec3(s * std::cos(phi), s * std::sin(phi), z));
    }
    bool ok = true;
    for (int i = 0; ok && i < n_vertices; ++i) {
      const Vec3& a = verts[i];
      const Vec3& b = verts[(i + 1) % n_vertices];
      if (axis_angle(a) < min_axis_angle) ok = false;
      if ((b - a).norm() < 1e-6 * radius) ok = false;
      if (segment_origin_distance(a, b) < min_origin_distance * radius) ok = false;
      if (ok && min_chord_axis_angle(a, b) < min_axis_angle) ok = false;
    }
    if (ok) return ClosedPath(std::move(verts));
  }
  throw ValidationError("random loop constraints too tight; no loop found");
}

}  // namespace monopole
