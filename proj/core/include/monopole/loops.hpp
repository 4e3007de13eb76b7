#pragma once

#include <filesystem>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "monopole/geometry.hpp"
#include "monopole/state.hpp"

namespace monopole {

/// Piecewise-linear closed path. The final vertex connects back to the first.
/// Construction enforces: at least 3 vertices, consecutive vertices distinct,
/// no vertex at the origin, no segment passing through the origin.
class ClosedPath {
 public:
  explicit ClosedPath(std::vector<Vec3> vertices);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  /// Circle of `radius` at polar angle `theta` about `axis`, traversed
  /// counterclockwise as seen from +axis, discretized with n_vertices.
  static ClosedPath cap(double theta, int n_vertices, double radius = 1.0,
                        const Vec3& axis = Vec3::UnitZ());

  /// Same circle wound `turns` times (turns >= 1).
  static ClosedPath cap_wound(double theta, int n_vertices_per_turn, int turns,
                              double radius = 1.0,
                              const Vec3& axis = Vec3::UnitZ());

  /// Load vertices from CSV: one row per vertex, columns x,y,z. Lines that
  /// are blank, start with '#', or spell a "x,y,z" header are skipped.
  static ClosedPath from_csv(const std::filesystem::path& file);

  /// Write vertices as CSV rows x,y,z (with header).
  void to_csv(const std::filesystem::path& file) const;

 private:
  std::vector<Vec3> vertices_;
};

/// Solid angle enclosed by a loop as seen from `apex`.
/// `omega` is the cap on the side from which the loop runs counterclockwise,
/// in (0, 4pi) for simple loops; `complement` = omega - 4pi is the same cap
/// seen from the other side. Self-intersecting loops accumulate algebraic
/// per-triangle contributions and may fall outside (0, 4pi).
struct SolidAngleResult {
  double omega = 0.0;
  double complement = 0.0;
};

/// Fan decomposition over the unit sphere with per-triangle arctangent areas.
/// Throws SingularityError if a vertex coincides with the apex.
SolidAngleResult solid_angle(const ClosedPath& path, const Vec3& apex = Vec3::Zero());

/// Signed turns of a path around the oriented axis line through the origin.
struct WindingResult {
  int winding = 0;
  double residual = 0.0;  // accumulated azimuth minus 2*pi*winding
};

/// Accumulates per-segment azimuth increments about `axis_direction`.
/// Throws SingularityError when a vertex or segment lies within
/// `cutoff_angle` of the axis line (both half-lines).
WindingResult winding_number(const ClosedPath& path, const Vec3& axis_direction,
                             double cutoff_angle = kStringCutoffAngle);

/// Smallest angle (seen from the origin) between any point of the polyline
/// and the axis LINE through the origin, both half-lines. Exact: per chord,
/// the cosine's only interior extremum is solved in closed form. A vertex at
/// the origin counts as on-axis (zero clearance).
double polyline_axis_clearance(std::span<const Vec3> vertices,
                               const Vec3& axis_direction);

/// Sampled vector field value, kept with the point it was taken at.
struct FieldSample {
  Vec3 value = Vec3::Zero();
  Vec3 location = Vec3::Zero();
};

using VectorField = std::function<Vec3(const Vec3&)>;

/// Work integral of `field` along the closed path: adaptive 7-point Gauss
/// per segment with recursive subdivision (depth cap 20) until the requested
/// absolute tolerance is met. Throws ToleranceError if the cap is hit first,
/// SingularityError (with the sample location) on a non-finite field sample.
double line_integral(const VectorField& field, const ClosedPath& path,
                     double tolerance = 1e-10);

/// Same quadrature over an open polyline.
double line_integral_open(const VectorField& field, std::span<const Vec3> vertices,
                          double tolerance = 1e-10);

/// Random loop on a sphere shell for property sweeps: vertices uniform on the
/// shell, whole-loop resampled until every vertex and segment stays at least
/// `min_axis_angle` (radians, seen from the origin) away from the half-line
/// along avoid_axis and every segment at least `min_origin_distance * radius`
/// from the origin. Deterministic for a given engine state.
ClosedPath random_shell_loop(std::mt19937_64& rng, int n_vertices = 8,
                             double radius = 1.0,
                             const Vec3& avoid_axis = -Vec3::UnitZ(),
                             double min_axis_angle = 0.25,
                             double min_origin_distance = 0.2);

}  // namespace monopole
