#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "abplab/errors.hpp"
#include "abplab/vec2.hpp"

namespace abplab {

/**
 * Simple planar polygon with counterclockwise vertex order.
 *
 * Construction validates the invariants (at least three vertices, positive signed area,
 * no self-intersection) and throws GeometryError otherwise. Instances are immutable.
 */
class Polygon {
 public:
  explicit Polygon(std::vector<Vec2> vertices);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Vec2 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Edge i runs from vertex(i) to vertex(i + 1).
  std::pair<Vec2, Vec2> edge(std::size_t i) const { return {vertex(i), vertex(i + 1)}; }
  /// Outward unit normal of edge i.
  Vec2 outward_normal(std::size_t i) const;

 private:
  std::vector<Vec2> vertices_;
};

double signed_area(const std::vector<Vec2>& vertices);
double area(const Polygon& polygon);
/// Euclidean boundary length.
double perimeter(const Polygon& polygon);
double diameter(const Polygon& polygon);
Vec2 centroid(const Polygon& polygon);
/// Smallest interior angle, radians.
double min_interior_angle(const Polygon& polygon);
double min_edge_length(const Polygon& polygon);
/// Closed containment: points on the boundary (within tol) count as inside.
bool contains(const Polygon& polygon, Vec2 p, double tol = 1e-12);
/// Strict containment: inside and farther than tol from the boundary.
bool contains_strictly(const Polygon& polygon, Vec2 p, double tol = 1e-12);
double distance_to_boundary(const Polygon& polygon, Vec2 p);
double distance_to_segment(Vec2 p, Vec2 a, Vec2 b);

Polygon regular_ngon(int n, double radius);
Polygon rectangle(double width, double height, Vec2 lower_left = {0.0, 0.0});
/// Ellipse approximation with n vertices on the curve.
Polygon ellipse_ngon(int n, double semi_x, double semi_y);
/// Circular sector {r < radius, theta_lo < theta < theta_hi} with `arc_points` vertices on the
/// arc (endpoints included) plus the apex at the origin.
Polygon sector_polygon(double theta_lo, double theta_hi, double radius, int arc_points);
/// Annular sector between radii r_in < r_out with `arc_points` vertices on each arc.
Polygon annulus_sector(double theta_lo, double theta_hi, double r_in, double r_out, int arc_points);
Polygon translated(const Polygon& polygon, Vec2 offset);
Polygon scaled(const Polygon& polygon, double factor);
/// Convex hull (counterclockwise, collinear points dropped).
Polygon convex_hull(std::vector<Vec2> points);

/**
 * Open convex cone with vertex at the origin. In the plane this is an angular sector
 * {r (cos t, sin t) : r > 0, theta_lo < t < theta_hi} with opening at most pi, or the whole plane.
 */
class ConvexCone {
 public:
  static ConvexCone full_plane();
  static ConvexCone sector(double theta_lo, double theta_hi);
  static ConvexCone quadrant() { return sector(0.0, 1.5707963267948966); }
  /// Upper half-plane {y > 0}.
  static ConvexCone half_plane() { return sector(0.0, 3.141592653589793); }

  bool is_full() const { return full_; }
  double theta_lo() const { return theta_lo_; }
  double theta_hi() const { return theta_hi_; }
  double opening() const { return full_ ? 6.283185307179586 : theta_hi_ - theta_lo_; }
  /// Unit directions of the two boundary rays.
  Vec2 lo_ray() const { return unit_direction(theta_lo_); }
  Vec2 hi_ray() const { return unit_direction(theta_hi_); }
  Vec2 bisector() const;

  bool contains(Vec2 p) const;
  bool contains_closed(Vec2 p, double tol = 1e-12) const;
  /// Distance from p to the cone boundary (the two rays); +inf for the full plane.
  double distance_to_boundary(Vec2 p) const;
  bool on_boundary(Vec2 p, double tol = 1e-12) const;
  /// True when the segment [a, b] lies on one boundary ray (within tol).
  bool segment_on_boundary(Vec2 a, Vec2 b, double tol = 1e-12) const;

 private:
  ConvexCone(bool full, double lo, double hi) : full_(full), theta_lo_(lo), theta_hi_(hi) {}
  bool full_;
  double theta_lo_;
  double theta_hi_;
};

/// Intersection of a polygon with the closed cone. Throws GeometryError when the result is
/// empty or degenerate. The caller is responsible for polygons whose intersection with the
/// cone is disconnected.
Polygon clip_to_cone(const Polygon& polygon, const ConvexCone& cone);
/// Intersection with the half-plane {p : dot(p, normal) <= offset}; nullopt when empty.
std::optional<std::vector<Vec2>> clip_half_plane(const std::vector<Vec2>& vertices, Vec2 normal,
                                                 double offset);
/// Translate a polygon by `distance` along the cone bisector so that its closure lies inside
/// the open cone.
Polygon shift_into_cone(const Polygon& polygon, const ConvexCone& cone, double distance);

/// Volume and perimeter of the unit ball in R^n.
struct BallConstants {
  double volume;
  double perimeter;
};
BallConstants ball_constants(int n);

/// Ear-clipping triangulation of a simple polygon (no quality guarantees).
std::vector<std::array<Vec2, 3>> ear_clip(const Polygon& polygon);

/// Integral of f over the polygon: ear clipping, then the 6-point triangle rule on `levels`
/// rounds of midpoint subdivision.
double integrate_polygon(const Polygon& polygon, const std::function<double(Vec2)>& f, int levels = 3);

}  // namespace abplab
