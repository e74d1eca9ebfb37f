#include "abplab/geometry.hpp"

#include "abplab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace abplab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Geometry: return "geometry";
    case ErrorKind::Gauge: return "gauge";
    case ErrorKind::Mesh: return "mesh";
    case ErrorKind::Weight: return "weight";
    case ErrorKind::Solver: return "solver";
    case ErrorKind::Stability: return "stability";
    case ErrorKind::Discretization: return "discretization";
    case ErrorKind::Hypothesis: return "hypothesis";
    case ErrorKind::Config: return "config";
  }
  return "unknown";
}

namespace {

double bbox_scale(const std::vector<Vec2>& pts) {
  double s = 0.0;
  for (const Vec2& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return std::max(s, 1e-300);
}

bool on_segment(Vec2 p, Vec2 a, Vec2 b, double tol) {
  return distance_to_segment(p, a, b) <= tol;
}

// Closed segment intersection with a tolerance on collinearity.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol) {
  const double o1 = orient(a, b, c), o2 = orient(a, b, d);
  const double o3 = orient(c, d, a), o4 = orient(c, d, b);
  const double eps = tol * tol;
  if (((o1 > eps && o2 < -eps) || (o1 < -eps && o2 > eps)) &&
      ((o3 > eps && o4 < -eps) || (o3 < -eps && o4 > eps))) {
    return true;
  }
  return on_segment(c, a, b, tol) || on_segment(d, a, b, tol) || on_segment(a, c, d, tol) ||
         on_segment(b, c, d, tol);
}

}  // namespace

Polygon::Polygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw GeometryError("polygon needs at least 3 vertices");
  for (const Vec2& v : vertices_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) throw GeometryError("non-finite polygon vertex");
  }
  const double scale = bbox_scale(vertices_);
  const double tol = 1e-13 * scale;
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(vertices_[i], vertices_[(i + 1) % n]) <= tol) {
      throw GeometryError("polygon has repeated consecutive vertices at index " + std::to_string(i));
    }
  }
  const double a = signed_area(vertices_);
  if (!(a > 1e-14 * scale * scale)) {
    throw GeometryError("polygon must be counterclockwise with positive area (signed area " +
                        std::to_string(a) + ")");
  }
  // Non-adjacent edges must not touch.
  std::vector<std::array<double, 4>> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = vertices_[i], q = vertices_[(i + 1) % n];
    boxes[i] = {std::min(p.x, q.x) - tol, std::max(p.x, q.x) + tol, std::min(p.y, q.y) - tol,
                std::max(p.y, q.y) + tol};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (boxes[i][1] < boxes[j][0] || boxes[j][1] < boxes[i][0] || boxes[i][3] < boxes[j][2] ||
          boxes[j][3] < boxes[i][2]) {
        continue;
      }
      if (segments_intersect(vertices_[i], vertices_[(i + 1) % n], vertices_[j],
                             vertices_[(j + 1) % n], tol)) {
        throw GeometryError("polygon self-intersects between edges " + std::to_string(i) + " and " +
                            std::to_string(j));
      }
    }
  }
}

Vec2 Polygon::outward_normal(std::size_t i) const {
  const auto [a, b] = edge(i);
  const Vec2 d = b - a;
  return Vec2{d.y, -d.x} / d.norm();
}

double signed_area(const std::vector<Vec2>& v) {
  double s = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(v[i], v[(i + 1) % n]);
  return 0.5 * s;
}

double area(const Polygon& polygon) { return signed_area(polygon.vertices()); }

double perimeter(const Polygon& polygon) {
  double s = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto [a, b] = polygon.edge(i);
    s += distance(a, b);
  }
  return s;
}

double diameter(const Polygon& polygon) {
  double d = 0.0;
  const auto& v = polygon.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) d = std::max(d, distance(v[i], v[j]));
  return d;
}

Vec2 centroid(const Polygon& polygon) {
  const auto& v = polygon.vertices();
  Vec2 c;
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2 p = v[i], q = v[(i + 1) % v.size()];
    const double w = cross(p, q);
    a += w;
    c += (p + q) * w;
  }
  return c / (3.0 * a);
}

double min_interior_angle(const Polygon& polygon) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 prev = polygon.vertex(i + n - 1), cur = polygon.vertex(i), next = polygon.vertex(i + 1);
    const Vec2 u = prev - cur, w = next - cur;
    double ang = std::atan2(cross(w, u), dot(w, u));
    if (ang < 0) ang += 2.0 * std::numbers::pi;
    best = std::min(best, ang);
  }
  return best;
}

double min_edge_length(const Polygon& polygon) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto [a, b] = polygon.edge(i);
    best = std::min(best, distance(a, b));
  }
  return best;
}

double distance_to_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  const double l2 = d.squared_norm();
  double t = l2 > 0 ? dot(p - a, d) / l2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + d * t);
}

double distance_to_boundary(const Polygon& polygon, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto [a, b] = polygon.edge(i);
    best = std::min(best, distance_to_segment(p, a, b));
  }
  return best;
}

bool contains(const Polygon& polygon, Vec2 p, double tol) {
  if (distance_to_boundary(polygon, p) <= tol) return true;
  bool inside = false;
  const auto& v = polygon.vertices();
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      const double xint = v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

bool contains_strictly(const Polygon& polygon, Vec2 p, double tol) {
  return distance_to_boundary(polygon, p) > tol && contains(polygon, p, 0.0);
}

Polygon regular_ngon(int n, double radius) {
  if (n < 3) throw ParameterError("regular_ngon needs n >= 3");
  if (!(radius > 0.0)) throw ParameterError("regular_ngon needs radius > 0");
  std::vector<Vec2> v(n);
  for (int k = 0; k < n; ++k) v[k] = unit_direction(2.0 * std::numbers::pi * k / n) * radius;
  return Polygon(std::move(v));
}

Polygon rectangle(double width, double height, Vec2 ll) {
  if (!(width > 0.0) || !(height > 0.0)) throw ParameterError("rectangle needs positive sides");
  return Polygon({ll, ll + Vec2{width, 0}, ll + Vec2{width, height}, ll + Vec2{0, height}});
}

Polygon ellipse_ngon(int n, double a, double b) {
  if (n < 3 || !(a > 0) || !(b > 0)) throw ParameterError("ellipse_ngon needs n >= 3 and positive axes");
  std::vector<Vec2> v(n);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    v[k] = {a * std::cos(t), b * std::sin(t)};
  }
  return Polygon(std::move(v));
}

Polygon sector_polygon(double lo, double hi, double radius, int arc_points) {
  if (arc_points < 2 || !(radius > 0) || !(hi > lo) || hi - lo > std::numbers::pi + 1e-12)
    throw ParameterError("sector_polygon needs arc_points >= 2, radius > 0, 0 < opening <= pi");
  std::vector<Vec2> v;
  v.reserve(arc_points + 1);
  v.push_back({0.0, 0.0});
  for (int k = 0; k < arc_points; ++k) {
    const double t = lo + (hi - lo) * k / (arc_points - 1);
    v.push_back(unit_direction(t) * radius);
  }
  if (hi - lo >= std::numbers::pi - 1e-12) {
    // Half-disc: the apex is collinear with the arc endpoints.
    v.erase(v.begin());
    std::vector<Vec2> w(v.begin(), v.end());
    w.push_back({0.0, 0.0});
    return Polygon(std::move(w));
  }
  return Polygon(std::move(v));
}

Polygon annulus_sector(double lo, double hi, double r_in, double r_out, int arc_points) {
  if (arc_points < 2 || !(r_in > 0) || !(r_out > r_in) || !(hi > lo))
    throw ParameterError("annulus_sector needs 0 < r_in < r_out and arc_points >= 2");
  std::vector<Vec2> v;
  for (int k = 0; k < arc_points; ++k)
    v.push_back(unit_direction(lo + (hi - lo) * k / (arc_points - 1)) * r_out);
  for (int k = arc_points - 1; k >= 0; --k)
    v.push_back(unit_direction(lo + (hi - lo) * k / (arc_points - 1)) * r_in);
  return Polygon(std::move(v));
}

Polygon translated(const Polygon& polygon, Vec2 offset) {
  std::vector<Vec2> v = polygon.vertices();
  for (Vec2& p : v) p += offset;
  return Polygon(std::move(v));
}

Polygon scaled(const Polygon& polygon, double factor) {
  if (!(factor > 0)) throw ParameterError("scale factor must be positive");
  std::vector<Vec2> v = polygon.vertices();
  for (Vec2& p : v) p *= factor;
  return Polygon(std::move(v));
}

Polygon convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw GeometryError("convex hull needs 3 distinct points");
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && orient(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return Polygon(std::move(hull));
}

// ---------------------------------------------------------------------------------------------

ConvexCone ConvexCone::full_plane() { return ConvexCone(true, 0.0, 0.0); }

ConvexCone ConvexCone::sector(double lo, double hi) {
  const double opening = hi - lo;
  if (!(opening > 0.0) || opening > std::numbers::pi + 1e-12) {
    throw GeometryError("cone opening must lie in (0, pi]");
  }
  return ConvexCone(false, lo, hi);
}

Vec2 ConvexCone::bisector() const {
  if (full_) return {0.0, 0.0};
  return unit_direction(0.5 * (theta_lo_ + theta_hi_));
}

bool ConvexCone::contains(Vec2 p) const {
  if (full_) return true;
  return cross(lo_ray(), p) > 0.0 && cross(p, hi_ray()) > 0.0;
}

bool ConvexCone::contains_closed(Vec2 p, double tol) const {
  if (full_) return true;
  if (on_boundary(p, tol)) return true;
  return contains(p);
}

double ConvexCone::distance_to_boundary(Vec2 p) const {
  if (full_) return std::numeric_limits<double>::infinity();
  auto ray_dist = [&](Vec2 d) {
    const double t = std::max(0.0, dot(p, d));
    return distance(p, d * t);
  };
  return std::min(ray_dist(lo_ray()), ray_dist(hi_ray()));
}

bool ConvexCone::on_boundary(Vec2 p, double tol) const {
  if (full_) return false;
  return distance_to_boundary(p) <= tol * std::max(1.0, p.norm());
}

bool ConvexCone::segment_on_boundary(Vec2 a, Vec2 b, double tol) const {
  if (full_) return false;
  for (Vec2 d : {lo_ray(), hi_ray()}) {
    auto on_ray = [&](Vec2 p) {
      const double t = std::max(0.0, dot(p, d));
      return distance(p, d * t) <= tol * std::max(1.0, p.norm());
    };
    if (on_ray(a) && on_ray(b)) return true;
  }
  return false;
}

std::optional<std::vector<Vec2>> clip_half_plane(const std::vector<Vec2>& v, Vec2 normal,
                                                 double offset) {
  std::vector<Vec2> out;
  const std::size_t n = v.size();
  out.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = v[i], q = v[(i + 1) % n];
    const double sp = dot(p, normal) - offset, sq = dot(q, normal) - offset;
    if (sp <= 0) out.push_back(p);
    if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) {
      const double t = sp / (sp - sq);
      out.push_back(p + (q - p) * t);
    }
  }
  // Drop consecutive near-duplicates created by vertices on the clipping line.
  std::vector<Vec2> clean;
  for (const Vec2& p : out) {
    if (clean.empty() || distance(clean.back(), p) > 1e-14 * std::max(1.0, p.norm())) clean.push_back(p);
  }
  while (clean.size() > 1 && distance(clean.front(), clean.back()) <= 1e-14 * std::max(1.0, clean.front().norm()))
    clean.pop_back();
  if (clean.size() < 3) return std::nullopt;
  return clean;
}

Polygon clip_to_cone(const Polygon& polygon, const ConvexCone& cone) {
  if (cone.is_full()) return polygon;
  std::vector<Vec2> v = polygon.vertices();
  // Inside of the lo ray: cross(lo, p) >= 0  <=>  dot(p, (lo.y, -lo.x)) <= 0.
  const Vec2 lo = cone.lo_ray(), hi = cone.hi_ray();
  auto a = clip_half_plane(v, Vec2{lo.y, -lo.x}, 0.0);
  if (!a) throw GeometryError("polygon does not meet the cone");
  auto b = clip_half_plane(*a, Vec2{-hi.y, hi.x}, 0.0);
  if (!b) throw GeometryError("polygon does not meet the cone");
  // Remove collinear interior points left by clipping.
  std::vector<Vec2> w;
  const std::size_t n = b->size();
  const double scale = bbox_scale(*b);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 prev = (*b)[(i + n - 1) % n], cur = (*b)[i], next = (*b)[(i + 1) % n];
    if (std::abs(orient(prev, cur, next)) > 1e-14 * scale * scale) w.push_back(cur);
  }
  if (w.size() < 3) throw GeometryError("polygon meets the cone in a degenerate set");
  return Polygon(std::move(w));
}

Polygon shift_into_cone(const Polygon& polygon, const ConvexCone& cone, double distance_) {
  if (cone.is_full() || distance_ == 0.0) return polygon;
  if (!(distance_ > 0)) throw ParameterError("shift distance must be positive");
  return translated(polygon, cone.bisector() * distance_);
}

BallConstants ball_constants(int n) {
  if (n < 1) throw ParameterError("ball_constants needs n >= 1");
  const double vol = std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
  return {vol, n * vol};
}

std::vector<std::array<Vec2, 3>> ear_clip(const Polygon& polygon) {
  std::vector<Vec2> ring = polygon.vertices();
  std::vector<std::array<Vec2, 3>> out;
  const double scale = std::max(1.0, diameter(polygon));
  const double eps = 1e-14 * scale * scale;
  std::size_t i = 0, guard = 0;
  while (ring.size() > 3) {
    const std::size_t n = ring.size();
    const Vec2 a = ring[(i + n - 1) % n], b = ring[i % n], c = ring[(i + 1) % n];
    const double o = orient(a, b, c);
    bool ear = o > eps;
    for (std::size_t j = 0; j < n && ear; ++j) {
      const Vec2 p = ring[j];
      if (p == a || p == b || p == c) continue;
      if (orient(a, b, p) >= -eps && orient(b, c, p) >= -eps && orient(c, a, p) >= -eps) ear = false;
    }
    if (ear || (std::abs(o) <= eps && guard > n)) {
      if (ear) out.push_back({a, b, c});
      ring.erase(ring.begin() + static_cast<long>(i % n));
      guard = 0;
      if (i > 0) --i;
    } else {
      ++i;
      if (++guard > 2 * n) throw GeometryError("ear clipping failed; polygon is degenerate");
    }
    i %= ring.size();
  }
  if (orient(ring[0], ring[1], ring[2]) > eps) out.push_back({ring[0], ring[1], ring[2]});
  return out;
}

double integrate_polygon(const Polygon& polygon, const std::function<double(Vec2)>& f, int levels) {
  double s = 0.0;
  for (const auto& t : ear_clip(polygon)) s += quadrature::integrate_triangle(t[0], t[1], t[2], f, levels);
  return s;
}

}  // namespace abplab
