#include "abplab/perimeter.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "abplab/quadrature.hpp"

namespace abplab {

namespace {

double gl5(Vec2 a, Vec2 b, const HomogeneousWeight& w) {
  const auto& rule = quadrature::gauss_legendre5();
  double s = 0.0;
  for (int q = 0; q < 5; ++q) s += rule.weights[q] * w(a + (b - a) * rule.nodes[q]);
  return s * distance(a, b);
}

// Sub-edges [0, 2^-7], [2^-7, 2^-6], ..., [1/2, 1] measured from `from`.
double graded(Vec2 from, Vec2 to, const HomogeneousWeight& w) {
  double s = gl5(from, from + (to - from) * 0x1.0p-7, w);
  for (int k = 7; k >= 1; --k) {
    const double lo = std::ldexp(1.0, -k), hi = std::ldexp(1.0, -k + 1);
    s += gl5(from + (to - from) * lo, from + (to - from) * hi, w);
  }
  return s;
}

}  // namespace

double weighted_edge_integral(Vec2 a, Vec2 b, const HomogeneousWeight& w, bool grade_a, bool grade_b) {
  if (w.is_constant()) return w(a) * distance(a, b);
  if (grade_a && grade_b) {
    const Vec2 m = (a + b) * 0.5;
    return graded(a, m, w) + graded(b, m, w);
  }
  if (grade_a) return graded(a, b, w);
  if (grade_b) return graded(b, a, w);
  return gl5(a, b, w);
}

double perimeter_weighted(const Polygon& polygon, const ConvexCone& cone, const Gauge& gauge,
                          const HomogeneousWeight& w, double grading_length) {
  const double scale = std::max(1.0, diameter(polygon));
  const double tol = 1e-9 * scale;
  if (!cone.is_full()) {
    for (Vec2 v : polygon.vertices()) {
      if (!cone.contains_closed(v, tol)) {
        std::ostringstream os;
        os << "polygon vertex (" << v.x << ", " << v.y
           << ") lies outside the cone; clip the polygon to the cone first";
        throw GeometryError(os.str());
      }
    }
  }
  const bool grade = !w.is_constant() && w.vanishes_on_cone_boundary();
  double total = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto [a, b] = polygon.edge(i);
    if (!cone.is_full() && cone.segment_on_boundary(a, b, tol)) continue;
    const double len = distance(a, b);
    const double reach = grading_length > 0.0 ? grading_length : len;
    const bool ga = grade && cone.distance_to_boundary(a) <= reach;
    const bool gb = grade && cone.distance_to_boundary(b) <= reach;
    const double h = gauge.is_euclidean() ? 1.0 : gauge(polygon.outward_normal(i));
    if (h == 0.0) continue;
    total += h * weighted_edge_integral(a, b, w, ga, gb);
  }
  return total;
}

double perimeter_weighted(const Polygon& polygon, const HomogeneousWeight& w) {
  return perimeter_weighted(polygon, w.cone(), Gauge::euclidean(), w);
}

}  // namespace abplab
