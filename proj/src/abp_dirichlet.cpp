#include "abplab/abp_dirichlet.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace abplab {

AbpDirichletReport abp_dirichlet_ratio(const GridField& u, const std::function<double(Vec2)>& f, int samples,
                                       std::uint64_t seed, double delta) {
  const Polygon& polygon = u.polygon();
  for (int j = 0; j < u.ny(); ++j) {
    for (int i = 0; i < u.nx(); ++i) {
      if (!u.masked(i, j) && u.value(i, j) > 0.0) {
        std::ostringstream os;
        os << "ABP estimate needs u <= 0 on the boundary; u = " << u.value(i, j) << " at (" << u.node(i, j).x
           << ", " << u.node(i, j).y << ")";
        throw ParameterError(os.str());
      }
    }
  }
  AbpDirichletReport r;
  r.sup_u = std::max(0.0, u.max_value());
  r.diameter = diameter(polygon);
  r.f_minus_norm = std::sqrt(integrate_polygon(polygon, [&](Vec2 x) {
    const double m = std::min(f(x), 0.0);
    return m * m;
  }));
  r.ratio = r.f_minus_norm > 0.0 ? r.sup_u / (r.diameter * r.f_minus_norm) : 0.0;
  r.slope_radius = r.sup_u / r.diameter;
  if (r.sup_u <= 0.0 || samples <= 0) return r;

  std::vector<Vec2> boundary;
  for (std::size_t e = 0; e < polygon.size(); ++e) {
    const auto [a, b] = polygon.edge(e);
    const int pieces = std::max(1, static_cast<int>(std::ceil(2.0 * distance(a, b) / u.h())));
    for (int k = 0; k < pieces; ++k) boundary.push_back(a + (b - a) * (static_cast<double>(k) / pieces));
  }
  std::vector<Vec2> nodes;
  std::vector<double> vals;
  for (int k : u.unknowns()) {
    nodes.push_back(u.node(k % u.nx(), k / u.nx()));
    vals.push_back(u.values()[k]);
  }
  Rng rng(seed);
  const double radius = (1.0 - delta) * r.slope_radius;
  while (r.samples < samples) {
    const Vec2 p{rng.uniform(-radius, radius), rng.uniform(-radius, radius)};
    if (p.squared_norm() >= radius * radius) continue;
    ++r.samples;
    double best_in = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < nodes.size(); ++k) best_in = std::max(best_in, vals[k] - dot(p, nodes[k]));
    double best_bd = -std::numeric_limits<double>::infinity();
    for (Vec2 y : boundary) best_bd = std::max(best_bd, -dot(p, y));
    if (best_in > best_bd) ++r.interior;
  }
  r.coverage = static_cast<double>(r.interior) / r.samples;
  return r;
}

}  // namespace abplab
