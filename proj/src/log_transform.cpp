#include "abplab/log_transform.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "abplab/contact.hpp"
#include "abplab/quadrature.hpp"

namespace abplab {

LogField log_eigen_transform(const EigenResult& eigen, const Polygon& domain, double clip) {
  if (!eigen.fem) throw ParameterError("log transform needs a finite-element eigenfunction");
  if (!(clip > 0.0 && clip <= 1.0)) throw ParameterError("clip must lie in (0, 1]");
  const ScalarField& phi = *eigen.fem;
  const TriMesh& m = phi.mesh();
  const std::size_t n = m.vertex_count();
  std::vector<double> dist(n);
  double inradius = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dist[i] = distance_to_boundary(domain, m.vertex(static_cast<int>(i)));
    inradius = std::max(inradius, dist[i]);
  }
  const double threshold = (1.0 - clip) * inradius;
  std::vector<char> keep(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i] < threshold || m.is_boundary_vertex(static_cast<int>(i))) continue;
    if (!(phi.value(static_cast<int>(i)) > 0.0)) {
      std::ostringstream os;
      os << "eigenfunction is not positive at (" << m.vertex(static_cast<int>(i)).x << ", "
         << m.vertex(static_cast<int>(i)).y << ") inside the clip region; refine the mesh";
      throw DiscretizationError(os.str());
    }
    keep[i] = 1;
  }
  std::vector<int> parent;
  auto sub = std::make_shared<const TriMesh>(submesh(m, keep, &parent));
  std::vector<double> u(parent.size());
  for (std::size_t k = 0; k < parent.size(); ++k) u[k] = -std::log(phi.value(parent[k]));
  return LogField{ScalarField(std::move(sub), std::move(u)), std::move(parent), clip, inradius, threshold};
}

LogResidual log_residual(const LogField& field, double lambda) {
  const ScalarField& u = field.u;
  const auto& areas = u.mesh().vertex_areas();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < areas.size(); ++i) {
    const double g2 = u.vertex_gradients()[i].squared_norm();
    num += std::abs(u.vertex_hessians()[i].trace() - lambda - g2) * areas[i];
    den += (lambda + g2) * areas[i];
  }
  return {den > 0.0 ? num / den : 0.0, num};
}

RadialIntegral eigen_left_integral(double lambda, double area, double radius) {
  if (!(lambda > 0.0) || !(area > 0.0)) throw ParameterError("eigen chain needs lambda > 0 and area > 0");
  const auto g = [&](double r) {
    const double r2 = r * r;
    return 1.0 / (lambda * lambda + r2 / area + r2 * r2);
  };
  std::vector<double> x, wq;
  quadrature::gauss_legendre(16, x, wq);
  const auto integrate = [&](double R) {
    // Geometric panels [R 2^-(k+1), R 2^-k] plus [0, R 2^-60].
    double s = 0.0;
    double hi = R;
    for (int k = 0; k < 60; ++k) {
      const double lo = 0.5 * hi;
      for (std::size_t q = 0; q < x.size(); ++q) {
        const double r = lo + (hi - lo) * 0.5 * (x[q] + 1.0);
        s += 0.5 * (hi - lo) * wq[q] * g(r) * r;
      }
      hi = lo;
    }
    s += g(0.0) * 0.5 * hi * hi;
    return 2.0 * std::numbers::pi * s;
  };
  RadialIntegral out;
  if (radius > 0.0) {
    out.radius = radius;
    out.tail = std::numbers::pi / (radius * radius);
    out.value = integrate(radius);
    if (out.tail > 0.01 * out.value) {
      std::ostringstream os;
      os << "truncation radius " << radius << " leaves a tail bound " << out.tail << " above 1% of the integral "
         << out.value << "; increase R";
      throw ParameterError(os.str());
    }
    return out;
  }
  double R = 1.0;
  for (;;) {
    const double v = integrate(R);
    const double tail = std::numbers::pi / (R * R);
    if (tail <= 1e-6 * v) {
      out = {v, R, tail};
      break;
    }
    R *= 2.0;
  }
  return out;
}

Certificate eigen_chain_check(const LogField& field, double lambda, double area, double b_norm, double slack) {
  Certificate cert;
  cert.title = "eigen_chain";
  const RadialIntegral left = eigen_left_integral(lambda, area);
  const auto g = [&](Vec2 p) {
    const double r2 = p.squared_norm();
    return 1.0 / (lambda * lambda + r2 / area + r2 * r2);
  };
  const ContactSet gamma = lower_contact_set(field.u);
  const double right = contact_integral(gamma, g);
  const double c2 = ball_constants(2).perimeter / 4.0;
  const double bound = c2 * area * std::log1p(2.0 / (area * area * lambda * lambda));
  cert.add(make_link("upint", left.value, right, slack * right, "integral of g over the plane <= contact integral"));
  cert.add(make_link("loint", bound, left.value, slack * bound, "c(2) |Omega| log(1 + 2 |Omega|^-2 lambda^-2) <= LEFT"));
  cert.metadata["lambda"] = lambda;
  cert.metadata["area"] = area;
  cert.metadata["lambda_times_area"] = lambda * area;
  cert.metadata["b_norm"] = b_norm;
  cert.metadata["left"] = left.value;
  cert.metadata["right"] = right;
  cert.metadata["truncation_radius"] = left.radius;
  cert.metadata["tail_bound"] = left.tail;
  cert.metadata["c2"] = c2;
  cert.metadata["analytic_bound"] = bound;
  cert.metadata["clip"] = field.clip;
  cert.metadata["contact_vertices"] = gamma.size();
  cert.metadata["clipped_vertices"] = field.u.mesh().vertex_count();
  return cert;
}

}  // namespace abplab
