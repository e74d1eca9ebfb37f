#include "abplab/neumann.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <cmath>
#include <sstream>

#include "abplab/quadrature.hpp"

namespace abplab {

NeumannResult solve_neumann(std::shared_ptr<const TriMesh> mesh, const HomogeneousWeight& w,
                            const FluxFunction& g, const SolverOptions& options) {
  const TriMesh& m = *mesh;
  const int n = static_cast<int>(m.vertex_count());
  for (int i = 0; i < n; ++i) {
    const double wi = w(m.vertex(i));
    if (!(wi > 0.0)) {
      std::ostringstream os;
      os << "weight " << w.name() << " is not positive at mesh vertex (" << m.vertex(i).x << ", "
         << m.vertex(i).y << "); shrink the domain into the open cone";
      throw WeightError(os.str());
    }
  }

  const auto& rule = quadrature::triangle6();
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(9 * m.triangle_count());
  Eigen::VectorXd bulk = Eigen::VectorXd::Zero(n);
  for (std::size_t t = 0; t < m.triangle_count(); ++t) {
    const auto& tri = m.triangles()[t];
    const Vec2 p[3] = {m.vertex(tri[0]), m.vertex(tri[1]), m.vertex(tri[2])};
    const double area = m.triangle_area(static_cast<int>(t));
    double wint = 0.0;
    double wphi[3] = {0.0, 0.0, 0.0};
    for (int q = 0; q < 6; ++q) {
      const auto& l = rule.barycentric[q];
      const double wq = rule.weights[q] * w(p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) * area;
      wint += wq;
      for (int k = 0; k < 3; ++k) wphi[k] += wq * l[k];
    }
    Vec2 grad[3];
    for (int k = 0; k < 3; ++k) {
      const Vec2 e = p[(k + 2) % 3] - p[(k + 1) % 3];
      grad[k] = Vec2{-e.y, e.x} / (2.0 * area);
    }
    for (int i = 0; i < 3; ++i) {
      bulk(tri[i]) += wphi[i];
      for (int j = 0; j < 3; ++j) entries.emplace_back(tri[i], tri[j], wint * dot(grad[i], grad[j]));
    }
  }
  Eigen::SparseMatrix<double> K(n, n);
  K.setFromTriplets(entries.begin(), entries.end());

  const auto& gl = quadrature::gauss_legendre5();
  Eigen::VectorXd flux = Eigen::VectorXd::Zero(n);
  for (const BoundaryEdge& e : m.boundary_edges()) {
    if (e.on_cone_boundary) continue;
    const Vec2 a = m.vertex(e.a), b = m.vertex(e.b);
    const double len = distance(a, b);
    for (int q = 0; q < 5; ++q) {
      const double s = gl.nodes[q];
      const Vec2 x = a + (b - a) * s;
      const double val = gl.weights[q] * len * w(x) * (g ? g(x, e.normal) : 1.0);
      flux(e.a) += val * (1.0 - s);
      flux(e.b) += val * s;
    }
  }

  NeumannResult result{ScalarField(mesh, std::vector<double>(n, 0.0))};
  result.boundary_flux = flux.sum();
  result.measure = bulk.sum();
  result.b = result.boundary_flux / result.measure;
  Eigen::VectorXd rhs = flux - result.b * bulk;
  result.compatibility_defect = std::abs(rhs.sum()) / (flux.cwiseAbs().sum() + result.b * bulk.cwiseAbs().sum());

  // Lagrange multiplier for the constant mode: remove the (roundoff) component of rhs along 1.
  Eigen::VectorXd area(n);
  for (int i = 0; i < n; ++i) area(i) = m.vertex_areas()[i];
  rhs -= (rhs.sum() / area.sum()) * area;

  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                           Eigen::DiagonalPreconditioner<double>>
      cg;
  cg.setTolerance(options.tol);
  cg.setMaxIterations(options.max_iter);
  cg.compute(K);
  Eigen::VectorXd u = cg.solve(rhs);
  result.iterations = static_cast<int>(cg.iterations());
  const double rnorm = rhs.norm();
  result.residual = rnorm > 0.0 ? (K * u - rhs).norm() / rnorm : (K * u).norm();
  if (cg.info() != Eigen::Success && result.residual > 10.0 * options.tol) {
    std::ostringstream os;
    os << "Neumann solve did not converge: relative residual " << result.residual << " after "
       << result.iterations << " iterations";
    throw SolverError(os.str());
  }
  u.array() -= u.dot(area) / area.sum();
  result.u = ScalarField(mesh, std::vector<double>(u.data(), u.data() + n));
  return result;
}

}  // namespace abplab
