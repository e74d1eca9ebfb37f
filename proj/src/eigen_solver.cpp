#include "abplab/eigen_solver.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <cmath>
#include <sstream>

#include "abplab/fd_operator.hpp"

namespace abplab {

namespace {

void normalize_positive(Eigen::VectorXd& x) {
  if (x.sum() < 0.0) x = -x;
  const double m = x.maxCoeff();
  if (m > 0.0) x /= m;
}

void require_positive(const Eigen::VectorXd& x, const char* what) {
  const double lo = x.minCoeff();
  if (!(lo > 0.0)) {
    std::ostringstream os;
    os << what << ": principal eigenfunction has a non-positive interior value " << lo
       << "; the discretization is too coarse";
    throw DiscretizationError(os.str());
  }
}

}  // namespace

EigenResult principal_eigen(std::shared_ptr<const TriMesh> mesh, const EigenOptions& options) {
  const TriMesh& m = *mesh;
  const int nv = static_cast<int>(m.vertex_count());
  std::vector<int> dof(nv, -1);
  int n = 0;
  for (int i = 0; i < nv; ++i)
    if (!m.is_boundary_vertex(i)) dof[i] = n++;
  if (n == 0) throw DiscretizationError("mesh has no interior vertices; decrease h");

  std::vector<Eigen::Triplet<double>> kt, mt;
  for (std::size_t t = 0; t < m.triangle_count(); ++t) {
    const auto& tri = m.triangles()[t];
    const double area = m.triangle_area(static_cast<int>(t));
    Vec2 grad[3];
    for (int k = 0; k < 3; ++k) {
      const Vec2 e = m.vertex(tri[(k + 2) % 3]) - m.vertex(tri[(k + 1) % 3]);
      grad[k] = Vec2{-e.y, e.x} / (2.0 * area);
    }
    for (int a = 0; a < 3; ++a) {
      const int r = dof[tri[a]];
      if (r < 0) continue;
      for (int b = 0; b < 3; ++b) {
        const int c = dof[tri[b]];
        if (c < 0) continue;
        kt.emplace_back(r, c, area * dot(grad[a], grad[b]));
        mt.emplace_back(r, c, area * (a == b ? 2.0 : 1.0) / 12.0);
      }
    }
  }
  Eigen::SparseMatrix<double> K(n, n), M(n, n);
  K.setFromTriplets(kt.begin(), kt.end());
  M.setFromTriplets(mt.begin(), mt.end());

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(K);
  if (ldlt.info() != Eigen::Success) throw SolverError("stiffness factorization failed");

  EigenResult result;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  double lambda = 0.0;
  for (int it = 1; it <= options.max_iter; ++it) {
    Eigen::VectorXd y = ldlt.solve(M * x);
    y /= std::sqrt(y.dot(M * y));
    const double next = y.dot(K * y);
    x = y;
    result.iterations = it;
    result.increment = std::abs(next - lambda);
    lambda = next;
    if (it > 1 && result.increment < options.tol * std::max(1.0, lambda)) {
      result.converged = true;
      break;
    }
  }
  result.lambda = lambda;
  result.residual = (K * x - lambda * (M * x)).norm() / (lambda * (M * x).norm());
  normalize_positive(x);
  require_positive(x, "FEM eigen solve");
  std::vector<double> phi(nv, 0.0);
  for (int i = 0; i < nv; ++i)
    if (dof[i] >= 0) phi[i] = x(dof[i]);
  result.fem.emplace(mesh, std::move(phi));
  return result;
}

EigenResult principal_eigen(const Polygon& polygon, double h, const OperatorCoeffs& coeffs,
                            const EigenOptions& options) {
  GridField grid(polygon, h);
  const int n = static_cast<int>(grid.unknown_count());
  if (n == 0) throw DiscretizationError("grid has no interior nodes; decrease h");
  const Eigen::SparseMatrix<double> A = -assemble_fd_operator(grid, coeffs);
  Eigen::SparseMatrix<double> I(n, n);
  I.setIdentity();

  EigenResult result;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
  double lambda = 0.0;
  double shift = 0.0;
  bool shifted = false;
  auto factor = [&](double s) {
    auto lu = std::make_unique<Eigen::SparseLU<Eigen::SparseMatrix<double>>>();
    Eigen::SparseMatrix<double> B = A - s * I;
    B.makeCompressed();
    lu->analyzePattern(B);
    lu->factorize(B);
    if (lu->info() != Eigen::Success) throw SolverError("sparse LU factorization failed");
    return lu;
  };
  auto lu = factor(0.0);
  for (int it = 1; it <= options.max_iter; ++it) {
    Eigen::VectorXd y = lu->solve(x);
    const double next = shift + x.dot(x) / x.dot(y);
    y /= y.norm();
    if (y.sum() < 0.0) y = -y;
    x = y;
    result.iterations = it;
    result.increment = std::abs(next - lambda);
    lambda = next;
    if (it > 1 && result.increment < options.tol * std::max(1.0, lambda)) {
      result.converged = true;
      break;
    }
    if (!shifted && it > 2 && result.increment < 1e-4 * std::max(1.0, lambda)) {
      shift = 0.9 * lambda;
      lu = factor(shift);
      shifted = true;
    }
  }
  result.lambda = lambda;
  result.residual = (A * x - lambda * x).norm() / (lambda * x.norm());
  normalize_positive(x);
  require_positive(x, "finite-difference eigen solve");
  for (int r = 0; r < n; ++r) grid.values()[grid.unknowns()[r]] = x(r);
  result.grid.emplace(std::move(grid));
  return result;
}

}  // namespace abplab
