#include "abplab/finite_difference.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <cmath>
#include <limits>
#include <sstream>

#include "abplab/fd_operator.hpp"

namespace abplab {

namespace {

// Distance from p along unit direction d to the polygon boundary, capped at `cap`.
double ray_exit(const Polygon& polygon, Vec2 p, Vec2 d, double cap) {
  double best = cap;
  for (std::size_t e = 0; e < polygon.size(); ++e) {
    const auto [a, b] = polygon.edge(e);
    const Vec2 ab = b - a;
    const double den = cross(d, ab);
    if (den == 0.0) continue;
    const Vec2 ap = a - p;
    const double t = cross(ap, ab) / den;
    const double s = cross(ap, d) / den;
    if (t > 0.0 && t < best && s >= -1e-14 && s <= 1.0 + 1e-14) best = t;
  }
  return best;
}

}  // namespace

GridField::GridField(const Polygon& polygon, double h) : polygon_(polygon), h_(h) {
  if (!(h > 0.0)) throw ParameterError("grid spacing must be positive");
  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin, xmax = -xmin, ymax = -xmin;
  for (Vec2 p : polygon.vertices()) {
    xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
  }
  x0_ = xmin;
  y0_ = ymin;
  nx_ = static_cast<int>(std::floor((xmax - xmin) / h + 1e-9)) + 1;
  ny_ = static_cast<int>(std::floor((ymax - ymin) / h + 1e-9)) + 1;
  if (static_cast<double>(nx_) * ny_ > 4e7) throw ParameterError("grid too large; increase h");
  const std::size_t n = static_cast<std::size_t>(nx_) * ny_;
  mask_.assign(n, 0);
  arms_.assign(n, {h, h, h, h});
  unknown_of_.assign(n, -1);
  values_.assign(n, 0.0);
  const double tol = 1e-9 * h;
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      const Vec2 p = node(i, j);
      if (!contains_strictly(polygon, p, tol)) continue;
      const int k = index(i, j);
      mask_[k] = 1;
      unknown_of_[k] = static_cast<int>(unknowns_.size());
      unknowns_.push_back(k);
    }
  }
  const Vec2 dirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int k : unknowns_) {
    const int i = k % nx_, j = k / nx_;
    for (int a = 0; a < 4; ++a) {
      arms_[k][a] = std::max(ray_exit(polygon, node(i, j), dirs[a], h), 1e-3 * h);
    }
  }
}

bool GridField::masked(int i, int j) const {
  if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return false;
  return mask_[index(i, j)] != 0;
}

double GridField::max_value() const {
  double m = 0.0;
  for (int k : unknowns_) m = std::max(m, values_[k]);
  return m;
}

OperatorCoeffs OperatorCoeffs::laplacian() {
  OperatorCoeffs c;
  c.a = [](Vec2) { return Sym2{1.0, 0.0, 1.0}; };
  return c;
}

OperatorCoeffs OperatorCoeffs::constant(Sym2 a, Vec2 b) {
  OperatorCoeffs c;
  c.a = [a](Vec2) { return a; };
  if (b.x != 0.0 || b.y != 0.0) c.b = [b](Vec2) { return b; };
  c.c0 = a.min_eigenvalue();
  c.C0 = 0.5 * a.trace() + std::hypot(0.5 * (a.xx - a.yy), a.xy);
  return c;
}

OperatorCoeffs OperatorCoeffs::checkerboard(Sym2 a_even, Sym2 a_odd, double cell, Vec2 origin) {
  OperatorCoeffs c;
  c.a = [=](Vec2 p) {
    const long i = static_cast<long>(std::floor((p.x - origin.x) / cell));
    const long j = static_cast<long>(std::floor((p.y - origin.y) / cell));
    return ((i + j) % 2 == 0) ? a_even : a_odd;
  };
  auto top = [](Sym2 a) { return 0.5 * a.trace() + std::hypot(0.5 * (a.xx - a.yy), a.xy); };
  c.c0 = std::min(a_even.min_eigenvalue(), a_odd.min_eigenvalue());
  c.C0 = std::max(top(a_even), top(a_odd));
  return c;
}

EllipticityReport ellipticity_check(const GridField& grid, const OperatorCoeffs& coeffs, int directions_per_node,
                                    std::uint64_t seed) {
  EllipticityReport r;
  r.min_ratio = std::numeric_limits<double>::infinity();
  r.max_ratio = -r.min_ratio;
  Rng rng(seed);
  for (int k : grid.unknowns()) {
    const Vec2 p = grid.node(k % grid.nx(), k / grid.nx());
    const Sym2 a = coeffs.a(p);
    for (int s = 0; s < directions_per_node; ++s) {
      const Vec2 xi = unit_direction(rng.uniform(0.0, 6.283185307179586));
      const double q = dot(xi, a.apply(xi));
      r.min_ratio = std::min(r.min_ratio, q);
      r.max_ratio = std::max(r.max_ratio, q);
    }
  }
  const double tol = 1e-12 * std::max(1.0, coeffs.C0);
  r.pass = r.min_ratio >= coeffs.c0 - tol && r.max_ratio <= coeffs.C0 + tol;
  return r;
}

Eigen::SparseMatrix<double> assemble_fd_operator(const GridField& grid, const OperatorCoeffs& coeffs) {
  const int nx = grid.nx();
  const int n = static_cast<int>(grid.unknown_count());
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(n) * 9);
  const double h = grid.h();
  const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
  for (int row = 0; row < n; ++row) {
    const int k = grid.unknowns()[row];
    const int i = k % nx, j = k / nx;
    const Vec2 p = grid.node(i, j);
    const Sym2 a = coeffs.a(p);
    if (std::abs(a.xy) > std::min(a.xx, a.yy)) {
      std::ostringstream os;
      os << "cross-derivative stencil loses diagonal dominance at (" << p.x << ", " << p.y << "): |a12| = "
         << std::abs(a.xy) << " > min(a11, a22) = " << std::min(a.xx, a.yy)
         << "; use a smaller h where the coefficients vary or reduce the anisotropy";
      throw StabilityError(os.str());
    }
    const auto& arm = grid.arm(i, j);
    double diag = 0.0;
    auto add = [&](int ni, int nj, double c) {
      if (!grid.masked(ni, nj)) return;
      entries.emplace_back(row, grid.unknown_of_node()[grid.index(ni, nj)], c);
    };
    // Shortley-Weller second differences; a cut arm ends on the boundary where u = 0.
    const double coef[2] = {a.xx, a.yy};
    for (int axis = 0; axis < 2; ++axis) {
      const double hp = arm[2 * axis], hm = arm[2 * axis + 1];
      const double cp = 2.0 * coef[axis] / (hp * (hp + hm));
      const double cm = 2.0 * coef[axis] / (hm * (hp + hm));
      diag -= cp + cm;
      if (hp >= h) add(i + di[2 * axis], j + dj[2 * axis], cp);
      if (hm >= h) add(i + di[2 * axis + 1], j + dj[2 * axis + 1], cm);
    }
    if (a.xy != 0.0) {
      const double c = 2.0 * a.xy / (4.0 * h * h);
      add(i + 1, j + 1, c);
      add(i - 1, j - 1, c);
      add(i + 1, j - 1, -c);
      add(i - 1, j + 1, -c);
    }
    if (coeffs.b) {
      const Vec2 b = coeffs.b(p);
      if (b.x > 0.0) {
        diag -= b.x / arm[0];
        if (arm[0] >= h) add(i + 1, j, b.x / arm[0]);
      } else if (b.x < 0.0) {
        diag += b.x / arm[1];
        if (arm[1] >= h) add(i - 1, j, -b.x / arm[1]);
      }
      if (b.y > 0.0) {
        diag -= b.y / arm[2];
        if (arm[2] >= h) add(i, j + 1, b.y / arm[2]);
      } else if (b.y < 0.0) {
        diag += b.y / arm[3];
        if (arm[3] >= h) add(i, j - 1, -b.y / arm[3]);
      }
    }
    entries.emplace_back(row, row, diag);
  }
  Eigen::SparseMatrix<double> A(n, n);
  A.setFromTriplets(entries.begin(), entries.end());
  return A;
}

GridField solve_dirichlet_fd(const Polygon& polygon, double h, const OperatorCoeffs& coeffs,
                             const std::function<double(Vec2)>& f, const SolverOptions& options) {
  GridField grid(polygon, h);
  const int n = static_cast<int>(grid.unknown_count());
  if (n == 0) throw ParameterError("grid has no interior nodes; decrease h");
  const Eigen::SparseMatrix<double> A = assemble_fd_operator(grid, coeffs);
  Eigen::VectorXd rhs(n);
  for (int r = 0; r < n; ++r) {
    const int k = grid.unknowns()[r];
    rhs(r) = f(grid.node(k % grid.nx(), k / grid.nx()));
  }
  if (rhs.norm() == 0.0) return grid;
  Eigen::BiCGSTAB<Eigen::SparseMatrix<double>, Eigen::DiagonalPreconditioner<double>> solver;
  solver.setTolerance(options.tol);
  solver.setMaxIterations(options.max_iter);
  solver.compute(A);
  const Eigen::VectorXd u = solver.solve(rhs);
  const double res = (A * u - rhs).norm() / rhs.norm();
  if (solver.info() != Eigen::Success && res > 10.0 * options.tol) {
    std::ostringstream os;
    os << "finite-difference solve did not converge: relative residual " << res << " after "
       << solver.iterations() << " iterations";
    throw SolverError(os.str());
  }
  for (int r = 0; r < n; ++r) grid.values()[grid.unknowns()[r]] = u(r);
  return grid;
}

}  // namespace abplab
