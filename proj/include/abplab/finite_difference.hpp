#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "abplab/geometry.hpp"
#include "abplab/neumann.hpp"
#include "abplab/random.hpp"

namespace abplab {

/**
 * Uniform grid over the bounding box of a polygon. Unknown nodes (mask) are the nodes strictly
 * inside the polygon; each stencil arm of a masked node ends either at a masked neighbour or at
 * the point where the grid line leaves the polygon (arm lengths in arm()).
 */
class GridField {
 public:
  GridField(const Polygon& polygon, double h);

  const Polygon& polygon() const { return polygon_; }
  double h() const { return h_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  Vec2 node(int i, int j) const { return {x0_ + i * h_, y0_ + j * h_}; }
  int index(int i, int j) const { return j * nx_ + i; }
  bool masked(int i, int j) const;
  const std::vector<char>& mask() const { return mask_; }
  /// Arm lengths in directions +x, -x, +y, -y (each in (0, h]).
  const std::array<double, 4>& arm(int i, int j) const { return arms_[index(i, j)]; }
  std::size_t unknown_count() const { return unknowns_.size(); }
  /// Grid index of each unknown, and the unknown number of each grid node (-1 if none).
  const std::vector<int>& unknowns() const { return unknowns_; }
  const std::vector<int>& unknown_of_node() const { return unknown_of_; }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }
  double value(int i, int j) const { return values_[index(i, j)]; }
  double max_value() const;

 private:
  Polygon polygon_;
  double h_;
  double x0_, y0_;
  int nx_, ny_;
  std::vector<char> mask_;
  std::vector<std::array<double, 4>> arms_;
  std::vector<int> unknowns_;
  std::vector<int> unknown_of_;
  std::vector<double> values_;
};

/// L u = a_ij d_ij u + b_i d_i u with declared ellipticity bounds c0 |xi|^2 <= a xi.xi <= C0 |xi|^2.
struct OperatorCoeffs {
  std::function<Sym2(Vec2)> a;
  std::function<Vec2(Vec2)> b;
  double c0 = 1.0;
  double C0 = 1.0;

  static OperatorCoeffs laplacian();
  static OperatorCoeffs constant(Sym2 a, Vec2 b = {0.0, 0.0});
  /// Piecewise-constant coefficients alternating between a_even and a_odd on square cells.
  static OperatorCoeffs checkerboard(Sym2 a_even, Sym2 a_odd, double cell, Vec2 origin = {0.0, 0.0});
  bool has_drift() const { return static_cast<bool>(b); }
};

struct EllipticityReport {
  double min_ratio = 0.0;  // min of a xi.xi / |xi|^2 over samples
  double max_ratio = 0.0;
  bool pass = false;
};

/// Samples a_ij xi_i xi_j / |xi|^2 on the masked nodes with random xi.
EllipticityReport ellipticity_check(const GridField& grid, const OperatorCoeffs& coeffs, int directions_per_node = 4,
                                    std::uint64_t seed = kDefaultSeed);

/**
 * Finite-difference solution of a_ij d_ij u + b_i d_i u = f with u = 0 on the boundary: 5-point
 * stencil with Shortley-Weller arms at the boundary, 4-corner cross-derivative stencil (corner
 * values outside the polygon taken as 0), upwind drift. Solved by BiCGSTAB with a diagonal
 * preconditioner.
 *
 * Throws StabilityError when |a12| > min(a11, a22) at a node, SolverError on non-convergence.
 */
GridField solve_dirichlet_fd(const Polygon& polygon, double h, const OperatorCoeffs& coeffs,
                             const std::function<double(Vec2)>& f, const SolverOptions& options = {});

}  // namespace abplab
