#pragma once

#include <functional>
#include <memory>

#include "abplab/field.hpp"
#include "abplab/weights.hpp"

namespace abplab {

struct SolverOptions {
  double tol = 1e-10;
  int max_iter = 20000;
};

/// Boundary flux as a function of the boundary point and the outward unit normal.
using FluxFunction = std::function<double(Vec2 x, Vec2 normal)>;

struct NeumannResult {
  ScalarField u;
  double b = 0.0;                  // compatibility constant P_w / w(Omega)
  double boundary_flux = 0.0;      // integral of w g over the boundary (P_w for g = 1)
  double measure = 0.0;            // w(Omega)
  double compatibility_defect = 0.0;  // |sum of assembled load| / sum |load|
  double residual = 0.0;           // relative residual of the discrete system
  int iterations = 0;
};

/**
 * P1 Galerkin solution of div(w grad u) = b w in the domain, du/dn = g on the boundary, i.e.
 * the integral w grad u . grad v = -b integral w v + boundary integral w g v for every v, with
 * b fixed by compatibility. Edges flagged on_cone_boundary carry no flux. The singular system is
 * solved by conjugate gradients with a diagonal preconditioner after projecting the load onto
 * the range (one Lagrange multiplier), and u is normalized to zero mean.
 *
 * Throws WeightError if w <= 0 at a mesh vertex and SolverError on non-convergence.
 */
NeumannResult solve_neumann(std::shared_ptr<const TriMesh> mesh, const HomogeneousWeight& w,
                            const FluxFunction& g = {}, const SolverOptions& options = {});

}  // namespace abplab
