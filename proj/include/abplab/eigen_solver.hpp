#pragma once

#include <memory>
#include <optional>

#include "abplab/field.hpp"
#include "abplab/finite_difference.hpp"

namespace abplab {

struct EigenOptions {
  double tol = 1e-10;  // stop when |lambda_k - lambda_{k-1}| < tol max(1, lambda_k)
  int max_iter = 500;
};

struct EigenResult {
  double lambda = 0.0;
  std::optional<ScalarField> fem;  // FEM path: phi on the mesh (0 on boundary vertices)
  std::optional<GridField> grid;   // FD path: phi on the grid
  int iterations = 0;
  double increment = 0.0;          // last eigenvalue increment
  double residual = 0.0;           // relative residual of the eigen equation
  bool converged = false;
};

/**
 * Principal Dirichlet eigenpair of the Laplacian with P1 elements: generalized problem
 * K phi = lambda M phi (consistent mass) by inverse iteration with a sparse LDL^T factor and
 * Rayleigh quotients. phi is made positive and normalized to max 1.
 *
 * Throws DiscretizationError when the converged phi has a non-positive interior node.
 */
EigenResult principal_eigen(std::shared_ptr<const TriMesh> mesh, const EigenOptions& options = {});

/**
 * Principal eigenpair of -L for the finite-difference operator L = a_ij d_ij + b_i d_i with
 * zero Dirichlet data. Inverse iteration with a sparse LU factor, followed by shifted inverse
 * iteration once the eigenvalue has settled.
 */
EigenResult principal_eigen(const Polygon& polygon, double h, const OperatorCoeffs& coeffs,
                            const EigenOptions& options = {});

}  // namespace abplab
