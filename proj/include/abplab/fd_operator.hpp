#pragma once

#include <Eigen/SparseCore>

#include "abplab/finite_difference.hpp"

namespace abplab {

/// Matrix of the discrete operator L on the grid unknowns (Dirichlet data eliminated).
Eigen::SparseMatrix<double> assemble_fd_operator(const GridField& grid, const OperatorCoeffs& coeffs);

}  // namespace abplab
