#pragma once

#include <vector>

#include "abplab/certificate.hpp"
#include "abplab/eigen_solver.hpp"

namespace abplab {

/// u = -log(phi) on the sub-mesh of vertices at distance >= (1 - clip) * inradius from the boundary.
struct LogField {
  ScalarField u;
  std::vector<int> parent;  // vertex index in the eigen mesh
  double clip = 0.0;
  double inradius = 0.0;
  double threshold = 0.0;   // (1 - clip) * inradius
};

/// Throws DiscretizationError when phi <= 0 inside the clip region.
LogField log_eigen_transform(const EigenResult& eigen, const Polygon& domain, double clip = 0.8);

struct LogResidual {
  double relative_l1 = 0.0;  // integral |Lap u - lambda - |grad u|^2| / integral (lambda + |grad u|^2)
  double absolute_l1 = 0.0;
};

LogResidual log_residual(const LogField& field, double lambda);

struct RadialIntegral {
  double value = 0.0;  // integral over the plane of g(|p|), tail included
  double radius = 0.0; // truncation radius R
  double tail = 0.0;   // analytic bound pi / R^2 on the truncated part
};

/// Integral over the plane of g(|p|) = 1 / (lambda^2 + |p|^2 / area + |p|^4) by radial quadrature on
/// [0, R]; R = 0 picks a radius with tail below 1e-6 of the total. Throws ParameterError when the
/// tail bound exceeds 1% of the value.
RadialIntegral eigen_left_integral(double lambda, double area, double radius = 0.0);

/**
 * Certificate for the eigenvalue chain in the plane. LEFT is the radial integral above, RIGHT the
 * contact integral of g(|grad u|) det D^2 u over the lower contact set of u, and the analytic bound
 * is c(2) |Omega| log(1 + 2 |Omega|^-2 / lambda^2) with c(2) = P(B_1) / 4. Links:
 * "upint" LEFT <= RIGHT (1 + slack) and "loint" bound (1 - slack) <= LEFT.
 */
Certificate eigen_chain_check(const LogField& field, double lambda, double area, double b_norm = 0.0,
                              double slack = 0.1);

}  // namespace abplab
