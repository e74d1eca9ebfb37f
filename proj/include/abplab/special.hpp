#pragma once

namespace abplab {

/// First positive zero of the Bessel function J0 (bisection on std::cyl_bessel_j).
double bessel_j0_first_zero();

/// pi j01^2: first Dirichlet eigenvalue of the Laplacian on the unit disc times its area.
double faber_krahn_constant();

}  // namespace abplab
