#include "abplab/special.hpp"

#include <cmath>
#include <numbers>

namespace abplab {

double bessel_j0_first_zero() {
  static const double root = [] {
    double lo = 2.0, hi = 3.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (std::cyl_bessel_j(0.0, mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return root;
}

double faber_krahn_constant() {
  const double j = bessel_j0_first_zero();
  return std::numbers::pi * j * j;
}

}  // namespace abplab
