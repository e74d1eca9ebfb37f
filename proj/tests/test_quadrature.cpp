#include <cmath>

#include "abplab/quadrature.hpp"
#include "doctest.h"

using namespace abplab;

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST_CASE("Gauss-Legendre 5 is exact through degree 9") {
  for (int k = 0; k <= 9; ++k) {
    const double v = quadrature::integrate_segment({0, 0}, {1, 0}, [k](Vec2 p) { return std::pow(p.x, k); });
    CHECK(v == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
  }
  const double len = quadrature::integrate_segment({0, 0}, {3, 4}, [](Vec2) { return 1.0; });
  CHECK(len == doctest::Approx(5.0));
}

TEST_CASE("triangle rule is exact through degree 4") {
  // integral over the unit simplex of x^a y^b = a! b! / (a + b + 2)!
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      const double v = quadrature::integrate_triangle(
          {0, 0}, {1, 0}, {0, 1}, [a, b](Vec2 p) { return std::pow(p.x, a) * std::pow(p.y, b); }, 0);
      CHECK(v == doctest::Approx(factorial(a) * factorial(b) / factorial(a + b + 2)).epsilon(1e-13));
    }
  }
}

TEST_CASE("subdivision converges on a non-polynomial integrand") {
  const auto f = [](Vec2 p) { return std::sqrt(p.x * p.y); };
  // integral over the simplex of sqrt(x y) = Gamma(3/2)^2 / Gamma(4) = pi / 24
  const double exact = std::acos(-1.0) / 24.0;
  const double coarse = std::abs(quadrature::integrate_triangle({0, 0}, {1, 0}, {0, 1}, f, 1) - exact);
  const double fine = std::abs(quadrature::integrate_triangle({0, 0}, {1, 0}, {0, 1}, f, 5) - exact);
  CHECK(fine < coarse);
  CHECK(fine < 5e-5);
}

TEST_CASE("gauss_legendre nodes integrate high degree") {
  std::vector<double> x, w;
  quadrature::gauss_legendre(16, x, w);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], 30);
  CHECK(s == doctest::Approx(2.0 / 31.0).epsilon(1e-13));
}
