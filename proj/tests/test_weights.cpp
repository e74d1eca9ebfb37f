#include <cmath>
#include <numbers>

#include "abplab/perimeter.hpp"
#include "abplab/weights.hpp"
#include "doctest.h"

using namespace abplab;

namespace {

const double kPi = std::numbers::pi;

// integral over [0, pi/2] of cos^a sin^b = B((a + 1) / 2, (b + 1) / 2) / 2
double beta_half(double a, double b) {
  const double p = 0.5 * (a + 1), q = 0.5 * (b + 1);
  return 0.5 * std::tgamma(p) * std::tgamma(q) / std::tgamma(p + q);
}

}  // namespace

TEST_CASE("monomial weights are homogeneous and live on their natural cone") {
  const HomogeneousWeight w = HomogeneousWeight::monomial(1.5, 0.5);
  CHECK(w.degree() == doctest::Approx(2.0));
  CHECK(w(Vec2{2.0, 3.0}) == doctest::Approx(std::pow(2.0, 1.5) * std::pow(3.0, 0.5)));
  CHECK(homogeneity_check(w).pass);
  CHECK(w.cone().opening() == doctest::Approx(kPi / 2));
  CHECK(w.vanishes_on_cone_boundary());
  CHECK(HomogeneousWeight::monomial(0.0, 2.0).cone().opening() == doctest::Approx(kPi));
  CHECK_THROWS_AS(HomogeneousWeight::monomial(1.0, 1.0, ConvexCone::half_plane()), WeightError);
  const Vec2 g = w.gradient({2.0, 3.0});
  const double e = 1e-6;
  CHECK(g.x == doctest::Approx((w(Vec2{2 + e, 3}) - w(Vec2{2 - e, 3})) / (2 * e)).epsilon(1e-7));
  CHECK(g.y == doctest::Approx((w(Vec2{2, 3 + e}) - w(Vec2{2, 3 - e})) / (2 * e)).epsilon(1e-7));
}

TEST_CASE("concavity condition") {
  CHECK(concavity_check(HomogeneousWeight::monomial(1, 1)).pass);
  CHECK(concavity_check(HomogeneousWeight::monomial(1.5, 0.5)).pass);
  const WeightCheckReport c = concavity_check(HomogeneousWeight::constant());
  CHECK(c.vacuous);
  CHECK(c.pass);
  const HomogeneousWeight r2 = HomogeneousWeight::radial_power(2.0, ConvexCone::quadrant());
  const WeightCheckReport bad = concavity_check(r2);
  CHECK_FALSE(bad.pass);
  // the reported pair really violates the inequality
  const double a = r2.degree();
  const Vec2 x = bad.witness_x, z = bad.witness_z;
  const double lhs = a * std::pow(r2(z) / r2(x), 1.0 / a);
  const double rhs = dot(r2.gradient(x), z) / r2(x);
  CHECK(lhs > rhs);
}

TEST_CASE("weighted measure and perimeter of the quarter disc") {
  const ConvexCone q = ConvexCone::quadrant();
  const Polygon qd = sector_polygon(0.0, kPi / 2, 1.0, 512);
  const Gauge e = Gauge::euclidean();
  for (auto [a1, a2] : {std::pair{1.0, 1.0}, std::pair{1.5, 0.5}, std::pair{0.5, 2.0}}) {
    const HomogeneousWeight w = HomogeneousWeight::monomial(a1, a2);
    const double D = 2.0 + a1 + a2;
    const double ang = beta_half(a1, a2);
    CAPTURE(a1);
    CAPTURE(a2);
    CHECK(weighted_measure(qd, w) == doctest::Approx(ang / D).epsilon(2e-5));
    CHECK(perimeter_weighted(qd, q, e, w) == doctest::Approx(ang).epsilon(2e-5));
  }
  const HomogeneousWeight xy = HomogeneousWeight::monomial(1, 1);
  CHECK(perimeter_weighted(qd, q, e, xy) == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(weighted_measure(qd, xy) == doctest::Approx(0.125).epsilon(1e-5));
  CHECK_THROWS_AS(perimeter_weighted(regular_ngon(8, 1.0), q, e, xy), GeometryError);
}

TEST_CASE("weighted measure on a mesh matches the polygon rule") {
  const Polygon sq = rectangle(1.0, 2.0);
  const HomogeneousWeight w = HomogeneousWeight::monomial(1, 1);
  // integral of x y over [0,1]x[0,2] = 1/2 * 2 = 1
  CHECK(weighted_measure(sq, w) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(weighted_measure(triangulate(sq, 0.1), w) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unweighted perimeter of the unit square") {
  CHECK(perimeter_weighted(rectangle(1, 1), HomogeneousWeight::constant()) == doctest::Approx(4.0));
  // relative perimeter inside the quadrant skips the two axis edges
  CHECK(perimeter_weighted(rectangle(1, 1), ConvexCone::quadrant(), Gauge::euclidean(), HomogeneousWeight::constant()) ==
        doctest::Approx(2.0));
  // anisotropic: l1 perimeter of [-1,1]^2 is 8
  const Polygon box = rectangle(2, 2, {-1, -1});
  CHECK(perimeter_weighted(box, ConvexCone::full_plane(), Gauge::l1(), HomogeneousWeight::constant()) ==
        doctest::Approx(8.0));
}
