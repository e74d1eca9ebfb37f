#include <cmath>
#include <numbers>

#include "abplab/inequalities.hpp"
#include "abplab/sobolev.hpp"
#include "abplab/special.hpp"
#include "doctest.h"

using namespace abplab;

namespace {

const double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("classical quotient") {
  const QuotientReport sq = isoperimetric_report(rectangle(1, 1));
  CHECK(sq.quotient == 4.0);
  CHECK(sq.reference == doctest::Approx(2 * std::sqrt(kPi)));
  CHECK(sq.deficit == doctest::Approx(4.0 - 2 * std::sqrt(kPi)));
  const QuotientReport d = isoperimetric_report(regular_ngon(512, 1.0));
  CHECK(d.deficit >= 0.0);
  CHECK(d.deficit <= 1e-3);
  CHECK(isoperimetric_report(scaled(regular_ngon(512, 1.0), 3.0)).quotient == doctest::Approx(d.quotient).epsilon(1e-12));
}

TEST_CASE("anisotropic quotient") {
  const Polygon box = rectangle(2, 2, {-1, -1});
  const QuotientReport e = wulff_report(box, Gauge::euclidean());
  CHECK(e.quotient == doctest::Approx(isoperimetric_report(box).quotient).epsilon(1e-9));
  const QuotientReport l1 = wulff_report(box, Gauge::l1());
  CHECK(l1.reference == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::abs(l1.deficit) <= 1e-4);
  // disc under the l1 energy: the boundary integral of |nu_1| + |nu_2| is 8 on the unit circle
  const QuotientReport disc = wulff_report(regular_ngon(512, 1.0), Gauge::l1());
  CHECK(disc.quotient == doctest::Approx(8.0 / std::sqrt(kPi)).epsilon(1e-4));
  CHECK(disc.deficit > 0.5);
}

TEST_CASE("Wulff identities") {
  CHECK(wulff_identity_check(Gauge::euclidean(), ConvexCone::full_plane(), HomogeneousWeight::constant()).all_pass());
  const Certificate l1 = wulff_identity_check(Gauge::l1(), ConvexCone::full_plane(), HomogeneousWeight::constant());
  CHECK(l1.all_pass());
  CHECK(l1.metadata["perimeter"].get<double>() == doctest::Approx(8.0));
  const Certificate xy = wulff_identity_check(Gauge::euclidean(), ConvexCone::quadrant(), HomogeneousWeight::monomial(1, 1));
  CHECK(xy.links[0].lhs <= 1e-5);
  CHECK(xy.metadata["perimeter"].get<double>() == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(xy.metadata["D_times_measure"].get<double>() == doctest::Approx(4 * 0.125).epsilon(1e-5));
  CHECK_THROWS_AS(wulff_identity_check(Gauge::euclidean(), ConvexCone::quadrant(), HomogeneousWeight::constant()),
                  HypothesisError);
}

TEST_CASE("cone quotients") {
  const ConvexCone q = ConvexCone::quadrant();
  const HomogeneousWeight xy = HomogeneousWeight::monomial(1, 1);
  const QuotientReport qd = cone_report(sector_polygon(0, kPi / 2, 1.0, 512), q, xy, Gauge::euclidean());
  CHECK(qd.D == 4.0);
  CHECK(qd.exponent == doctest::Approx(0.75));
  CHECK(std::abs(qd.deficit) <= 1e-3);
  // unit square in the quadrant: P = int_0^1 y dy + int_0^1 x dx = 1, w = 1/4
  const QuotientReport sq = cone_report(rectangle(1, 1), q, xy, Gauge::euclidean());
  CHECK(sq.perimeter == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(sq.measure == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(sq.quotient == doctest::Approx(std::pow(0.25, -0.75)).epsilon(1e-9));
  CHECK(sq.deficit > 0.4);
  const QuotientReport half = cone_report(sector_polygon(0, kPi, 1.0, 1024), ConvexCone::half_plane(),
                                          HomogeneousWeight::constant(), Gauge::euclidean());
  CHECK(std::abs(half.deficit) <= 1e-3);
  const QuotientReport full = cone_report(rectangle(1, 1), ConvexCone::full_plane(), HomogeneousWeight::constant(),
                                          Gauge::euclidean());
  CHECK(full.quotient == doctest::Approx(isoperimetric_report(rectangle(1, 1)).quotient).epsilon(1e-12));
  CHECK(full.reference == doctest::Approx(isoperimetric_report(rectangle(1, 1)).reference).epsilon(1e-12));
  CHECK_THROWS_AS(cone_report(rectangle(1, 1), q, HomogeneousWeight::radial_power(2.0, q), Gauge::euclidean()),
                  HypothesisError);
  const QuotientReport big = cone_report(scaled(rectangle(1, 1), 2.5), q, xy, Gauge::euclidean());
  CHECK(big.quotient == doctest::Approx(sq.quotient).epsilon(1e-9));
}

TEST_CASE("Bessel oracle and Faber-Krahn") {
  CHECK(bessel_j0_first_zero() == doctest::Approx(2.404825557695773).epsilon(1e-12));
  CHECK(faber_krahn_constant() == doctest::Approx(kPi * 2.404825557695773 * 2.404825557695773).epsilon(1e-12));
  const FaberKrahnReport sq = faber_krahn_report(rectangle(1, 1), 0.03);
  CHECK(sq.ratio == doctest::Approx(2 * kPi * kPi / faber_krahn_constant()).epsilon(5e-3));
  const double a = std::sqrt(3 * kPi), b = std::sqrt(kPi / 3);
  const FaberKrahnReport rect = faber_krahn_report(rectangle(a, b), 0.05);
  CHECK(rect.product == doctest::Approx(kPi * kPi * (1 / (a * a) + 1 / (b * b)) * a * b).epsilon(5e-3));
  CHECK(rect.ratio > sq.ratio);
}

TEST_CASE("Sobolev quotients") {
  const ConvexCone q = ConvexCone::quadrant();
  // w = 1 in the quadrant: C1 = (2 (pi / 4)^(1/2))^-1
  const SobolevReport flat = sobolev_check(HomogeneousWeight::constant(1.0, q), q, 1.0, random_bumps(q, 4));
  CHECK(flat.c1 == doctest::Approx(1.0 / (2.0 * std::sqrt(kPi / 4))).epsilon(1e-6));
  CHECK(flat.violations == 0);
  const HomogeneousWeight xy = HomogeneousWeight::monomial(1, 1);
  const SobolevReport r = sobolev_check(xy, q, 1.0, {mollified_ball_indicator()});
  CHECK(r.c1 == doctest::Approx(1.0 / (4.0 * std::pow(0.125, 0.25))).epsilon(1e-5));
  CHECK(r.max_quotient >= 0.9 * r.c1);
  CHECK(r.max_quotient <= r.c1);
  const TestFunction bump = random_bumps(q, 1, 7).front();
  const SobolevEntry e1 = sobolev_quotient(xy, q, 2.0, bump);
  const SobolevEntry e2 = sobolev_quotient(xy, q, 2.0, bump.dilated(2.0));
  CHECK(e2.quotient == doctest::Approx(e1.quotient).epsilon(1e-6));
  CHECK_THROWS_AS(sobolev_check(xy, q, 4.0, {bump}), ParameterError);
}
