#include <cmath>
#include <numbers>

#include "abplab/eigen_solver.hpp"
#include "abplab/field.hpp"
#include "abplab/finite_difference.hpp"
#include "abplab/neumann.hpp"
#include "doctest.h"

using namespace abplab;

namespace {

const double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("Hessian recovery is exact for quadratics away from the boundary") {
  auto m = std::make_shared<const TriMesh>(triangulate(regular_ngon(64, 1.0), 0.08));
  const ScalarField u = ScalarField::interpolate(m, [](Vec2 p) { return 1.5 * p.x * p.x - 0.7 * p.x * p.y + 0.2 * p.y * p.y + p.x; });
  for (std::size_t i = 0; i < m->vertex_count(); ++i) {
    const Sym2 H = u.vertex_hessians()[i];
    const Vec2 x = m->vertex(static_cast<int>(i));
    CHECK(H.xx == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(H.xy == doctest::Approx(-0.7).epsilon(1e-8));
    CHECK(H.yy == doctest::Approx(0.4).epsilon(1e-8));
    CHECK(u.vertex_gradients()[i].x == doctest::Approx(3.0 * x.x - 0.7 * x.y + 1.0).epsilon(1e-8));
  }
}

TEST_CASE("Neumann problem on the unit square reproduces |x - c|^2") {
  auto m = std::make_shared<const TriMesh>(triangulate(rectangle(1, 1), 0.05));
  const NeumannResult r = solve_neumann(m, HomogeneousWeight::constant());
  CHECK(r.b == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(r.compatibility_defect < 1e-12);
  // exact solution (x - 1/2)^2 + (y - 1/2)^2 up to a constant; P1 reproduces it only approximately
  double mean = 0.0, area_sum = 0.0;
  for (std::size_t i = 0; i < m->vertex_count(); ++i) {
    const Vec2 x = m->vertex(static_cast<int>(i));
    mean += ((x.x - 0.5) * (x.x - 0.5) + (x.y - 0.5) * (x.y - 0.5)) * m->vertex_areas()[i];
    area_sum += m->vertex_areas()[i];
  }
  mean /= area_sum;
  double err = 0.0;
  for (std::size_t i = 0; i < m->vertex_count(); ++i) {
    const Vec2 x = m->vertex(static_cast<int>(i));
    const double ex = (x.x - 0.5) * (x.x - 0.5) + (x.y - 0.5) * (x.y - 0.5) - mean;
    err = std::max(err, std::abs(r.u.value(static_cast<int>(i)) - ex));
  }
  CHECK(err < 2e-3);
}

TEST_CASE("weighted Neumann compatibility constant") {
  // annulus sector 1/2 < r < 3/2, t < theta < pi/2 - t, w = x y: b = P_w / w(Omega)
  const double t = 0.1;
  const Polygon a = annulus_sector(t, kPi / 2 - t, 0.5, 1.5, 96);
  MeshOptions o;
  o.cone = ConvexCone::quadrant();
  auto m = std::make_shared<const TriMesh>(triangulate(a, 0.05, o));
  const NeumannResult r = solve_neumann(m, HomogeneousWeight::monomial(1, 1));
  // arcs (R^3 + r^3) cos(2t) / 2, radial sides (R^3 - r^3) sin(2t) / 3, w(Omega) = (R^4 - r^4) cos(2t) / 8
  const double P = 0.5 * (std::pow(1.5, 3) + std::pow(0.5, 3)) * std::cos(2 * t) +
                   (std::pow(1.5, 3) - std::pow(0.5, 3)) * std::sin(2 * t) / 3.0;
  const double W = (std::pow(1.5, 4) - std::pow(0.5, 4)) * std::cos(2 * t) / 8.0;
  CHECK(r.b == doctest::Approx(P / W).epsilon(1e-3));
  const HomogeneousWeight signed_w = HomogeneousWeight::custom(
      "x - y", 1.0, ConvexCone::full_plane(), [](Vec2 p) { return p.x - p.y; }, [](Vec2) { return Vec2{1.0, -1.0}; });
  CHECK_THROWS_AS(solve_neumann(m, signed_w), WeightError);
}

TEST_CASE("finite differences: torsion on the disc and elliptic coefficients") {
  const Polygon disc = regular_ngon(256, 1.0);
  const GridField u = solve_dirichlet_fd(disc, 0.02, OperatorCoeffs::laplacian(), [](Vec2) { return -1.0; });
  CHECK(u.max_value() == doctest::Approx(0.25).epsilon(2e-3));
  // a = diag(2, 1): u = (1 - |x|^2) / 6 solves 2 u_xx + u_yy = -1 on the disc
  const OperatorCoeffs a = OperatorCoeffs::constant(Sym2{2.0, 0.0, 1.0});
  const double coarse = solve_dirichlet_fd(disc, 0.04, a, [](Vec2) { return -1.0; }).max_value();
  const double fine = solve_dirichlet_fd(disc, 0.02, a, [](Vec2) { return -1.0; }).max_value();
  CHECK(std::abs(coarse - fine) < 2e-3);
  CHECK(fine == doctest::Approx(1.0 / 6.0).epsilon(2e-3));
  CHECK_THROWS_AS(solve_dirichlet_fd(disc, 0.05, OperatorCoeffs::constant(Sym2{1.0, 1.5, 1.0}), [](Vec2) { return -1.0; }),
                  StabilityError);
}

TEST_CASE("principal eigenvalues") {
  auto sq = std::make_shared<const TriMesh>(triangulate(rectangle(1, 1), 0.03));
  const EigenResult e = principal_eigen(sq);
  CHECK(e.converged);
  CHECK(e.lambda == doctest::Approx(2 * kPi * kPi).epsilon(5e-3));
  for (double v : e.fem->values()) CHECK(v > -1e-12);
  const EigenResult fd = principal_eigen(rectangle(1, 1), 0.02, OperatorCoeffs::laplacian());
  CHECK(fd.lambda == doctest::Approx(2 * kPi * kPi).epsilon(5e-3));
  // rectangle a x b: pi^2 (1/a^2 + 1/b^2)
  auto r = std::make_shared<const TriMesh>(triangulate(rectangle(2, 1), 0.04));
  CHECK(principal_eigen(r).lambda == doctest::Approx(kPi * kPi * 1.25).epsilon(5e-3));
}
