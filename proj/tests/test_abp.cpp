#include <cmath>
#include <numbers>

#include "abplab/abp_dirichlet.hpp"
#include "abplab/contact.hpp"
#include "abplab/eigen_solver.hpp"
#include "abplab/log_transform.hpp"
#include "abplab/trace.hpp"
#include "doctest.h"

using namespace abplab;

namespace {

const double kPi = std::numbers::pi;

std::shared_ptr<const TriMesh> disc_mesh(double h) {
  return std::make_shared<const TriMesh>(triangulate(regular_ngon(128, 1.0), h));
}

}  // namespace

TEST_CASE("contact set of convex and non-convex fields") {
  auto m = disc_mesh(0.08);
  const ScalarField convex = ScalarField::interpolate(m, [](Vec2 p) { return p.squared_norm(); });
  const ContactSet all = lower_contact_set(convex);
  CHECK(all.size() == m->vertex_count());
  CHECK(contact_soundness(convex, all) <= all.epsilon + 1e-12);
  // det D^2 u = 4 everywhere: the contact integral is 4 |Omega|
  CHECK(contact_integral(all) == doctest::Approx(4.0 * m->total_area()).epsilon(1e-6));
  CHECK(amgm_check(all).pass);

  // double well: the lower convex envelope is flat across the middle strip
  const ScalarField well = ScalarField::interpolate(m, [](Vec2 p) { return std::pow(p.x * p.x - 0.25, 2) + p.y * p.y; });
  const ContactSet part = lower_contact_set(well, 1e-9);
  CHECK(part.size() < m->vertex_count());
  for (std::size_t k = 0; k < part.size(); ++k) CHECK(std::abs(m->vertex(part.members[k]).x) > 0.45);
}

TEST_CASE("Legendre argmin of a quadratic sits at the slope preimage") {
  auto m = disc_mesh(0.05);
  const ScalarField u = ScalarField::interpolate(m, [](Vec2 p) { return 0.5 * p.squared_norm(); });
  const Vec2 p{0.3, -0.2};
  const Vec2 x = m->vertex(legendre_argmin(u, p));
  CHECK(distance(x, p) < 0.05);
  const CoverageReport c = gradient_coverage(u, regular_ngon(128, 0.8), 0.05, 300);
  CHECK(c.samples == 300);
  CHECK(c.fraction == doctest::Approx(1.0));
}

TEST_CASE("rigidity of the disc solution") {
  auto m = disc_mesh(0.05);
  const NeumannResult r = solve_neumann(m, HomogeneousWeight::constant());
  const ContactSet g = lower_contact_set(r.u);
  const RigidityReport rig = rigidity_check(g, r.b);
  CHECK(rig.a == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(rig.mean_deviation < 0.02);
}

TEST_CASE("ABP ratio of the torsion function is scale invariant") {
  double ratios[3];
  int k = 0;
  for (double R : {0.5, 1.0, 2.0}) {
    const Polygon disc = regular_ngon(256, R);
    const auto f = [](Vec2) { return -1.0; };
    const GridField u = solve_dirichlet_fd(disc, 0.02 * R, OperatorCoeffs::laplacian(), f);
    const AbpDirichletReport r = abp_dirichlet_ratio(u, f, 300);
    // closed form: sup u = R^2 / 4, diam = 2R, |f|_2 = sqrt(pi) R
    CHECK(r.sup_u == doctest::Approx(R * R / 4).epsilon(3e-3));
    CHECK(r.coverage == doctest::Approx(1.0));
    ratios[k++] = r.ratio;
  }
  CHECK(ratios[0] == doctest::Approx(1.0 / (8.0 * std::sqrt(kPi))).epsilon(5e-3));
  CHECK(ratios[2] == doctest::Approx(ratios[0]).epsilon(1e-3));
}

TEST_CASE("radial integral against its closed form") {
  // 2 pi int r dr / (l^2 + r^2/A + r^4) = pi int ds / (s^2 + s/A + l^2)
  for (auto [l, A] : {std::pair{5.783, kPi}, std::pair{19.74, 1.0}, std::pair{0.5, 1.5}}) {
    const double c = 1.0 / A;
    const double q = std::sqrt(4 * l * l - c * c);
    const double exact = kPi * (2.0 / q) * (kPi / 2 - std::atan(c / q));
    CHECK(eigen_left_integral(l, A).value == doctest::Approx(exact).epsilon(1e-6));
  }
  CHECK_THROWS_AS(eigen_left_integral(5.0, 1.0, 0.5), ParameterError);
}

TEST_CASE("log transform of the disc eigenfunction") {
  auto m = disc_mesh(0.04);
  const EigenResult e = principal_eigen(m);
  const LogField lf = log_eigen_transform(e, regular_ngon(128, 1.0), 0.8);
  CHECK(lf.threshold == doctest::Approx(0.2 * lf.inradius));
  CHECK(log_residual(lf, e.lambda).relative_l1 < 0.05);
  const Certificate c = eigen_chain_check(log_eigen_transform(e, regular_ngon(128, 1.0), 0.9), e.lambda, area(regular_ngon(128, 1.0)));
  CHECK(c.all_pass());
  CHECK(c.find("upint") != nullptr);
}

TEST_CASE("classical and weighted traces") {
  TraceConfig c;
  c.domain = rectangle(1, 1);
  c.h = 0.02;
  c.samples = 500;
  const TraceResult sq = abp_trace(c);
  CHECK_FALSE(sq.certificate.halted);
  CHECK(sq.certificate.links.size() == 6);
  CHECK(sq.certificate.all_pass());

  c.domain = annulus_sector(0.0, kPi / 2, 0.5, 1.5, 96);
  c.cone = ConvexCone::quadrant();
  c.weight = HomogeneousWeight::monomial(1, 1);
  const TraceResult an = abp_trace(c);
  CHECK(an.certificate.all_pass());
  CHECK(an.certificate.find("hypothesis") != nullptr);

  c.weight = HomogeneousWeight::radial_power(2.0, ConvexCone::quadrant());
  const TraceResult bad = abp_trace(c);
  CHECK(bad.certificate.halted);
  CHECK(bad.certificate.links.size() == 1);
  CHECK_FALSE(bad.certificate.all_pass());
  CHECK(bad.certificate.metadata["error"] == "hypothesis");
}
