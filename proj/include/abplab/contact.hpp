#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "abplab/certificate.hpp"
#include "abplab/field.hpp"
#include "abplab/random.hpp"
#include "abplab/weights.hpp"

namespace abplab {

/// Discrete lower contact set: vertices whose tangent plane lies below every nodal value.
struct ContactSet {
  std::vector<int> members;
  std::vector<Vec2> gradients;
  std::vector<Sym2> hessians;
  std::vector<double> areas;  // lumped vertex areas
  double epsilon = 0.0;

  std::size_t size() const { return members.size(); }
  double area() const;
};

/// Default tolerance 4 h^2 max |D^2 u|.
double default_contact_epsilon(const ScalarField& u);

/**
 * Exhaustive scan: vertex i is a member when u(y) >= u(x_i) + p_i . (y - x_i) - epsilon for every
 * vertex y, with p_i the recovered gradient.
 */
ContactSet lower_contact_set(const ScalarField& u, std::optional<double> epsilon = std::nullopt);

/// Worst minorization defect of the members (re-verification by a second brute-force pass).
double contact_soundness(const ScalarField& u, const ContactSet& gamma);

/// argmin over vertices of u(y) - p . y; ties go to the lowest index.
int legendre_argmin(const ScalarField& u, Vec2 p);

struct CoverageReport {
  int samples = 0;
  int interior = 0;
  double fraction = 0.0;
  std::vector<Vec2> points;      // sampled p
  std::vector<int> argmins;      // argmin vertex per sample
  std::vector<Vec2> failures;    // p whose argmin is within one edge of the boundary
};

/**
 * Samples `count` points uniformly in (1 - delta) target by rejection from its bounding box and
 * checks that each Legendre argmin sits at least two edges away from the boundary.
 */
CoverageReport gradient_coverage(const ScalarField& u, const Polygon& target, double delta, int count,
                                 std::uint64_t seed = kDefaultSeed);

/**
 * Sum over members of factor(p_i) max(det D^2 u, 0) times the lumped area. With `filter`, members
 * whose gradient lies outside the cone are dropped. An empty factor means 1.
 */
double contact_integral(const ContactSet& gamma, const std::function<double(Vec2)>& factor = {},
                        const ConvexCone* filter = nullptr);

struct AmgmReport {
  double worst_slack = 0.0;  // max of lhs - rhs over the members considered
  int witness = -1;          // mesh vertex attaining it
  int considered = 0;
  bool pass = false;
};

/// max over the contact set of det D^2 u - (Laplacian / 2)^2; pass iff <= tol.
AmgmReport amgm_check(const ContactSet& gamma, double tol = 1e-9);

/**
 * Weighted form: max over members with gradient in the cone of
 * (w(grad u) / w(x)) (Laplacian / 2)^2 - (b / D)^D, divided by (b / D)^D; pass iff <= tol.
 */
AmgmReport amgm_check(const ScalarField& u, const ContactSet& gamma, const HomogeneousWeight& w, double b,
                      double tol);

struct RigidityReport {
  double a = 0.0;  // b / n
  double mean_deviation = 0.0;
  double max_deviation = 0.0;
};

/// Mean and max over the contact set of |D^2 u - a Id|_F / a with a = b / 2.
RigidityReport rigidity_check(const ContactSet& gamma, double b);

}  // namespace abplab
