#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "abplab/geometry.hpp"
#include "abplab/mesh.hpp"
#include "abplab/random.hpp"

namespace abplab {

/**
 * Weight w >= 0 on a convex cone, positively homogeneous of degree alpha: w(t x) = t^alpha w(x).
 *
 * Monomial weights x^A1 y^A2 live on the quadrant when both exponents are positive, on a
 * half-plane when one of them vanishes, and on the whole plane when both do.
 */
class HomogeneousWeight {
 public:
  enum class Kind { Constant, Monomial, RadialPower, Custom };
  using Function = std::function<double(Vec2)>;
  using Gradient = std::function<Vec2(Vec2)>;

  static HomogeneousWeight constant(double value = 1.0, ConvexCone cone = ConvexCone::full_plane());
  static HomogeneousWeight monomial(double a1, double a2);
  static HomogeneousWeight monomial(double a1, double a2, ConvexCone cone);
  /// |x|^beta.
  static HomogeneousWeight radial_power(double beta, ConvexCone cone = ConvexCone::full_plane());
  /// `degree` is the declared homogeneity; homogeneity_check tests it.
  static HomogeneousWeight custom(std::string name, double degree, ConvexCone cone, Function f,
                                  Gradient grad);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  double degree() const { return alpha_; }
  const ConvexCone& cone() const { return cone_; }
  double a1() const { return a1_; }
  double a2() const { return a2_; }
  double beta() const { return a1_; }

  double operator()(Vec2 x) const;
  Vec2 gradient(Vec2 x) const;
  /// True when w vanishes on both boundary rays of a proper cone.
  bool vanishes_on_cone_boundary() const;
  bool is_constant() const { return kind_ == Kind::Constant; }

 private:
  HomogeneousWeight(Kind kind, std::string name, double alpha, ConvexCone cone)
      : kind_(kind), name_(std::move(name)), alpha_(alpha), cone_(cone) {}
  Kind kind_;
  std::string name_;
  double alpha_;
  ConvexCone cone_;
  double a1_ = 0.0, a2_ = 0.0, c_ = 1.0;
  Function f_;
  Gradient grad_;
};

/// Natural cone of the monomial x^A1 y^A2.
ConvexCone monomial_cone(double a1, double a2);

struct WeightCheckReport {
  double max_violation = 0.0;
  Vec2 witness_x, witness_z;
  int samples = 0;
  bool vacuous = false;
  bool pass = false;
};

/**
 * Pair test of alpha (w(z)/w(x))^(1/alpha) <= grad w(x) . z / w(x) on K random pairs in the unit
 * ball of the cone, kept at distance >= margin from the cone boundary. Pass iff every violation
 * is <= 1e-9. Samples come from `cone` when given, else from the weight's cone. Throws WeightError
 * when w <= 0 at a sample.
 */
WeightCheckReport concavity_check(const HomogeneousWeight& w, int pairs = 2000,
                                  std::uint64_t seed = kDefaultSeed, double margin = 1e-3,
                                  const ConvexCone* cone = nullptr);

/// max |w(t x) - t^alpha w(x)| / (t^alpha w(x)) for t in {0.5, 2, 7}; pass iff <= 1e-10.
WeightCheckReport homogeneity_check(const HomogeneousWeight& w, int samples = 500,
                                    std::uint64_t seed = kDefaultSeed);

/// Random point of the cone intersected with the unit ball, at distance >= margin from the
/// cone boundary and from the origin.
Vec2 sample_cone_ball(const ConvexCone& cone, Rng& rng, double margin);

/**
 * Integral of w over the meshed domain: 6-point degree-4 rule per triangle, with one midpoint
 * subdivision for triangles touching the cone boundary. Throws GeometryError when a mesh vertex
 * lies outside the closed cone.
 */
double weighted_measure(const TriMesh& mesh, const HomogeneousWeight& w);

/// Integral of w over a polygon (ear clipping plus `levels` rounds of subdivision). Throws
/// GeometryError when a vertex lies outside the closed cone.
double weighted_measure(const Polygon& polygon, const HomogeneousWeight& w, int levels = 4);

}  // namespace abplab
