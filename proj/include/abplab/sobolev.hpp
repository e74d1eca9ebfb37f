#pragma once

#include <cstdint>
#include <vector>

#include "abplab/weights.hpp"

namespace abplab {

/// Smooth compactly supported test function: a bump exp(1 - 1/(1 - t^2)), t = |x - c| / radius,
/// or the indicator of the ball B_radius(0) mollified over a shell of half-width width * radius.
struct TestFunction {
  enum class Kind { Bump, MollifiedIndicator };
  Kind kind = Kind::Bump;
  Vec2 center{0.0, 0.0};
  double radius = 1.0;
  double width = 0.02;

  double value(Vec2 x) const;
  Vec2 gradient(Vec2 x) const;
  double support_radius() const;  // the support lies in B_R(0)
  /// u(x / t).
  TestFunction dilated(double t) const;
};

/// `count` bumps with centers uniform in the cone intersected with B_1 and radii in [0.15, 0.8].
std::vector<TestFunction> random_bumps(const ConvexCone& cone, int count, std::uint64_t seed = kDefaultSeed);
TestFunction mollified_ball_indicator(double radius = 1.0, double width = 0.02);

struct SobolevEntry {
  TestFunction function;
  double numerator = 0.0;    // (integral |u|^p* w)^(1/p*)
  double denominator = 0.0;  // (integral |grad u|^p w)^(1/p)
  double quotient = 0.0;
  bool violation = false;    // p = 1 only: quotient > C1
};

struct SobolevReport {
  double p = 1.0;
  double D = 2.0;
  double p_star = 2.0;
  double c1 = 0.0;           // (D w(B_1 cap Sigma)^(1/D))^-1, p = 1 only
  double max_quotient = 0.0;
  int violations = 0;
  std::vector<SobolevEntry> entries;
  bool pass = false;
};

/// Quotient of one test function on a polar grid over Sigma cap B_R (R from the support).
SobolevEntry sobolev_quotient(const HomogeneousWeight& w, const ConvexCone& cone, double p, const TestFunction& f,
                              int radial_nodes = 1200, int angular_nodes = 600);

/**
 * Weighted Sobolev quotients over a family, p* = pD / (D - p). For p = 1 every quotient must stay
 * below C1; for p > 1 only the maximum is reported. Throws ParameterError unless 1 <= p < D.
 */
SobolevReport sobolev_check(const HomogeneousWeight& w, const ConvexCone& cone, double p,
                            const std::vector<TestFunction>& family);

}  // namespace abplab
