#pragma once

#include <cstdint>
#include <functional>

#include "abplab/finite_difference.hpp"
#include "abplab/random.hpp"

namespace abplab {

struct AbpDirichletReport {
  double sup_u = 0.0;
  double diameter = 0.0;
  double f_minus_norm = 0.0;  // L2 norm of the negative part of f over the polygon
  double ratio = 0.0;         // sup u / (diameter * f_minus_norm)
  double slope_radius = 0.0;  // M / d
  int samples = 0;
  int interior = 0;           // slopes whose upper contact point is an interior node
  double coverage = 0.0;
};

/**
 * Empirical ABP constant of a Dirichlet solution, and the inclusion B_{M/d} in the gradient image
 * of the upper contact set: for slopes p sampled uniformly in (1 - delta) B_{M/d}, the maximizer
 * of u(y) - p . y over the grid nodes and the boundary (u = 0, sampled at spacing h / 2) must be
 * an interior node.
 *
 * Throws ParameterError when u is positive on the boundary.
 */
AbpDirichletReport abp_dirichlet_ratio(const GridField& u, const std::function<double(Vec2)>& f, int samples = 1000,
                                       std::uint64_t seed = kDefaultSeed, double delta = 0.0);

}  // namespace abplab
