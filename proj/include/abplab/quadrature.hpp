#pragma once

#include <array>
#include <functional>
#include <vector>

#include "abplab/vec2.hpp"

namespace abplab::quadrature {

/// 5-point Gauss-Legendre rule on [0, 1] (exact through degree 9).
struct LineRule {
  std::array<double, 5> nodes;
  std::array<double, 5> weights;
};
const LineRule& gauss_legendre5();

/// 6-point symmetric rule on the reference triangle, exact through degree 4. Barycentric
/// coordinates with weights summing to 1 (multiply by the triangle area).
struct TriangleRule {
  std::array<std::array<double, 3>, 6> barycentric;
  std::array<double, 6> weights;
};
const TriangleRule& triangle6();

/// Integral of f along the segment [a, b] (arc-length measure).
double integrate_segment(Vec2 a, Vec2 b, const std::function<double(Vec2)>& f);

/// Integral of f over the triangle (a, b, c), refined `levels` times by midpoint subdivision.
double integrate_triangle(Vec2 a, Vec2 b, Vec2 c, const std::function<double(Vec2)>& f,
                          int levels = 0);

/// n-point Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace abplab::quadrature
