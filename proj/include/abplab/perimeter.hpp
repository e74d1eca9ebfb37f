#pragma once

#include "abplab/gauge.hpp"
#include "abplab/geometry.hpp"
#include "abplab/weights.hpp"

namespace abplab {

/**
 * Weighted anisotropic perimeter of the polygon relative to the cone: sum over boundary edges of
 * the 5-point Gauss-Legendre integral of H(nu) w, skipping edges that lie on a cone ray. When w
 * vanishes on the cone boundary, edges with an endpoint within `grading_length` of it (default:
 * the edge's own length) are split into 8 sub-edges graded dyadically toward that endpoint.
 *
 * Throws GeometryError when a vertex lies outside the closed cone (the polygon must be clipped
 * first).
 */
double perimeter_weighted(const Polygon& polygon, const ConvexCone& cone, const Gauge& gauge,
                          const HomogeneousWeight& w, double grading_length = 0.0);

/// Plain perimeter with the weight's own cone and the Euclidean gauge.
double perimeter_weighted(const Polygon& polygon, const HomogeneousWeight& w);

/// Integral of w along [a, b], graded toward the endpoints flagged in `grade_a`, `grade_b`.
double weighted_edge_integral(Vec2 a, Vec2 b, const HomogeneousWeight& w, bool grade_a, bool grade_b);

}  // namespace abplab
