#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "abplab/mesh.hpp"

namespace abplab {

/**
 * Piecewise-linear field on a triangle mesh with derived data: exact per-triangle gradients of
 * the interpolant, and per-vertex gradient and Hessian recovered by a least-squares linear fit
 * g(x) = g0 + G (x - x_v), G symmetric, of the triangle gradients over the vertex patch. The fit
 * uses the tangential components g_T . e = u(b) - u(a) at edge midpoints, which a quadratic
 * reproduces exactly. Vertices within two edges of the boundary use the two-ring patch.
 *
 * Vertices whose patch has fewer than three triangles copy the recovery of the nearest vertex
 * that has a full patch and are flagged in hessian_fallback().
 */
class ScalarField {
 public:
  ScalarField(std::shared_ptr<const TriMesh> mesh, std::vector<double> values);
  static ScalarField interpolate(std::shared_ptr<const TriMesh> mesh, const std::function<double(Vec2)>& f);

  const TriMesh& mesh() const { return *mesh_; }
  const std::shared_ptr<const TriMesh>& mesh_ptr() const { return mesh_; }
  const std::vector<double>& values() const { return values_; }
  double value(int i) const { return values_[i]; }

  const std::vector<Vec2>& triangle_gradients() const { return triangle_gradients_; }
  const std::vector<Vec2>& vertex_gradients() const { return vertex_gradients_; }
  const std::vector<Sym2>& vertex_hessians() const { return vertex_hessians_; }
  const std::vector<char>& hessian_fallback() const { return fallback_; }

  /// Integral of the interpolant divided by the mesh area.
  double mean() const;
  double max_abs_hessian() const;

 private:
  void recover();
  std::shared_ptr<const TriMesh> mesh_;
  std::vector<double> values_;
  std::vector<Vec2> triangle_gradients_;
  std::vector<Vec2> vertex_gradients_;
  std::vector<Sym2> vertex_hessians_;
  std::vector<char> fallback_;
};

/// Per-vertex recovered Hessians (see ScalarField).
const std::vector<Sym2>& hessian_recover(const ScalarField& u);

}  // namespace abplab
