#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "abplab/geometry.hpp"

namespace abplab {

struct BoundaryEdge {
  int a = -1;
  int b = -1;  // traversed a -> b with the domain on the left
  Vec2 normal;  // outward unit normal
  bool on_cone_boundary = false;
};

/**
 * Conforming triangle mesh of a planar domain. Triangles are counterclockwise. Topology
 * (vertex-triangle incidence, vertex neighbours, boundary flags) is built once at construction.
 */
class TriMesh {
 public:
  TriMesh(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles, double h,
          const std::optional<ConvexCone>& cone = std::nullopt);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::vector<BoundaryEdge>& boundary_edges() const { return boundary_edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }
  double h() const { return h_; }

  Vec2 vertex(int i) const { return vertices_[i]; }
  double triangle_area(int t) const;
  Vec2 triangle_centroid(int t) const;
  double total_area() const;
  /// Lumped (one third of incident triangle areas) vertex areas.
  const std::vector<double>& vertex_areas() const { return vertex_areas_; }
  const std::vector<std::vector<int>>& vertex_triangles() const { return vertex_triangles_; }
  const std::vector<std::vector<int>>& vertex_neighbors() const { return vertex_neighbors_; }
  bool is_boundary_vertex(int i) const { return boundary_vertex_[i] != 0; }
  /// Graph distance (edge hops) from each vertex to the nearest boundary vertex.
  const std::vector<int>& boundary_hops() const { return boundary_hops_; }
  /// Smallest triangle angle in degrees.
  double min_angle_degrees() const;
  double max_edge_length() const;

 private:
  std::vector<Vec2> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<BoundaryEdge> boundary_edges_;
  double h_;
  std::vector<double> vertex_areas_;
  std::vector<std::vector<int>> vertex_triangles_;
  std::vector<std::vector<int>> vertex_neighbors_;
  std::vector<char> boundary_vertex_;
  std::vector<int> boundary_hops_;
};

struct MeshOptions {
  double min_angle_deg = 20.0;
  /// Boundary edges lying on this cone's rays are flagged on_cone_boundary.
  std::optional<ConvexCone> cone;
  /// Hard cap on inserted vertices, as a multiple of the expected count.
  double vertex_budget_factor = 40.0;
};

/**
 * Constrained Delaunay triangulation with Ruppert-style refinement: boundary presplit at
 * spacing <= h, interior seeded with an equilateral lattice of spacing h, then circumcenter
 * insertion until every triangle has circumradius <= h (edges <= 2h) and minimum angle
 * >= min_angle_deg. Throws MeshError when the quality target cannot be met.
 */
TriMesh triangulate(const Polygon& polygon, double h, const MeshOptions& options = {});

/// Sub-mesh made of the triangles whose three vertices satisfy `keep`; vertices are reindexed.
/// `vertex_map` receives, for each new vertex, its index in the parent mesh.
TriMesh submesh(const TriMesh& mesh, const std::vector<char>& keep_vertex, std::vector<int>* vertex_map);

}  // namespace abplab
