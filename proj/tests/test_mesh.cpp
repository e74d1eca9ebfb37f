#include <cmath>
#include <set>

#include "abplab/mesh.hpp"
#include "doctest.h"

using namespace abplab;

TEST_CASE("square mesh is conforming and quality bounded") {
  const Polygon sq = rectangle(1.0, 1.0);
  const TriMesh m = triangulate(sq, 0.05);
  CHECK(m.total_area() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(m.min_angle_degrees() >= 20.0);
  CHECK(m.max_edge_length() <= 2 * 0.05 + 1e-12);
  double blen = 0.0;
  for (const BoundaryEdge& e : m.boundary_edges()) blen += distance(m.vertex(e.b), m.vertex(e.a));
  CHECK(blen == doctest::Approx(4.0).epsilon(1e-13));
  // Euler characteristic of a disc: V - E + F = 1
  std::set<std::pair<int, int>> edges;
  for (const auto& t : m.triangles()) {
    for (int k = 0; k < 3; ++k) {
      const int a = t[k], b = t[(k + 1) % 3];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  CHECK(static_cast<long>(m.vertex_count()) - static_cast<long>(edges.size()) +
            static_cast<long>(m.triangles().size()) == 1);
}

TEST_CASE("non-convex and circular domains") {
  const Polygon l({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  const TriMesh ml = triangulate(l, 0.08);
  CHECK(ml.total_area() == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(ml.min_angle_degrees() >= 20.0);
  const TriMesh md = triangulate(regular_ngon(64, 1.0), 0.1);
  CHECK(md.total_area() == doctest::Approx(area(regular_ngon(64, 1.0))).epsilon(1e-13));
}

TEST_CASE("boundary normals point outward and cone edges are flagged") {
  MeshOptions o;
  o.cone = ConvexCone::quadrant();
  const TriMesh m = triangulate(rectangle(1.0, 1.0), 0.1, o);
  int on_cone = 0;
  for (const BoundaryEdge& e : m.boundary_edges()) {
    const Vec2 mid = (m.vertex(e.a) + m.vertex(e.b)) * 0.5;
    const Vec2 out = mid + e.normal * 0.01;
    CHECK_FALSE(contains(rectangle(1.0, 1.0), out, 0.0));
    if (e.on_cone_boundary) ++on_cone;
  }
  CHECK(on_cone > 0);
}

TEST_CASE("impossible angle target is reported") {
  const Polygon sliver({{0, 0}, {1, 0}, {0, 0.05}});
  CHECK_THROWS_AS(triangulate(sliver, 0.05), MeshError);
}

TEST_CASE("submesh keeps whole triangles") {
  const TriMesh m = triangulate(rectangle(1.0, 1.0), 0.1);
  std::vector<char> keep(m.vertex_count(), 0);
  for (std::size_t i = 0; i < m.vertex_count(); ++i) keep[i] = m.vertex(static_cast<int>(i)).x <= 0.5 + 1e-12;
  std::vector<int> map;
  const TriMesh s = submesh(m, keep, &map);
  CHECK(s.total_area() < 0.5 + 1e-12);
  CHECK(s.total_area() > 0.3);
  for (std::size_t i = 0; i < s.vertex_count(); ++i) CHECK(keep[map[i]]);
}
