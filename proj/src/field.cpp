#include "abplab/field.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>

namespace abplab {

ScalarField::ScalarField(std::shared_ptr<const TriMesh> mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  if (!mesh_) throw ParameterError("scalar field needs a mesh");
  if (values_.size() != mesh_->vertex_count()) throw ParameterError("field size does not match the mesh");
  recover();
}

ScalarField ScalarField::interpolate(std::shared_ptr<const TriMesh> mesh, const std::function<double(Vec2)>& f) {
  std::vector<double> v(mesh->vertex_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(mesh->vertex(static_cast<int>(i)));
  return ScalarField(std::move(mesh), std::move(v));
}

void ScalarField::recover() {
  const TriMesh& m = *mesh_;
  const std::size_t nt = m.triangle_count(), nv = m.vertex_count();
  triangle_gradients_.resize(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    const auto& tri = m.triangles()[t];
    const Vec2 a = m.vertex(tri[0]), b = m.vertex(tri[1]), c = m.vertex(tri[2]);
    const double ua = values_[tri[0]], ub = values_[tri[1]], uc = values_[tri[2]];
    const Vec2 e1 = b - a, e2 = c - a;
    const double d = cross(e1, e2);
    const double du1 = ub - ua, du2 = uc - ua;
    triangle_gradients_[t] = {(du1 * e2.y - du2 * e1.y) / d, (du2 * e1.x - du1 * e2.x) / d};
  }

  vertex_gradients_.assign(nv, {});
  vertex_hessians_.assign(nv, {});
  fallback_.assign(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& ring = m.vertex_triangles()[v];
    if (ring.size() < 3) {
      fallback_[v] = 1;
      continue;
    }
    std::vector<int> patch = ring;
    if (m.boundary_hops()[v] <= 2) {
      for (int n : m.vertex_neighbors()[v])
        for (int t : m.vertex_triangles()[n])
          if (std::find(patch.begin(), patch.end(), t) == patch.end()) patch.push_back(t);
    }
    const Vec2 x = m.vertex(static_cast<int>(v));
    // Unknowns g0 (2) and symmetric G (3, scaled by the local edge length s). Each patch edge
    // e = (a, b) contributes the tangential relation g(midpoint) . e = u(b) - u(a).
    double s = 0.0;
    for (int t : patch)
      for (int k : m.triangles()[t]) s = std::max(s, distance(x, m.vertex(k)));
    Eigen::Matrix<double, 5, 5> A = Eigen::Matrix<double, 5, 5>::Zero();
    Eigen::Matrix<double, 5, 1> rhs = Eigen::Matrix<double, 5, 1>::Zero();
    for (int t : patch) {
      const auto& tri = m.triangles()[t];
      for (int k = 0; k < 3; ++k) {
        const int ia = tri[(k + 1) % 3], ib = tri[(k + 2) % 3];
        const Vec2 a = m.vertex(ia), b = m.vertex(ib);
        const double len = distance(a, b);
        const Vec2 e = (b - a) / len;
        const Vec2 d = ((a + b) * 0.5 - x) / s;
        Eigen::Matrix<double, 5, 1> row;
        row << e.x, e.y, d.x * e.x, d.x * e.y + d.y * e.x, d.y * e.y;
        A += row * row.transpose();
        rhs += row * ((values_[ib] - values_[ia]) / len);
      }
    }
    Eigen::LDLT<Eigen::Matrix<double, 5, 5>> ldlt(A);
    const Eigen::Matrix<double, 5, 1> dd = ldlt.vectorD().cwiseAbs();
    if (ldlt.info() != Eigen::Success || dd.minCoeff() <= 1e-10 * dd.maxCoeff()) {
      fallback_[v] = 1;
      continue;
    }
    const Eigen::Matrix<double, 5, 1> c = ldlt.solve(rhs);
    vertex_gradients_[v] = {c(0), c(1)};
    vertex_hessians_[v] = {c(2) / s, c(3) / s, c(4) / s};
  }

  // Breadth-first search from the vertices with a full patch.
  std::vector<int> source(nv, -1);
  std::deque<int> queue;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!fallback_[v]) {
      source[v] = static_cast<int>(v);
      queue.push_back(static_cast<int>(v));
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int n : m.vertex_neighbors()[v]) {
      if (source[n] < 0) {
        source[n] = source[v];
        queue.push_back(n);
      }
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (!fallback_[v]) continue;
    if (source[v] < 0) {
      // No vertex with a full patch: fall back to the mean triangle gradient.
      Vec2 g{0.0, 0.0};
      for (int t : m.vertex_triangles()[v]) g += triangle_gradients_[t];
      vertex_gradients_[v] = g / static_cast<double>(std::max<std::size_t>(1, m.vertex_triangles()[v].size()));
      continue;
    }
    vertex_hessians_[v] = vertex_hessians_[source[v]];
    const Vec2 d = m.vertex(static_cast<int>(v)) - m.vertex(source[v]);
    vertex_gradients_[v] = vertex_gradients_[source[v]] + vertex_hessians_[v].apply(d);
  }
}

double ScalarField::mean() const {
  const TriMesh& m = *mesh_;
  double s = 0.0;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) s += m.vertex_areas()[v] * values_[v];
  return s / m.total_area();
}

double ScalarField::max_abs_hessian() const {
  double best = 0.0;
  for (const Sym2& h : vertex_hessians_) best = std::max(best, h.max_abs_eigenvalue());
  return best;
}

const std::vector<Sym2>& hessian_recover(const ScalarField& u) { return u.vertex_hessians(); }

}  // namespace abplab
