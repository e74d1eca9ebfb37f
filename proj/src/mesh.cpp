#include "abplab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numbers>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace abplab {

// ---------------------------------------------------------------------------------------------
// TriMesh

TriMesh::TriMesh(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles, double h,
                 const std::optional<ConvexCone>& cone)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)), h_(h) {
  const std::size_t nv = vertices_.size();
  vertex_triangles_.assign(nv, {});
  vertex_neighbors_.assign(nv, {});
  vertex_areas_.assign(nv, 0.0);
  boundary_vertex_.assign(nv, 0);

  std::unordered_map<std::uint64_t, int> edge_count;
  auto key = [](int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  };
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    const double a = triangle_area(static_cast<int>(t));
    if (!(a > 0.0)) throw MeshError("mesh triangle " + std::to_string(t) + " is not counterclockwise");
    for (int k = 0; k < 3; ++k) {
      vertex_triangles_[tri[k]].push_back(static_cast<int>(t));
      vertex_areas_[tri[k]] += a / 3.0;
      ++edge_count[key(tri[(k + 1) % 3], tri[(k + 2) % 3])];
    }
  }
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    for (int k = 0; k < 3; ++k) {
      const int u = tri[(k + 1) % 3], w = tri[(k + 2) % 3];
      auto& nu = vertex_neighbors_[u];
      if (std::find(nu.begin(), nu.end(), w) == nu.end()) nu.push_back(w);
      auto& nw = vertex_neighbors_[w];
      if (std::find(nw.begin(), nw.end(), u) == nw.end()) nw.push_back(u);
      const int c = edge_count[key(u, w)];
      if (c > 2) throw MeshError("non-manifold mesh edge");
      if (c == 1) {
        BoundaryEdge e;
        e.a = u;
        e.b = w;
        const Vec2 d = vertices_[w] - vertices_[u];
        e.normal = Vec2{d.y, -d.x} / d.norm();
        if (cone) e.on_cone_boundary = cone->segment_on_boundary(vertices_[u], vertices_[w], 1e-9);
        boundary_edges_.push_back(e);
        boundary_vertex_[u] = boundary_vertex_[w] = 1;
      }
    }
  }
  for (auto& nb : vertex_neighbors_) std::sort(nb.begin(), nb.end());

  boundary_hops_.assign(nv, std::numeric_limits<int>::max());
  std::deque<int> queue;
  for (std::size_t i = 0; i < nv; ++i) {
    if (boundary_vertex_[i]) {
      boundary_hops_[i] = 0;
      queue.push_back(static_cast<int>(i));
    }
  }
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j : vertex_neighbors_[i]) {
      if (boundary_hops_[j] > boundary_hops_[i] + 1) {
        boundary_hops_[j] = boundary_hops_[i] + 1;
        queue.push_back(j);
      }
    }
  }
}

double TriMesh::triangle_area(int t) const {
  const auto& tri = triangles_[t];
  return 0.5 * orient(vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]);
}

Vec2 TriMesh::triangle_centroid(int t) const {
  const auto& tri = triangles_[t];
  return (vertices_[tri[0]] + vertices_[tri[1]] + vertices_[tri[2]]) / 3.0;
}

double TriMesh::total_area() const {
  double s = 0.0;
  for (std::size_t t = 0; t < triangles_.size(); ++t) s += triangle_area(static_cast<int>(t));
  return s;
}

namespace {

double triangle_min_angle(Vec2 a, Vec2 b, Vec2 c) {
  auto ang = [](Vec2 p, Vec2 q, Vec2 r) {
    const Vec2 u = q - p, w = r - p;
    return std::atan2(std::abs(cross(u, w)), dot(u, w));
  };
  return std::min({ang(a, b, c), ang(b, c, a), ang(c, a, b)});
}

}  // namespace

double TriMesh::min_angle_degrees() const {
  double best = 180.0;
  for (const auto& tri : triangles_) {
    best = std::min(best, triangle_min_angle(vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]) *
                              180.0 / std::numbers::pi);
  }
  return best;
}

double TriMesh::max_edge_length() const {
  double best = 0.0;
  for (const auto& tri : triangles_)
    for (int k = 0; k < 3; ++k) best = std::max(best, distance(vertices_[tri[k]], vertices_[tri[(k + 1) % 3]]));
  return best;
}

TriMesh submesh(const TriMesh& mesh, const std::vector<char>& keep, std::vector<int>* vertex_map) {
  std::vector<int> remap(mesh.vertex_count(), -1);
  std::vector<Vec2> verts;
  std::vector<int> back;
  std::vector<std::array<int, 3>> tris;
  for (const auto& tri : mesh.triangles()) {
    if (!keep[tri[0]] || !keep[tri[1]] || !keep[tri[2]]) continue;
    std::array<int, 3> nt{};
    for (int k = 0; k < 3; ++k) {
      if (remap[tri[k]] < 0) {
        remap[tri[k]] = static_cast<int>(verts.size());
        verts.push_back(mesh.vertex(tri[k]));
        back.push_back(tri[k]);
      }
      nt[k] = remap[tri[k]];
    }
    tris.push_back(nt);
  }
  if (tris.empty()) throw MeshError("submesh selection is empty");
  if (vertex_map) *vertex_map = std::move(back);
  return TriMesh(std::move(verts), std::move(tris), mesh.h());
}

// ---------------------------------------------------------------------------------------------
// Constrained Delaunay refinement

namespace {

std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

Vec2 circumcenter(Vec2 a, Vec2 b, Vec2 c) {
  const Vec2 ab = b - a, ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  const double ab2 = ab.squared_norm(), ac2 = ac.squared_norm();
  return a + Vec2{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
}

class Refiner {
 public:
  struct Tri {
    std::array<int, 3> v;
    std::array<int, 3> nb;  // nb[k] is across edge (v[k+1], v[k+2])
  };

  enum class Where { Inside, OnEdge, OnVertex, Blocked, Lost };
  struct Location {
    Where where = Where::Lost;
    int tri = -1;
    int index = -1;  // edge or vertex index within tri
  };

  Refiner(const Polygon& polygon, double h, double min_angle_deg)
      : h_(h), min_angle_(min_angle_deg * std::numbers::pi / 180.0) {
    double scale = 0.0;
    for (Vec2 p : polygon.vertices()) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    scale_ = std::max(scale, diameter(polygon));
    seed_boundary(polygon);
    ear_clip();
    make_delaunay();
  }

  void seed_interior(const Polygon& polygon) {
    double xmin = std::numeric_limits<double>::infinity(), ymin = xmin, xmax = -xmin, ymax = -xmin;
    for (Vec2 p : polygon.vertices()) {
      xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
    }
    const double dy = 0.5 * std::sqrt(3.0) * h_;
    // Irrational offsets keep lattice rows off axis-aligned boundary lines.
    const double ox = xmin + 0.3819660112501051 * h_, oy = ymin + 0.2928932188134524 * dy;
    int start = 0;
    for (int j = 0; oy + j * dy < ymax; ++j) {
      const double y = oy + j * dy;
      const double shift = (j % 2) ? 0.5 * h_ : 0.0;
      for (int i = -1; ox + (i + 0.5) * h_ < xmax; ++i) {
        const Vec2 p{ox + i * h_ + shift, y};
        if (!contains_strictly(polygon, p, 0.6 * h_)) continue;
        if (distance_to_boundary(polygon, p) < 0.6 * h_) continue;
        Location loc = locate(p, start);
        if (loc.where == Where::Blocked || loc.where == Where::Lost) loc = brute_locate(p);
        if (loc.where == Where::Inside) {
          insert_in_triangle(loc.tri, p);
          start = static_cast<int>(tris_.size()) - 1;
        } else if (loc.where == Where::OnEdge && !is_segment_edge(loc.tri, loc.index)) {
          split_edge(loc.tri, loc.index, p);
          start = static_cast<int>(tris_.size()) - 1;
        }
      }
    }
  }

  void refine(std::size_t vertex_cap) {
    for (int pass = 0; pass < 400; ++pass) {
      std::vector<std::pair<double, int>> bad;
      for (std::size_t t = 0; t < tris_.size(); ++t) {
        const double b = badness(static_cast<int>(t));
        if (b > 0) bad.emplace_back(b, static_cast<int>(t));
      }
      if (bad.empty()) return;
      std::sort(bad.begin(), bad.end(), std::greater<>());
      for (const auto& [unused, t] : bad) {
        if (badness(t) <= 0) continue;
        fix(t);
        if (pts_.size() > vertex_cap) {
          throw MeshError("mesh refinement exceeded the vertex budget (" + std::to_string(vertex_cap) +
                          "); the quality target looks unreachable");
        }
      }
    }
    throw MeshError("mesh refinement did not converge in 400 passes");
  }

  TriMesh extract(const std::optional<ConvexCone>& cone) const {
    std::vector<std::array<int, 3>> tris;
    tris.reserve(tris_.size());
    for (const Tri& t : tris_) tris.push_back(t.v);
    return TriMesh(pts_, std::move(tris), h_, cone);
  }

 private:
  double h_;
  double min_angle_;
  double scale_ = 1.0;
  std::vector<Vec2> pts_;
  std::vector<char> corner_;
  std::vector<Tri> tris_;
  std::unordered_set<std::uint64_t> segments_;

  Vec2 P(int i) const { return pts_[i]; }

  static int find_edge(const Tri& t, int u, int w) {
    for (int k = 0; k < 3; ++k)
      if (t.v[(k + 1) % 3] == u && t.v[(k + 2) % 3] == w) return k;
    return -1;
  }

  bool is_segment(int u, int w) const { return segments_.count(edge_key(u, w)) != 0; }
  bool is_segment_edge(int t, int k) const {
    const Tri& T = tris_[t];
    return is_segment(T.v[(k + 1) % 3], T.v[(k + 2) % 3]);
  }

  void seed_boundary(const Polygon& polygon) {
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto [a, b] = polygon.edge(i);
      const int pieces = std::max(1, static_cast<int>(std::ceil(distance(a, b) / h_ - 1e-9)));
      for (int k = 0; k < pieces; ++k) {
        pts_.push_back(k == 0 ? a : a + (b - a) * (static_cast<double>(k) / pieces));
        corner_.push_back(k == 0 ? 1 : 0);
      }
    }
    const int m = static_cast<int>(pts_.size());
    for (int i = 0; i < m; ++i) segments_.insert(edge_key(i, (i + 1) % m));
  }

  void ear_clip() {
    std::vector<int> ring(pts_.size());
    for (std::size_t i = 0; i < ring.size(); ++i) ring[i] = static_cast<int>(i);
    std::vector<std::array<int, 3>> out;
    const double eps = 1e-14 * scale_ * scale_;
    std::size_t guard = 0;
    std::size_t i = 0;
    while (ring.size() > 3) {
      const std::size_t n = ring.size();
      const int a = ring[(i + n - 1) % n], b = ring[i % n], c = ring[(i + 1) % n];
      bool ear = orient(P(a), P(b), P(c)) > eps;
      if (ear) {
        for (std::size_t j = 0; j < n && ear; ++j) {
          const int q = ring[j];
          if (q == a || q == b || q == c) continue;
          const Vec2 p = P(q);
          if (orient(P(a), P(b), p) >= -eps && orient(P(b), P(c), p) >= -eps &&
              orient(P(c), P(a), p) >= -eps) {
            ear = false;
          }
        }
      }
      if (ear) {
        out.push_back({a, b, c});
        ring.erase(ring.begin() + static_cast<long>(i % n));
        guard = 0;
        if (i > 0) --i;
      } else {
        ++i;
        if (++guard > 2 * n) throw MeshError("ear clipping failed; polygon boundary is degenerate");
      }
      i %= ring.size();
    }
    if (orient(P(ring[0]), P(ring[1]), P(ring[2])) <= eps) throw MeshError("degenerate final ear");
    out.push_back({ring[0], ring[1], ring[2]});

    tris_.clear();
    for (const auto& v : out) tris_.push_back({v, {-1, -1, -1}});
    std::unordered_map<std::uint64_t, std::pair<int, int>> owner;
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      for (int k = 0; k < 3; ++k) {
        const int u = tris_[t].v[(k + 1) % 3], w = tris_[t].v[(k + 2) % 3];
        auto it = owner.find(edge_key(u, w));
        if (it == owner.end()) {
          owner.emplace(edge_key(u, w), std::make_pair(static_cast<int>(t), k));
        } else {
          tris_[t].nb[k] = it->second.first;
          tris_[it->second.first].nb[it->second.second] = static_cast<int>(t);
        }
      }
    }
  }

  // Link the fresh triangles to each other and to the given outer triangles.
  void connect(const std::vector<int>& fresh, const std::vector<int>& outer) {
    for (int f : fresh) {
      for (int k = 0; k < 3; ++k) {
        const int u = tris_[f].v[(k + 1) % 3], w = tris_[f].v[(k + 2) % 3];
        int found = -1;
        for (int g : fresh) {
          if (g != f && find_edge(tris_[g], w, u) >= 0) { found = g; break; }
        }
        if (found < 0) {
          for (int o : outer) {
            if (o < 0) continue;
            const int ko = find_edge(tris_[o], w, u);
            if (ko >= 0) {
              found = o;
              tris_[o].nb[ko] = f;
              break;
            }
          }
        }
        tris_[f].nb[k] = found;
      }
    }
  }

  double incircle(int t, Vec2 d) const {
    const Vec2 a = P(tris_[t].v[0]) - d, b = P(tris_[t].v[1]) - d, c = P(tris_[t].v[2]) - d;
    const double a2 = a.squared_norm(), b2 = b.squared_norm(), c2 = c.squared_norm();
    const double det = a2 * cross(b, c) - b2 * cross(a, c) + c2 * cross(a, b);
    const double perm = a2 * std::abs(cross(b, c)) + b2 * std::abs(cross(a, c)) + c2 * std::abs(cross(a, b));
    return det > 1e-11 * perm ? det : 0.0;
  }

  // Flip edge k of t if it is not Delaunay; returns the partner triangle or -1.
  int try_flip(int t, int k) {
    const int n = tris_[t].nb[k];
    if (n < 0) return -1;
    const int a = tris_[t].v[k], b = tris_[t].v[(k + 1) % 3], c = tris_[t].v[(k + 2) % 3];
    if (is_segment(b, c)) return -1;
    const int kn = find_edge(tris_[n], c, b);
    const int d = tris_[n].v[kn];
    if (!(incircle(t, P(d)) > 0)) return -1;
    const double eps = 1e-14 * scale_ * scale_;
    if (orient(P(a), P(b), P(d)) <= eps || orient(P(a), P(d), P(c)) <= eps) return -1;
    const std::vector<int> outer = {tris_[t].nb[(k + 1) % 3], tris_[t].nb[(k + 2) % 3],
                                    tris_[n].nb[(kn + 1) % 3], tris_[n].nb[(kn + 2) % 3]};
    tris_[t].v = {a, b, d};
    tris_[n].v = {a, d, c};
    connect({t, n}, outer);
    return n;
  }

  void make_delaunay() {
    std::vector<int> stack(tris_.size());
    for (std::size_t t = 0; t < tris_.size(); ++t) stack[t] = static_cast<int>(t);
    std::size_t flips = 0;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k) {
        const int n = try_flip(t, k);
        if (n >= 0) {
          if (++flips > 50'000'000) throw MeshError("Delaunay flipping did not terminate");
          stack.push_back(t);
          stack.push_back(n);
          for (int j = 0; j < 3; ++j) {
            if (tris_[t].nb[j] >= 0) stack.push_back(tris_[t].nb[j]);
            if (tris_[n].nb[j] >= 0) stack.push_back(tris_[n].nb[j]);
          }
          break;
        }
      }
    }
  }

  void legalize(int pv, std::vector<int> stack) {
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      int i = -1;
      for (int k = 0; k < 3; ++k)
        if (tris_[t].v[k] == pv) i = k;
      if (i < 0) continue;
      const int n = try_flip(t, i);
      if (n >= 0) {
        stack.push_back(t);
        stack.push_back(n);
      }
    }
  }

  int add_point(Vec2 p, bool corner = false) {
    pts_.push_back(p);
    corner_.push_back(corner ? 1 : 0);
    return static_cast<int>(pts_.size()) - 1;
  }

  void insert_in_triangle(int t, Vec2 p) {
    const int pv = add_point(p);
    const Tri old = tris_[t];
    const int a = old.v[0], b = old.v[1], c = old.v[2];
    const int t1 = static_cast<int>(tris_.size()), t2 = t1 + 1;
    tris_[t].v = {a, b, pv};
    tris_.push_back({{b, c, pv}, {-1, -1, -1}});
    tris_.push_back({{c, a, pv}, {-1, -1, -1}});
    connect({t, t1, t2}, {old.nb[0], old.nb[1], old.nb[2]});
    legalize(pv, {t, t1, t2});
  }

  void split_edge(int t, int k, Vec2 p) {
    const int pv = add_point(p);
    const Tri T = tris_[t];
    const int a = T.v[k], u = T.v[(k + 1) % 3], w = T.v[(k + 2) % 3];
    const int n = T.nb[k];
    std::vector<int> outer = {T.nb[(k + 1) % 3], T.nb[(k + 2) % 3]};
    std::vector<int> fresh = {t};
    tris_[t].v = {a, u, pv};
    fresh.push_back(static_cast<int>(tris_.size()));
    tris_.push_back({{a, pv, w}, {-1, -1, -1}});
    if (n >= 0) {
      const Tri N = tris_[n];
      const int kn = find_edge(N, w, u);
      const int d = N.v[kn];
      outer.push_back(N.nb[(kn + 1) % 3]);
      outer.push_back(N.nb[(kn + 2) % 3]);
      tris_[n].v = {d, w, pv};
      fresh.push_back(n);
      fresh.push_back(static_cast<int>(tris_.size()));
      tris_.push_back({{d, pv, u}, {-1, -1, -1}});
    }
    if (segments_.erase(edge_key(u, w))) {
      segments_.insert(edge_key(u, pv));
      segments_.insert(edge_key(pv, w));
    }
    connect(fresh, outer);
    legalize(pv, fresh);
  }

  void split_segment(int t, int k) {
    const int u = tris_[t].v[(k + 1) % 3], w = tris_[t].v[(k + 2) % 3];
    const Vec2 pu = P(u), pw = P(w);
    const double len = distance(pu, pw);
    double frac = 0.5;
    // Concentric shells around input corners keep small-angle corners from cascading.
    if (corner_[u] != corner_[w]) {
      const double d = std::exp2(std::round(std::log2(0.5 * len)));
      const double f = d / len;
      if (f > 0.3 && f < 0.7) frac = corner_[u] ? f : 1.0 - f;
    }
    split_edge(t, k, pu + (pw - pu) * frac);
  }

  Location locate(Vec2 p, int start) const {
    if (start < 0 || start >= static_cast<int>(tris_.size())) start = 0;
    int t = start;
    const std::size_t limit = 4 * tris_.size() + 64;
    for (std::size_t step = 0; step < limit; ++step) {
      const Tri& T = tris_[t];
      int move = -1;
      for (int j = 0; j < 3; ++j) {
        const int k = static_cast<int>((j + step) % 3);
        const Vec2 a = P(T.v[(k + 1) % 3]), b = P(T.v[(k + 2) % 3]);
        if (orient(a, b, p) < -1e-12 * distance(a, b) * scale_) {
          move = k;
          break;
        }
      }
      if (move < 0) return classify(t, p);
      if (T.nb[move] < 0 || is_segment_edge(t, move)) return {Where::Blocked, t, move};
      t = T.nb[move];
    }
    return {};
  }

  Location classify(int t, Vec2 p) const {
    const Tri& T = tris_[t];
    for (int k = 0; k < 3; ++k) {
      if (distance(P(T.v[k]), p) <= 1e-9 * h_) return {Where::OnVertex, t, k};
    }
    for (int k = 0; k < 3; ++k) {
      const Vec2 a = P(T.v[(k + 1) % 3]), b = P(T.v[(k + 2) % 3]);
      if (std::abs(orient(a, b, p)) <= 1e-10 * distance(a, b) * h_) return {Where::OnEdge, t, k};
    }
    return {Where::Inside, t, -1};
  }

  Location brute_locate(Vec2 p) const {
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      const Tri& T = tris_[t];
      bool in = true;
      for (int k = 0; k < 3 && in; ++k) {
        const Vec2 a = P(T.v[(k + 1) % 3]), b = P(T.v[(k + 2) % 3]);
        if (orient(a, b, p) < -1e-12 * distance(a, b) * scale_) in = false;
      }
      if (in) return classify(static_cast<int>(t), p);
    }
    return {};
  }

  // > 0 when the triangle violates the size or angle target.
  double badness(int t) const {
    const Tri& T = tris_[t];
    const Vec2 a = P(T.v[0]), b = P(T.v[1]), c = P(T.v[2]);
    const double la = distance(b, c), lb = distance(c, a), lc = distance(a, b);
    const double area2 = orient(a, b, c);
    const double r = la * lb * lc / (2.0 * area2);
    const double shortest = std::min({la, lb, lc});
    // r / shortest > 1 / (2 sin theta_min) <=> smallest angle below theta_min.
    const double ratio = r / shortest * 2.0 * std::sin(min_angle_ * 1.0005);
    const double size = r / h_;
    if (ratio > 1.0) return ratio;
    if (size > 1.0) return size;
    return 0.0;
  }

  bool encroaches(int u, int w, Vec2 p) const {
    const Vec2 m = (P(u) + P(w)) * 0.5;
    return distance(m, p) < 0.5 * distance(P(u), P(w)) * (1.0 - 1e-9);
  }

  void fix(int t) {
    const Tri& T = tris_[t];
    const Vec2 c = circumcenter(P(T.v[0]), P(T.v[1]), P(T.v[2]));
    Location loc = locate(c, t);
    if (loc.where == Where::Lost) loc = brute_locate(c);
    if (loc.where == Where::Blocked) {
      split_segment(loc.tri, loc.index);
      return;
    }
    if (loc.where == Where::Lost) {
      // Circumcenter outside the domain without a blocking segment on the walk: split the
      // longest segment of t if any, else give up on this triangle.
      for (int k = 0; k < 3; ++k) {
        if (is_segment_edge(t, k)) {
          split_segment(t, k);
          return;
        }
      }
      return;
    }
    // Encroachment on segments near the insertion point.
    std::vector<int> near = {loc.tri};
    for (int k = 0; k < 3; ++k)
      if (tris_[loc.tri].nb[k] >= 0) near.push_back(tris_[loc.tri].nb[k]);
    for (int q : near) {
      for (int k = 0; k < 3; ++k) {
        if (!is_segment_edge(q, k)) continue;
        if (encroaches(tris_[q].v[(k + 1) % 3], tris_[q].v[(k + 2) % 3], c)) {
          split_segment(q, k);
          return;
        }
      }
    }
    switch (loc.where) {
      case Where::Inside: insert_in_triangle(loc.tri, c); break;
      case Where::OnEdge:
        if (is_segment_edge(loc.tri, loc.index)) split_segment(loc.tri, loc.index);
        else split_edge(loc.tri, loc.index, c);
        break;
      default: break;
    }
  }
};

}  // namespace

TriMesh triangulate(const Polygon& polygon, double h, const MeshOptions& options) {
  if (!(h > 0.0)) throw ParameterError("triangulate needs h > 0");
  const double min_corner = min_interior_angle(polygon) * 180.0 / std::numbers::pi;
  if (min_corner < options.min_angle_deg) {
    std::ostringstream os;
    os << "polygon corner angle " << min_corner << " deg is below the " << options.min_angle_deg
       << " deg triangle quality bound; no conforming mesh can meet it";
    throw MeshError(os.str());
  }
  const double a = area(polygon);
  const double expected = a / (0.4330127018922193 * h * h) + perimeter(polygon) / h + 16.0;
  Refiner refiner(polygon, h, options.min_angle_deg);
  refiner.seed_interior(polygon);
  refiner.refine(static_cast<std::size_t>(options.vertex_budget_factor * expected));
  TriMesh mesh = refiner.extract(options.cone);
  const double worst = mesh.min_angle_degrees();
  if (worst < options.min_angle_deg - 1e-9) {
    std::ostringstream os;
    os << "mesh quality target missed: min angle " << worst << " deg < " << options.min_angle_deg;
    throw MeshError(os.str());
  }
  return mesh;
}

}  // namespace abplab
