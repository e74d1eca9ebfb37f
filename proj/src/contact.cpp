#include "abplab/contact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abplab {

CertificateLink make_link(std::string name, double lhs, double rhs, double slack, std::string note) {
  CertificateLink link{std::move(name), lhs, rhs, slack, false, std::move(note)};
  link.pass = lhs <= rhs + slack;
  return link;
}

bool Certificate::all_pass() const {
  if (halted) return false;
  return std::all_of(links.begin(), links.end(), [](const CertificateLink& l) { return l.pass; });
}

const CertificateLink* Certificate::find(const std::string& name) const {
  for (const auto& l : links)
    if (l.name == name) return &l;
  return nullptr;
}

double ContactSet::area() const {
  double s = 0.0;
  for (double a : areas) s += a;
  return s;
}

double default_contact_epsilon(const ScalarField& u) {
  const double h = u.mesh().h();
  return 4.0 * h * h * u.max_abs_hessian();
}

ContactSet lower_contact_set(const ScalarField& u, std::optional<double> epsilon) {
  const TriMesh& m = u.mesh();
  const int n = static_cast<int>(m.vertex_count());
  ContactSet gamma;
  gamma.epsilon = epsilon ? *epsilon : default_contact_epsilon(u);
  const auto& xs = m.vertices();
  const auto& vals = u.values();
  for (int i = 0; i < n; ++i) {
    const Vec2 p = u.vertex_gradients()[i];
    const double base = vals[i] - dot(p, xs[i]) - gamma.epsilon;
    bool below = true;
    for (int y = 0; y < n && below; ++y) below = vals[y] - dot(p, xs[y]) >= base;
    if (!below) continue;
    gamma.members.push_back(i);
    gamma.gradients.push_back(p);
    gamma.hessians.push_back(u.vertex_hessians()[i]);
    gamma.areas.push_back(m.vertex_areas()[i]);
  }
  return gamma;
}

double contact_soundness(const ScalarField& u, const ContactSet& gamma) {
  const TriMesh& m = u.mesh();
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < gamma.members.size(); ++k) {
    const int i = gamma.members[k];
    const Vec2 p = gamma.gradients[k];
    for (std::size_t y = 0; y < m.vertex_count(); ++y) {
      const double plane = u.value(i) + dot(p, m.vertex(static_cast<int>(y)) - m.vertex(i));
      worst = std::max(worst, plane - u.value(static_cast<int>(y)));
    }
  }
  return worst;
}

int legendre_argmin(const ScalarField& u, Vec2 p) {
  const TriMesh& m = u.mesh();
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t y = 0; y < m.vertex_count(); ++y) {
    const double v = u.value(static_cast<int>(y)) - dot(p, m.vertex(static_cast<int>(y)));
    if (v < best_val) {
      best_val = v;
      best = static_cast<int>(y);
    }
  }
  return best;
}

CoverageReport gradient_coverage(const ScalarField& u, const Polygon& target, double delta, int count,
                                 std::uint64_t seed) {
  if (!(delta >= 0.0 && delta < 1.0)) throw ParameterError("coverage shrink must lie in [0, 1)");
  if (count <= 0) throw ParameterError("coverage needs a positive sample count");
  const Polygon shrunk = scaled(target, 1.0 - delta);
  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin, xmax = -xmin, ymax = -xmin;
  for (Vec2 v : shrunk.vertices()) {
    xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
  }
  Rng rng(seed);
  CoverageReport r;
  const auto& hops = u.mesh().boundary_hops();
  while (r.samples < count) {
    const Vec2 p{rng.uniform(xmin, xmax), rng.uniform(ymin, ymax)};
    if (!contains_strictly(shrunk, p, 0.0)) continue;
    const int y = legendre_argmin(u, p);
    r.points.push_back(p);
    r.argmins.push_back(y);
    ++r.samples;
    if (hops[y] >= 2) ++r.interior;
    else r.failures.push_back(p);
  }
  r.fraction = static_cast<double>(r.interior) / r.samples;
  return r;
}

double contact_integral(const ContactSet& gamma, const std::function<double(Vec2)>& factor, const ConvexCone* filter) {
  double s = 0.0;
  for (std::size_t k = 0; k < gamma.members.size(); ++k) {
    const Vec2 p = gamma.gradients[k];
    if (filter && !filter->is_full() && !filter->contains(p)) continue;
    const double det = std::max(gamma.hessians[k].det(), 0.0);
    s += (factor ? factor(p) : 1.0) * det * gamma.areas[k];
  }
  return s;
}

AmgmReport amgm_check(const ContactSet& gamma, double tol) {
  AmgmReport r;
  r.worst_slack = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < gamma.members.size(); ++k) {
    const Sym2& H = gamma.hessians[k];
    const double half = 0.5 * H.trace();
    const double slack = H.det() - half * half;
    ++r.considered;
    if (slack > r.worst_slack) {
      r.worst_slack = slack;
      r.witness = gamma.members[k];
    }
  }
  if (r.considered == 0) r.worst_slack = 0.0;
  r.pass = r.worst_slack <= tol;
  return r;
}

AmgmReport amgm_check(const ScalarField& u, const ContactSet& gamma, const HomogeneousWeight& w, double b,
                      double tol) {
  const double D = 2.0 + w.degree();
  const double bound = std::pow(b / D, D);
  AmgmReport r;
  r.worst_slack = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < gamma.members.size(); ++k) {
    const Vec2 p = gamma.gradients[k];
    if (!w.cone().is_full() && !w.cone().contains(p)) continue;
    const Vec2 x = u.mesh().vertex(gamma.members[k]);
    const double half = 0.5 * gamma.hessians[k].trace();
    const double lhs = w(p) / w(x) * half * half;
    const double slack = (lhs - bound) / bound;
    ++r.considered;
    if (slack > r.worst_slack) {
      r.worst_slack = slack;
      r.witness = gamma.members[k];
    }
  }
  if (r.considered == 0) r.worst_slack = 0.0;
  r.pass = r.worst_slack <= tol;
  return r;
}

RigidityReport rigidity_check(const ContactSet& gamma, double b) {
  RigidityReport r;
  r.a = b / 2.0;
  if (gamma.members.empty()) return r;
  double total_area = 0.0;
  for (std::size_t k = 0; k < gamma.members.size(); ++k) {
    const Sym2& H = gamma.hessians[k];
    const double dev = Sym2{H.xx - r.a, H.xy, H.yy - r.a}.frobenius() / r.a;
    r.mean_deviation += dev * gamma.areas[k];
    total_area += gamma.areas[k];
    r.max_deviation = std::max(r.max_deviation, dev);
  }
  r.mean_deviation /= total_area;
  return r;
}

}  // namespace abplab
