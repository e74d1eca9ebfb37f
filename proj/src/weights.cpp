#include "abplab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "abplab/quadrature.hpp"

namespace abplab {

namespace {

double pos_pow(double x, double a) {
  if (a == 0.0) return 1.0;
  return x > 0.0 ? std::pow(x, a) : 0.0;
}

std::string format_exponent(double a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

}  // namespace

ConvexCone monomial_cone(double a1, double a2) {
  if (a1 > 0.0 && a2 > 0.0) return ConvexCone::quadrant();
  if (a2 > 0.0) return ConvexCone::half_plane();
  if (a1 > 0.0) return ConvexCone::sector(-1.5707963267948966, 1.5707963267948966);
  return ConvexCone::full_plane();
}

HomogeneousWeight HomogeneousWeight::constant(double value, ConvexCone cone) {
  if (!(value > 0.0) || !std::isfinite(value)) throw WeightError("constant weight must be positive");
  std::ostringstream os;
  os << value;
  HomogeneousWeight w(Kind::Constant, os.str(), 0.0, cone);
  w.c_ = value;
  return w;
}

HomogeneousWeight HomogeneousWeight::monomial(double a1, double a2) {
  return monomial(a1, a2, monomial_cone(a1, a2));
}

HomogeneousWeight HomogeneousWeight::monomial(double a1, double a2, ConvexCone cone) {
  if (!(a1 >= 0.0) || !(a2 >= 0.0) || !std::isfinite(a1) || !std::isfinite(a2))
    throw WeightError("monomial exponents must be finite and nonnegative");
  const ConvexCone natural = monomial_cone(a1, a2);
  if (!natural.is_full()) {
    if (cone.is_full() || !natural.contains_closed(cone.lo_ray(), 1e-12) ||
        !natural.contains_closed(cone.hi_ray(), 1e-12))
      throw WeightError("monomial weight is not positive on the requested cone");
  }
  std::string name = "x^" + format_exponent(a1) + " y^" + format_exponent(a2);
  HomogeneousWeight w(a1 == 0.0 && a2 == 0.0 ? Kind::Constant : Kind::Monomial, name, a1 + a2, cone);
  w.a1_ = a1;
  w.a2_ = a2;
  return w;
}

HomogeneousWeight HomogeneousWeight::radial_power(double beta, ConvexCone cone) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw WeightError("radial power must be nonnegative");
  HomogeneousWeight w(Kind::RadialPower, "|x|^" + format_exponent(beta), beta, cone);
  w.a1_ = beta;
  return w;
}

HomogeneousWeight HomogeneousWeight::custom(std::string name, double degree, ConvexCone cone, Function f,
                                            Gradient grad) {
  if (!f || !grad) throw WeightError("custom weight needs both a value and a gradient function");
  if (!(degree >= 0.0)) throw WeightError("custom weight degree must be nonnegative");
  HomogeneousWeight w(Kind::Custom, std::move(name), degree, cone);
  w.f_ = std::move(f);
  w.grad_ = std::move(grad);
  return w;
}

double HomogeneousWeight::operator()(Vec2 x) const {
  switch (kind_) {
    case Kind::Constant: return c_;
    case Kind::Monomial: return pos_pow(x.x, a1_) * pos_pow(x.y, a2_);
    case Kind::RadialPower: return a1_ == 0.0 ? 1.0 : std::pow(x.norm(), a1_);
    case Kind::Custom: return f_(x);
  }
  return 0.0;
}

Vec2 HomogeneousWeight::gradient(Vec2 x) const {
  switch (kind_) {
    case Kind::Constant: return {0.0, 0.0};
    case Kind::Monomial: {
      const double gx = a1_ == 0.0 ? 0.0 : a1_ * pos_pow(x.x, a1_ - 1.0) * pos_pow(x.y, a2_);
      const double gy = a2_ == 0.0 ? 0.0 : a2_ * pos_pow(x.x, a1_) * pos_pow(x.y, a2_ - 1.0);
      return {gx, gy};
    }
    case Kind::RadialPower: {
      if (a1_ == 0.0) return {0.0, 0.0};
      const double r = x.norm();
      return x * (a1_ * std::pow(r, a1_ - 2.0));
    }
    case Kind::Custom: return grad_(x);
  }
  return {0.0, 0.0};
}

bool HomogeneousWeight::vanishes_on_cone_boundary() const {
  if (cone_.is_full()) return false;
  for (double r : {0.25, 1.0, 4.0}) {
    if (std::abs((*this)(cone_.lo_ray() * r)) > 1e-14) return false;
    if (std::abs((*this)(cone_.hi_ray() * r)) > 1e-14) return false;
  }
  return true;
}

Vec2 sample_cone_ball(const ConvexCone& cone, Rng& rng, double margin) {
  for (;;) {
    Vec2 p;
    if (cone.is_full()) {
      p = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      if (p.squared_norm() > 1.0) continue;
    } else {
      const double t = rng.uniform(cone.theta_lo(), cone.theta_hi());
      p = unit_direction(t) * std::sqrt(rng.uniform());
    }
    if (p.norm() < margin) continue;
    if (!cone.is_full() && cone.distance_to_boundary(p) < margin) continue;
    return p;
  }
}

WeightCheckReport concavity_check(const HomogeneousWeight& w, int pairs, std::uint64_t seed, double margin,
                                  const ConvexCone* cone) {
  const ConvexCone& sigma = cone ? *cone : w.cone();
  WeightCheckReport report;
  const double alpha = w.degree();
  if (alpha == 0.0) {
    report.vacuous = true;
    report.pass = true;
    return report;
  }
  Rng rng(seed);
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < pairs; ++k) {
    const Vec2 x = sample_cone_ball(sigma, rng, margin);
    const Vec2 z = sample_cone_ball(sigma, rng, margin);
    const double wx = w(x), wz = w(z);
    if (!(wx > 0.0) || !(wz > 0.0)) {
      std::ostringstream os;
      os << "weight " << w.name() << " is not positive at (" << (wx > 0.0 ? z.x : x.x) << ", "
         << (wx > 0.0 ? z.y : x.y) << ")";
      throw WeightError(os.str());
    }
    const double lhs = alpha * std::pow(wz / wx, 1.0 / alpha);
    const double rhs = dot(w.gradient(x), z) / wx;
    const double v = lhs - rhs;
    if (v > report.max_violation) {
      report.max_violation = v;
      report.witness_x = x;
      report.witness_z = z;
    }
    ++report.samples;
  }
  report.pass = report.max_violation <= 1e-9;
  return report;
}

WeightCheckReport homogeneity_check(const HomogeneousWeight& w, int samples, std::uint64_t seed) {
  WeightCheckReport report;
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) {
    const Vec2 x = sample_cone_ball(w.cone(), rng, 1e-3);
    const double wx = w(x);
    for (double t : {0.5, 2.0, 7.0}) {
      const double expect = std::pow(t, w.degree()) * wx;
      const double err = std::abs(w(x * t) - expect) / std::abs(expect);
      if (!(err <= report.max_violation)) {
        report.max_violation = std::isnan(err) ? std::numeric_limits<double>::infinity() : err;
        report.witness_x = x;
        report.witness_z = x * t;
      }
    }
    ++report.samples;
  }
  report.pass = report.max_violation <= 1e-10;
  return report;
}

double weighted_measure(const TriMesh& mesh, const HomogeneousWeight& w) {
  const ConvexCone& cone = w.cone();
  double scale = 0.0;
  for (Vec2 v : mesh.vertices()) scale = std::max(scale, v.norm());
  const double tol = 1e-9 * std::max(scale, 1.0);
  if (!cone.is_full()) {
    for (Vec2 v : mesh.vertices()) {
      if (!cone.contains_closed(v, tol)) {
        std::ostringstream os;
        os << "mesh vertex (" << v.x << ", " << v.y << ") lies outside the weight's cone";
        throw GeometryError(os.str());
      }
    }
  }
  const auto f = [&](Vec2 p) { return w(p); };
  const auto& rule = quadrature::triangle6();
  double total = 0.0;
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles()[t];
    const Vec2 a = mesh.vertex(tri[0]), b = mesh.vertex(tri[1]), c = mesh.vertex(tri[2]);
    if (w.is_constant()) {
      total += w(a) * mesh.triangle_area(static_cast<int>(t));
      continue;
    }
    bool touches = false;
    if (!cone.is_full()) {
      for (Vec2 v : {a, b, c}) touches = touches || cone.distance_to_boundary(v) <= tol;
    } else {
      for (Vec2 v : {a, b, c}) touches = touches || v.norm() <= tol;
    }
    if (touches) {
      total += quadrature::integrate_triangle(a, b, c, f, 1);
    } else {
      const double area = mesh.triangle_area(static_cast<int>(t));
      double s = 0.0;
      for (int q = 0; q < 6; ++q) {
        const auto& l = rule.barycentric[q];
        s += rule.weights[q] * w(a * l[0] + b * l[1] + c * l[2]);
      }
      total += s * area;
    }
  }
  return total;
}

double weighted_measure(const Polygon& polygon, const HomogeneousWeight& w, int levels) {
  if (!w.cone().is_full()) {
    const double tol = 1e-9 * std::max(1.0, diameter(polygon));
    for (Vec2 v : polygon.vertices()) {
      if (!w.cone().contains_closed(v, tol)) {
        std::ostringstream os;
        os << "polygon vertex (" << v.x << ", " << v.y << ") lies outside the weight's cone";
        throw GeometryError(os.str());
      }
    }
  }
  if (w.is_constant()) return w(polygon.vertex(0)) * area(polygon);
  return integrate_polygon(polygon, [&](Vec2 p) { return w(p); }, levels);
}

}  // namespace abplab
