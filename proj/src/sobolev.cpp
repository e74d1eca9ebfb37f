#include "abplab/sobolev.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace abplab {

namespace {

// Smooth step: 0 for s <= 0, 1 for s >= 1.
double smooth_step(double s, double* derivative) {
  if (s <= 0.0 || s >= 1.0) {
    if (derivative) *derivative = 0.0;
    return s <= 0.0 ? 0.0 : 1.0;
  }
  const double a = std::exp(-1.0 / s), b = std::exp(-1.0 / (1.0 - s));
  if (derivative) {
    const double da = a / (s * s), db = b / ((1.0 - s) * (1.0 - s));
    *derivative = (da * (a + b) - a * (da - db)) / ((a + b) * (a + b));
  }
  return a / (a + b);
}

}  // namespace

double TestFunction::value(Vec2 x) const {
  if (kind == Kind::Bump) {
    const double t = distance(x, center) / radius;
    if (t >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
  }
  const double r = x.norm() / radius;
  return smooth_step((1.0 + width - r) / (2.0 * width), nullptr);
}

Vec2 TestFunction::gradient(Vec2 x) const {
  if (kind == Kind::Bump) {
    const Vec2 d = x - center;
    const double dist = d.norm();
    const double t = dist / radius;
    if (t >= 1.0 || dist == 0.0) return {0.0, 0.0};
    const double q = 1.0 - t * t;
    const double psi = std::exp(1.0 - 1.0 / q);
    const double dpsi = psi * (-2.0 * t / (q * q));
    return d * (dpsi / (dist * radius));
  }
  const double n = x.norm();
  if (n == 0.0) return {0.0, 0.0};
  double ds = 0.0;
  smooth_step((1.0 + width - n / radius) / (2.0 * width), &ds);
  return x * (-ds / (2.0 * width * radius * n));
}

double TestFunction::support_radius() const {
  if (kind == Kind::Bump) return center.norm() + radius;
  return radius * (1.0 + width);
}

TestFunction TestFunction::dilated(double t) const {
  TestFunction f = *this;
  f.center = center * t;
  f.radius = radius * t;
  return f;
}

std::vector<TestFunction> random_bumps(const ConvexCone& cone, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<TestFunction> out;
  for (int k = 0; k < count; ++k) {
    TestFunction f;
    f.center = sample_cone_ball(cone, rng, 0.0);
    f.radius = rng.uniform(0.15, 0.8);
    out.push_back(f);
  }
  return out;
}

TestFunction mollified_ball_indicator(double radius, double width) {
  TestFunction f;
  f.kind = TestFunction::Kind::MollifiedIndicator;
  f.radius = radius;
  f.width = width;
  return f;
}

SobolevEntry sobolev_quotient(const HomogeneousWeight& w, const ConvexCone& cone, double p, const TestFunction& f,
                              int radial_nodes, int angular_nodes) {
  const double D = 2.0 + w.degree();
  if (!(p >= 1.0 && p < D)) {
    std::ostringstream os;
    os << "Sobolev exponent p = " << p << " must satisfy 1 <= p < D = " << D;
    throw ParameterError(os.str());
  }
  const double p_star = p * D / (D - p);
  const double lo = cone.is_full() ? 0.0 : cone.theta_lo();
  const double hi = cone.is_full() ? 2.0 * std::numbers::pi : cone.theta_hi();
  const double R = f.support_radius();
  const double dr = R / radial_nodes, dt = (hi - lo) / angular_nodes;
  double num = 0.0, den = 0.0;
  for (int j = 0; j < angular_nodes; ++j) {
    const Vec2 dir = unit_direction(lo + (j + 0.5) * dt);
    for (int i = 0; i < radial_nodes; ++i) {
      const double r = (i + 0.5) * dr;
      const Vec2 x = dir * r;
      const double u = f.value(x);
      const Vec2 g = f.gradient(x);
      if (u == 0.0 && g.x == 0.0 && g.y == 0.0) continue;
      const double wr = w(x) * r;
      num += std::pow(std::abs(u), p_star) * wr;
      den += std::pow(g.norm(), p) * wr;
    }
  }
  num *= dr * dt;
  den *= dr * dt;
  SobolevEntry e;
  e.function = f;
  e.numerator = std::pow(num, 1.0 / p_star);
  e.denominator = std::pow(den, 1.0 / p);
  e.quotient = e.denominator > 0.0 ? e.numerator / e.denominator : 0.0;
  return e;
}

SobolevReport sobolev_check(const HomogeneousWeight& w, const ConvexCone& cone, double p,
                            const std::vector<TestFunction>& family) {
  SobolevReport r;
  r.p = p;
  r.D = 2.0 + w.degree();
  if (!(p >= 1.0 && p < r.D)) {
    std::ostringstream os;
    os << "Sobolev exponent p = " << p << " must satisfy 1 <= p < D = " << r.D;
    throw ParameterError(os.str());
  }
  r.p_star = p * r.D / (r.D - p);
  if (p == 1.0) {
    const Polygon ball = cone.is_full() ? regular_ngon(2048, 1.0)
                                        : sector_polygon(cone.theta_lo(), cone.theta_hi(), 1.0, 2048);
    r.c1 = 1.0 / (r.D * std::pow(weighted_measure(ball, w), 1.0 / r.D));
  }
  for (const TestFunction& f : family) {
    SobolevEntry e = sobolev_quotient(w, cone, p, f);
    if (p == 1.0 && e.quotient > r.c1) {
      e.violation = true;
      ++r.violations;
    }
    r.max_quotient = std::max(r.max_quotient, e.quotient);
    r.entries.push_back(e);
  }
  r.pass = r.violations == 0 && std::isfinite(r.max_quotient);
  return r;
}

}  // namespace abplab
