#include "abplab/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace abplab::quadrature {

const LineRule& gauss_legendre5() {
  static const LineRule rule = [] {
    // Nodes/weights on [-1, 1], mapped to [0, 1].
    const double x1 = 0.5384693101056831, x2 = 0.9061798459386640;
    const double w0 = 0.5688888888888889, w1 = 0.4786286704993665, w2 = 0.2369268850561891;
    LineRule r{};
    const double xs[5] = {-x2, -x1, 0.0, x1, x2};
    const double ws[5] = {w2, w1, w0, w1, w2};
    for (int i = 0; i < 5; ++i) {
      r.nodes[i] = 0.5 * (xs[i] + 1.0);
      r.weights[i] = 0.5 * ws[i];
    }
    return r;
  }();
  return rule;
}

const TriangleRule& triangle6() {
  static const TriangleRule rule = [] {
    TriangleRule r{};
    const double a1 = 0.445948490915965, b1 = 1.0 - 2.0 * a1, w1 = 0.223381589678011;
    const double a2 = 0.091576213509771, b2 = 1.0 - 2.0 * a2, w2 = 0.109951743655322;
    r.barycentric = {{{b1, a1, a1}, {a1, b1, a1}, {a1, a1, b1}, {b2, a2, a2}, {a2, b2, a2}, {a2, a2, b2}}};
    r.weights = {w1, w1, w1, w2, w2, w2};
    return r;
  }();
  return rule;
}

double integrate_segment(Vec2 a, Vec2 b, const std::function<double(Vec2)>& f) {
  const auto& rule = gauss_legendre5();
  const double len = distance(a, b);
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += rule.weights[i] * f(a + (b - a) * rule.nodes[i]);
  return s * len;
}

double integrate_triangle(Vec2 a, Vec2 b, Vec2 c, const std::function<double(Vec2)>& f, int levels) {
  if (levels > 0) {
    const Vec2 ab = (a + b) * 0.5, bc = (b + c) * 0.5, ca = (c + a) * 0.5;
    return integrate_triangle(a, ab, ca, f, levels - 1) + integrate_triangle(ab, b, bc, f, levels - 1) +
           integrate_triangle(ca, bc, c, f, levels - 1) + integrate_triangle(ab, bc, ca, f, levels - 1);
  }
  const auto& rule = triangle6();
  const double area = 0.5 * std::abs(orient(a, b, c));
  double s = 0.0;
  for (int q = 0; q < 6; ++q) {
    const auto& l = rule.barycentric[q];
    s += rule.weights[q] * f(a * l[0] + b * l[1] + c * l[2]);
  }
  return s * area;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) { p1 = x; p0 = 1.0; }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

}  // namespace abplab::quadrature
