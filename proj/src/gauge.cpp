#include "abplab/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace abplab {

namespace {

double wrap_angle(double t) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  t = std::fmod(t, two_pi);
  if (t < 0) t += two_pi;
  return t;
}

}  // namespace

Gauge Gauge::euclidean() {
  Gauge g;
  g.euclidean_ = true;
  return g;
}

Gauge Gauge::from_samples(const std::vector<std::pair<Vec2, double>>& input) {
  if (input.size() < 3) throw GaugeError("gauge needs at least 3 samples");
  Gauge g;
  for (const auto& [dir, value] : input) {
    const double len = dir.norm();
    if (!(len > 0) || !std::isfinite(value)) throw GaugeError("invalid gauge sample");
    const Vec2 u = dir / len;
    g.samples_.push_back({wrap_angle(std::atan2(u.y, u.x)), u, value / len});
  }
  std::sort(g.samples_.begin(), g.samples_.end(),
            [](const Sample& a, const Sample& b) { return a.angle < b.angle; });
  for (std::size_t i = 0; i < g.samples_.size(); ++i) {
    const Sample& a = g.samples_[i];
    const Sample& b = g.samples_[(i + 1) % g.samples_.size()];
    double gap = b.angle - a.angle;
    if (i + 1 == g.samples_.size()) gap += 2.0 * std::numbers::pi;
    if (gap <= 1e-14) throw GaugeError("duplicate gauge sample directions");
    if (gap >= std::numbers::pi) throw GaugeError("gauge samples leave an angular gap >= pi");
  }
  return g;
}

Gauge Gauge::from_function(const std::function<double(Vec2)>& f, int count) {
  if (count < 3) throw GaugeError("gauge needs at least 3 samples");
  std::vector<std::pair<Vec2, double>> s;
  s.reserve(count);
  for (int k = 0; k < count; ++k) {
    const Vec2 u = unit_direction(2.0 * std::numbers::pi * k / count);
    s.emplace_back(u, f(u));
  }
  return from_samples(s);
}

Gauge Gauge::l1(int count) {
  return from_function([](Vec2 v) { return std::abs(v.x) + std::abs(v.y); }, count);
}

Gauge Gauge::linf(int count) {
  return from_function([](Vec2 v) { return std::max(std::abs(v.x), std::abs(v.y)); }, count);
}

Gauge Gauge::support_of(const Polygon& body, int count) {
  return from_function([&](Vec2 v) { return support_function(body, v); }, count);
}

double Gauge::operator()(Vec2 nu) const {
  const double len = nu.norm();
  if (len == 0.0) return 0.0;
  if (euclidean_) return len;
  const double t = wrap_angle(std::atan2(nu.y, nu.x));
  // First sample with angle > t; the bracketing pair is (k-1, k) cyclically.
  auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                             [](double v, const Sample& s) { return v < s.angle; });
  const std::size_t n = samples_.size();
  const std::size_t k = static_cast<std::size_t>(it - samples_.begin()) % n;
  const Sample& hi = samples_[k];
  const Sample& lo = samples_[(k + n - 1) % n];
  // nu = a lo.dir + b hi.dir
  const double det = cross(lo.direction, hi.direction);
  const double a = cross(nu, hi.direction) / det;
  const double b = cross(lo.direction, nu) / det;
  return a * lo.value + b * hi.value;
}

std::vector<Vec2> Gauge::directions(int fallback_count) const {
  std::vector<Vec2> d;
  if (euclidean_) {
    for (int k = 0; k < fallback_count; ++k) d.push_back(unit_direction(2.0 * std::numbers::pi * k / fallback_count));
  } else {
    for (const Sample& s : samples_) d.push_back(s.direction);
  }
  return d;
}

GaugeReport gauge_check(const Gauge& gauge) {
  GaugeReport r;
  const std::vector<Vec2> dirs = gauge.directions(256);
  std::vector<double> values(dirs.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    values[i] = gauge(dirs[i]);
    scale = std::max(scale, std::abs(values[i]));
    r.worst_negativity = std::max(r.worst_negativity, -values[i]);
    if (std::abs(values[i]) <= 1e-14) r.degenerate = true;
    for (double t : {0.5, 2.0, 7.0}) {
      r.worst_homogeneity = std::max(r.worst_homogeneity, std::abs(gauge(dirs[i] * t) - t * values[i]));
    }
  }
  r.worst_sublinearity = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i; j < dirs.size(); ++j) {
      const double v = gauge(dirs[i] + dirs[j]) - values[i] - values[j];
      if (v > r.worst_sublinearity) {
        r.worst_sublinearity = v;
        r.witness_a = dirs[i];
        r.witness_b = dirs[j];
      }
    }
  }
  const double tol = 1e-12 * std::max(1.0, scale);
  r.pass = r.worst_sublinearity <= tol && r.worst_negativity <= tol && r.worst_homogeneity <= tol;
  return r;
}

WulffShape wulff_shape(const Gauge& gauge, int count) {
  std::vector<Vec2> dirs;
  if (count > 0) {
    for (int k = 0; k < count; ++k) dirs.push_back(unit_direction(2.0 * std::numbers::pi * k / count));
  } else {
    dirs = gauge.directions(512);
  }
  double hmax = 0.0;
  for (Vec2 d : dirs) {
    const double h = gauge(d);
    if (h < -1e-12) throw GaugeError("negative gauge value; Wulff shape is empty");
    hmax = std::max(hmax, h);
  }
  if (!(hmax > 0.0)) throw GaugeError("gauge vanishes on every direction; Wulff shape is a point");
  const double box = 4.0 * hmax + 1.0;
  std::vector<Vec2> poly = {{-box, -box}, {box, -box}, {box, box}, {-box, box}};
  for (Vec2 d : dirs) {
    auto clipped = clip_half_plane(poly, d, std::max(0.0, gauge(d)));
    if (!clipped) throw GaugeError("Wulff shape has empty interior");
    poly = std::move(*clipped);
  }
  std::vector<Vec2> merged;
  for (Vec2 p : poly) {
    if (merged.empty() || distance(merged.back(), p) > 1e-10 * box) merged.push_back(p);
  }
  while (merged.size() > 1 && distance(merged.front(), merged.back()) <= 1e-10 * box) merged.pop_back();
  std::vector<Vec2> clean;
  const std::size_t n = merged.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 prev = merged[(i + n - 1) % n], cur = merged[i], next = merged[(i + 1) % n];
    if (std::abs(orient(prev, cur, next)) > 1e-12 * distance(prev, cur) * distance(cur, next)) clean.push_back(cur);
  }
  bool degenerate = false;
  for (Vec2 p : clean) {
    if (std::max(std::abs(p.x), std::abs(p.y)) >= box * (1.0 - 1e-12)) degenerate = true;
  }
  if (clean.size() < 3) throw GaugeError("Wulff shape has empty interior");
  return WulffShape{Polygon(std::move(clean)), gauge, degenerate};
}

double support_function(const Polygon& polygon, Vec2 nu) {
  double best = -std::numeric_limits<double>::infinity();
  for (Vec2 v : polygon.vertices()) best = std::max(best, dot(v, nu));
  return best;
}

}  // namespace abplab
