#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "abplab/geometry.hpp"

namespace abplab {

/**
 * Surface tension H: nonnegative, 1-homogeneous, convex.
 *
 * Represented by values on a set of unit directions; between two angularly adjacent samples
 * d_k, d_{k+1} the value at nu = a d_k + b d_{k+1} (a, b >= 0) is a H_k + b H_{k+1}, which is the
 * 1-homogeneous piecewise-linear extension. The Euclidean gauge is exact.
 */
class Gauge {
 public:
  struct Sample {
    double angle;  // in [0, 2 pi)
    Vec2 direction;
    double value;
  };

  static Gauge euclidean();
  /// Samples given as (direction, value); directions need not be unit (values are rescaled).
  static Gauge from_samples(const std::vector<std::pair<Vec2, double>>& samples);
  /// Samples f on `count` equally spaced unit directions (angles 2 pi k / count).
  static Gauge from_function(const std::function<double(Vec2)>& f, int count);
  /// H(nu) = |nu_1| + |nu_2|; Wulff shape [-1, 1]^2.
  static Gauge l1(int count = 512);
  /// H(nu) = max(|nu_1|, |nu_2|); Wulff shape {|x| + |y| <= 1}.
  static Gauge linf(int count = 512);
  /// Support function of a convex polygon containing the origin; its Wulff shape is the polygon.
  static Gauge support_of(const Polygon& convex_body, int count = 512);

  bool is_euclidean() const { return euclidean_; }
  const std::vector<Sample>& samples() const { return samples_; }
  /// Evaluate at any vector (1-homogeneous).
  double operator()(Vec2 nu) const;
  /// Sampling directions used for Wulff constructions and checks.
  std::vector<Vec2> directions(int fallback_count = 512) const;

 private:
  Gauge() = default;
  bool euclidean_ = false;
  std::vector<Sample> samples_;
};

struct GaugeReport {
  double worst_sublinearity = 0.0;  // max of H(a+b) - H(a) - H(b) over sampled pairs
  double worst_negativity = 0.0;    // max of -H over samples
  double worst_homogeneity = 0.0;   // max |H(t nu) - t H(nu)|
  Vec2 witness_a, witness_b;
  bool degenerate = false;  // H vanishes on some sampled direction
  bool pass = false;
};

/// Sublinearity and sign check on all sampled pairs; pass iff every violation <= 1e-12.
GaugeReport gauge_check(const Gauge& gauge);

struct WulffShape {
  Polygon polygon;
  Gauge gauge;
  bool degenerate = false;  // intersection unbounded; polygon is clipped to a bounding box
};

/// Intersection of the half-planes {p . nu_k <= H(nu_k)} over `count` equally spaced directions
/// (or over the gauge's own sample directions when count == 0).
WulffShape wulff_shape(const Gauge& gauge, int count = 0);

/// Support function of a polygon: max over vertices of v . nu.
double support_function(const Polygon& polygon, Vec2 nu);

}  // namespace abplab
