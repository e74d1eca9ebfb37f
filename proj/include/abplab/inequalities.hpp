#pragma once

#include <memory>

#include "abplab/certificate.hpp"
#include "abplab/eigen_solver.hpp"
#include "abplab/gauge.hpp"
#include "abplab/geometry.hpp"
#include "abplab/weights.hpp"

namespace abplab {

struct QuotientReport {
  double perimeter = 0.0;
  double measure = 0.0;
  double exponent = 0.5;  // (D - 1) / D
  double D = 2.0;
  double quotient = 0.0;
  double reference_perimeter = 0.0;
  double reference_measure = 0.0;
  double reference = 0.0;
  double deficit = 0.0;  // quotient - reference
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

/// P / |Omega|^(1/2) against P(B_1) / |B_1|^(1/2) = 2 sqrt(pi).
QuotientReport isoperimetric_report(const Polygon& polygon);

/// P_H / |Omega|^(1/2) against the Wulff shape of H. Throws GaugeError when H fails gauge_check
/// or is degenerate (use cone_report with a cone instead).
QuotientReport wulff_report(const Polygon& polygon, const Gauge& gauge);

/// The set W intersected with the cone, as a polygon. Euclidean W is the unit disc sampled with
/// `arc_points` points.
Polygon wulff_in_cone(const Gauge& gauge, const ConvexCone& cone, int arc_points = 2048);

/**
 * Certificate with one link "per_vol": |P_{w,H}(W; Sigma) - D w(W cap Sigma)| / (D w(W cap Sigma)) <= 1e-4.
 * Throws HypothesisError when Sigma is a proper cone and w does not vanish on its boundary.
 */
Certificate wulff_identity_check(const Gauge& gauge, const ConvexCone& cone, const HomogeneousWeight& w,
                                 int arc_points = 2048);

struct ConeReportOptions {
  int arc_points = 2048;
  int concavity_pairs = 2000;
  std::uint64_t seed = kDefaultSeed;
};

/**
 * P_{w,H}(Omega; Sigma) / w(Omega)^((D-1)/D) against the same quotient for W cap Sigma, D = 2 + alpha.
 * The polygon must lie in the closed cone. Throws HypothesisError when the concavity check fails.
 */
QuotientReport cone_report(const Polygon& polygon, const ConvexCone& cone, const HomogeneousWeight& w,
                           const Gauge& gauge, const ConeReportOptions& options = {});

struct FaberKrahnReport {
  double lambda = 0.0;
  double area = 0.0;
  double product = 0.0;     // lambda |Omega|
  double ball_value = 0.0;  // pi j01^2
  double ratio = 0.0;       // product / ball_value
  int iterations = 0;
  bool pass = false;        // ratio >= 1 - slack
};

FaberKrahnReport faber_krahn_report(const Polygon& polygon, double h, double slack = 0.01);
FaberKrahnReport faber_krahn_report(const Polygon& polygon, const EigenResult& eigen, double slack = 0.01);

}  // namespace abplab
