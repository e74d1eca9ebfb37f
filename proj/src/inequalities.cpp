#include "abplab/inequalities.hpp"

#include <cmath>
#include <sstream>

#include "abplab/eigen_solver.hpp"
#include "abplab/perimeter.hpp"
#include "abplab/special.hpp"

namespace abplab {

namespace {

void finish(QuotientReport& r) {
  r.exponent = (r.D - 1.0) / r.D;
  r.quotient = r.perimeter / std::pow(r.measure, r.exponent);
  r.reference = r.reference_perimeter / std::pow(r.reference_measure, r.exponent);
  r.deficit = r.quotient - r.reference;
}

void require_gauge(const Gauge& gauge) {
  if (gauge.is_euclidean()) return;
  const GaugeReport g = gauge_check(gauge);
  if (!g.pass) {
    std::ostringstream os;
    os << "gauge is not a valid surface tension: sublinearity violation " << g.worst_sublinearity
       << ", negativity " << g.worst_negativity;
    throw GaugeError(os.str());
  }
}

}  // namespace

QuotientReport isoperimetric_report(const Polygon& polygon) {
  QuotientReport r;
  r.perimeter = perimeter(polygon);
  r.measure = area(polygon);
  const BallConstants ball = ball_constants(2);
  r.reference_perimeter = ball.perimeter;
  r.reference_measure = ball.volume;
  finish(r);
  return r;
}

QuotientReport wulff_report(const Polygon& polygon, const Gauge& gauge) {
  if (gauge.is_euclidean()) return isoperimetric_report(polygon);
  require_gauge(gauge);
  const WulffShape w = wulff_shape(gauge);
  if (w.degenerate) {
    throw GaugeError("gauge vanishes on an open set of directions and its Wulff shape is unbounded; "
                     "use the cone report with an explicit cone");
  }
  const HomogeneousWeight one = HomogeneousWeight::constant();
  const ConvexCone full = ConvexCone::full_plane();
  QuotientReport r;
  r.perimeter = perimeter_weighted(polygon, full, gauge, one);
  r.measure = area(polygon);
  r.reference_perimeter = perimeter_weighted(w.polygon, full, gauge, one);
  r.reference_measure = area(w.polygon);
  finish(r);
  r.metadata["wulff_vertices"] = w.polygon.size();
  return r;
}

Polygon wulff_in_cone(const Gauge& gauge, const ConvexCone& cone, int arc_points) {
  if (gauge.is_euclidean()) {
    if (cone.is_full()) return regular_ngon(arc_points, 1.0);
    return sector_polygon(cone.theta_lo(), cone.theta_hi(), 1.0, arc_points);
  }
  const WulffShape w = wulff_shape(gauge);
  if (cone.is_full()) {
    if (w.degenerate) throw GaugeError("degenerate gauge needs a cone to bound its Wulff shape");
    return w.polygon;
  }
  return clip_to_cone(w.polygon, cone);
}

Certificate wulff_identity_check(const Gauge& gauge, const ConvexCone& cone, const HomogeneousWeight& w,
                                 int arc_points) {
  if (!cone.is_full() && !w.vanishes_on_cone_boundary()) {
    throw HypothesisError("the weighted Wulff identity needs w = 0 on the cone boundary; weight " + w.name() +
                          " is positive there");
  }
  require_gauge(gauge);
  Certificate cert;
  cert.title = "wulff_identity";
  const double D = 2.0 + w.degree();
  double per = 0.0, meas = 0.0;
  if (gauge.is_euclidean() && cone.is_full() && w.is_constant()) {
    const BallConstants ball = ball_constants(2);
    per = w(Vec2{1.0, 0.0}) * ball.perimeter;
    meas = w(Vec2{1.0, 0.0}) * ball.volume;
  } else {
    const Polygon shape = wulff_in_cone(gauge, cone, arc_points);
    per = perimeter_weighted(shape, cone, gauge, w);
    meas = weighted_measure(shape, w);
  }
  const double rel = std::abs(per - D * meas) / (D * meas);
  cert.add(make_link("per_vol", rel, 0.0, 1e-4, "|P_{w,H}(W;Sigma) - D w(W cap Sigma)| / (D w(W cap Sigma))"));
  cert.metadata["perimeter"] = per;
  cert.metadata["measure"] = meas;
  cert.metadata["D"] = D;
  cert.metadata["D_times_measure"] = D * meas;
  return cert;
}

QuotientReport cone_report(const Polygon& polygon, const ConvexCone& cone, const HomogeneousWeight& w,
                           const Gauge& gauge, const ConeReportOptions& options) {
  const WeightCheckReport conc = concavity_check(w, options.concavity_pairs, options.seed, 1e-3, &cone);
  if (!conc.pass) {
    std::ostringstream os;
    os << "weight " << w.name() << " violates the concavity condition (w^(1/alpha) not concave): violation "
       << conc.max_violation << " at x = (" << conc.witness_x.x << ", " << conc.witness_x.y << "), z = ("
       << conc.witness_z.x << ", " << conc.witness_z.y << ")";
    throw HypothesisError(os.str());
  }
  require_gauge(gauge);
  QuotientReport r;
  r.D = 2.0 + w.degree();
  r.perimeter = perimeter_weighted(polygon, cone, gauge, w);
  r.measure = weighted_measure(polygon, w);
  if (gauge.is_euclidean() && cone.is_full() && w.is_constant()) {
    const BallConstants ball = ball_constants(2);
    r.reference_perimeter = w(Vec2{1.0, 0.0}) * ball.perimeter;
    r.reference_measure = w(Vec2{1.0, 0.0}) * ball.volume;
  } else {
    const Polygon shape = wulff_in_cone(gauge, cone, options.arc_points);
    r.reference_perimeter = perimeter_weighted(shape, cone, gauge, w);
    r.reference_measure = weighted_measure(shape, w);
  }
  finish(r);
  r.metadata["weight"] = w.name();
  r.metadata["alpha"] = w.degree();
  r.metadata["concavity_violation"] = conc.max_violation;
  return r;
}

FaberKrahnReport faber_krahn_report(const Polygon& polygon, const EigenResult& eigen, double slack) {
  FaberKrahnReport r;
  r.lambda = eigen.lambda;
  r.area = area(polygon);
  r.product = r.lambda * r.area;
  r.ball_value = faber_krahn_constant();
  r.ratio = r.product / r.ball_value;
  r.iterations = eigen.iterations;
  r.pass = r.ratio >= 1.0 - slack;
  return r;
}

FaberKrahnReport faber_krahn_report(const Polygon& polygon, double h, double slack) {
  auto mesh = std::make_shared<const TriMesh>(triangulate(polygon, h));
  return faber_krahn_report(polygon, principal_eigen(mesh), slack);
}

}  // namespace abplab
