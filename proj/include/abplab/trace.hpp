#pragma once

#include <cstdint>
#include <optional>

#include "abplab/certificate.hpp"
#include "abplab/contact.hpp"
#include "abplab/gauge.hpp"
#include "abplab/neumann.hpp"

namespace abplab {

struct TraceConfig {
  Polygon domain = regular_ngon(64, 1.0);
  std::optional<ConvexCone> cone;
  HomogeneousWeight weight = HomogeneousWeight::constant();
  Gauge gauge = Gauge::euclidean();
  double h = 0.02;
  double shrink = 0.01;          // shift into the open cone (cone traces only)
  double coverage_delta = 0.05;  // coverage samples p in (1 - delta) W
  int samples = 2000;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-10;
  double chain_slack = 0.02;     // relative slack of the area-formula and contact links
  double coverage_slack = 0.01;  // allowed fraction of slopes whose argmin is not interior
};

struct TraceResult {
  Certificate certificate;
  Polygon solved_domain = regular_ngon(3, 1.0);
  Polygon target = regular_ngon(3, 1.0);
  std::optional<NeumannResult> solution;
  std::optional<ContactSet> contact;
  std::optional<CoverageReport> coverage;
};

/**
 * ABP proof trace: Neumann solve, lower contact set, gradient coverage of W (or W cap Sigma),
 * area-formula integral, AM-GM, and the final comparison with the Wulff quotient. Classical and
 * anisotropic traces produce the links compatibility, coverage, ineq, means, contact, isopfin;
 * cone traces first add "hypothesis" (concavity of w^(1/alpha)) and halt there if it fails.
 * Any library error halts the trace and is recorded in the certificate.
 */
TraceResult abp_trace(const TraceConfig& config);

}  // namespace abplab
