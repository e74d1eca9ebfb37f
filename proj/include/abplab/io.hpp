#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abplab/abp_dirichlet.hpp"
#include "abplab/certificate.hpp"
#include "abplab/gauge.hpp"
#include "abplab/inequalities.hpp"
#include "abplab/sobolev.hpp"
#include "abplab/weights.hpp"

namespace abplab {

using Json = nlohmann::ordered_json;

/// Domain spec: {"polygon": [[x, y], ...] | "ngon": {"n": N, "r": R, "center": [x, y]},
///               "cone": {"theta_lo": a, "theta_hi": b} | null, "gauge": "euclidean" | {"samples": [[nx, ny, H], ...]}}
struct DomainSpec {
  std::string name;
  Polygon polygon = regular_ngon(3, 1.0);
  std::optional<ConvexCone> cone;
  Gauge gauge = Gauge::euclidean();
};

struct SolverSpec {
  double h = 0.02;
  double shrink = 0.01;
  double tol = 1e-10;
  int max_iter = 20000;
};

/// Corpus entry: a domain spec plus {"theorem": "iso" | "wulff" | "cone", "weights": [weight spec, ...]}.
struct CorpusEntry {
  DomainSpec domain;
  std::string theorem;
  std::vector<HomogeneousWeight> weights;
};

/// All parsers throw ConfigError naming the JSON location (a pointer such as /cone/theta_lo) of the
/// offending value; file loaders add the file name and the parser's byte offset on syntax errors.
Json load_json_file(const std::string& path);
DomainSpec parse_domain(const Json& j, const std::string& where = "");
/// Weight spec: {"kind": "constant" | {"monomial": [a1, a2]} | {"radialpower": beta}, "value": c}.
HomogeneousWeight parse_weight(const Json& j, const std::optional<ConvexCone>& cone, const std::string& where = "");
/// Solver spec: {"h": ..., "shrink": ..., "tol": ..., "max_iter": ...}; missing keys keep `defaults`.
SolverSpec parse_solver(const Json& j, SolverSpec defaults = {}, const std::string& where = "");
std::vector<CorpusEntry> load_corpus(const std::string& path);

Json to_json(const Polygon& polygon);
Json to_json(const QuotientReport& r);
Json to_json(const Certificate& c);
Json to_json(const FaberKrahnReport& r);
Json to_json(const SobolevReport& r);
Json to_json(const AbpDirichletReport& r);

/// Rounds every floating value to 12 significant digits, recursively.
Json rounded(const Json& j);
/// Pretty dump of rounded(j); identical inputs give identical bytes.
std::string dump_report(const Json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace abplab
