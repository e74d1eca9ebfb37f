#include "abplab/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace abplab {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError((where.empty() ? std::string("/") : where) + ": " + what);
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

Vec2 point(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [x, y]");
  return {number(j[0], at(where, "0")), number(j[1], at(where, "1"))};
}

template <class F>
auto guarded(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

DomainSpec parse_domain(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "domain spec must be an object");
  DomainSpec d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(at(where, "name"), "expected a string");
    d.name = j["name"].get<std::string>();
  }
  const bool has_poly = j.contains("polygon"), has_ngon = j.contains("ngon");
  if (has_poly == has_ngon) fail(where, "exactly one of \"polygon\" and \"ngon\" is required");
  if (has_poly) {
    const std::string w = at(where, "polygon");
    const Json& p = j["polygon"];
    if (!p.is_array()) fail(w, "expected an array of points");
    std::vector<Vec2> v;
    for (std::size_t i = 0; i < p.size(); ++i) v.push_back(point(p[i], at(w, std::to_string(i))));
    d.polygon = guarded(w, [&] { return Polygon(std::move(v)); });
  } else {
    const std::string w = at(where, "ngon");
    const Json& g = j["ngon"];
    if (!g.is_object() || !g.contains("n") || !g.contains("r")) fail(w, "expected {\"n\": N, \"r\": R}");
    const int n = integer(g["n"], at(w, "n"));
    const double r = number(g["r"], at(w, "r"));
    if (n < 3 || !(r > 0)) fail(w, "need n >= 3 and r > 0");
    d.polygon = regular_ngon(n, r);
    if (g.contains("center")) d.polygon = translated(d.polygon, point(g["center"], at(w, "center")));
  }
  if (j.contains("cone") && !j["cone"].is_null()) {
    const std::string w = at(where, "cone");
    const Json& c = j["cone"];
    if (!c.is_object() || !c.contains("theta_lo") || !c.contains("theta_hi"))
      fail(w, "expected {\"theta_lo\": a, \"theta_hi\": b} or null");
    const double lo = number(c["theta_lo"], at(w, "theta_lo"));
    const double hi = number(c["theta_hi"], at(w, "theta_hi"));
    d.cone = guarded(w, [&] { return ConvexCone::sector(lo, hi); });
  }
  if (j.contains("gauge")) {
    const std::string w = at(where, "gauge");
    const Json& g = j["gauge"];
    if (g.is_string()) {
      const std::string s = g.get<std::string>();
      if (s == "euclidean") d.gauge = Gauge::euclidean();
      else if (s == "l1") d.gauge = Gauge::l1();
      else if (s == "linf") d.gauge = Gauge::linf();
      else fail(w, "unknown gauge \"" + s + "\"");
    } else if (g.is_object() && g.contains("samples") && g["samples"].is_array()) {
      std::vector<std::pair<Vec2, double>> s;
      const Json& arr = g["samples"];
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string wi = at(at(w, "samples"), std::to_string(i));
        if (!arr[i].is_array() || arr[i].size() != 3) fail(wi, "expected [nx, ny, H]");
        s.emplace_back(Vec2{number(arr[i][0], wi + "/0"), number(arr[i][1], wi + "/1")}, number(arr[i][2], wi + "/2"));
      }
      d.gauge = guarded(w, [&] { return Gauge::from_samples(s); });
    } else {
      fail(w, "expected \"euclidean\" or {\"samples\": [...]}");
    }
  }
  return d;
}

HomogeneousWeight parse_weight(const Json& j, const std::optional<ConvexCone>& cone, const std::string& where) {
  if (!j.is_object() || !j.contains("kind")) fail(where, "weight spec needs \"kind\"");
  const std::string w = at(where, "kind");
  const Json& k = j["kind"];
  const ConvexCone sigma = cone.value_or(ConvexCone::full_plane());
  if (k.is_string()) {
    if (k.get<std::string>() != "constant") fail(w, "unknown weight kind");
    const double c = j.contains("value") ? number(j["value"], at(where, "value")) : 1.0;
    return guarded(where, [&] { return HomogeneousWeight::constant(c, sigma); });
  }
  if (k.is_object() && k.contains("monomial")) {
    const Json& a = k["monomial"];
    if (!a.is_array() || a.size() != 2) fail(at(w, "monomial"), "expected [a1, a2]");
    const double a1 = number(a[0], at(w, "monomial/0")), a2 = number(a[1], at(w, "monomial/1"));
    return guarded(w, [&] {
      return cone ? HomogeneousWeight::monomial(a1, a2, *cone) : HomogeneousWeight::monomial(a1, a2);
    });
  }
  if (k.is_object() && k.contains("radialpower")) {
    const double beta = number(k["radialpower"], at(w, "radialpower"));
    return guarded(w, [&] { return HomogeneousWeight::radial_power(beta, sigma); });
  }
  fail(w, "expected \"constant\", {\"monomial\": [a1, a2]} or {\"radialpower\": beta}");
}

SolverSpec parse_solver(const Json& j, SolverSpec s, const std::string& where) {
  if (!j.is_object()) fail(where, "solver spec must be an object");
  if (j.contains("h")) s.h = number(j["h"], at(where, "h"));
  if (j.contains("shrink")) s.shrink = number(j["shrink"], at(where, "shrink"));
  if (j.contains("tol")) s.tol = number(j["tol"], at(where, "tol"));
  if (j.contains("max_iter")) s.max_iter = integer(j["max_iter"], at(where, "max_iter"));
  if (!(s.h > 0)) fail(at(where, "h"), "must be positive");
  if (!(s.shrink >= 0)) fail(at(where, "shrink"), "must be nonnegative");
  if (!(s.tol > 0)) fail(at(where, "tol"), "must be positive");
  if (s.max_iter < 1) fail(at(where, "max_iter"), "must be at least 1");
  return s;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  const Json j = load_json_file(path);
  const Json* list = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw ConfigError(path + ": /: expected \"entries\"");
    list = &j["entries"];
  }
  if (!list->is_array()) throw ConfigError(path + ": /entries: expected an array");
  std::vector<CorpusEntry> out;
  try {
    for (std::size_t i = 0; i < list->size(); ++i) {
      const std::string w = "/entries/" + std::to_string(i);
      const Json& e = (*list)[i];
      CorpusEntry c;
      c.domain = parse_domain(e, w);
      if (c.domain.name.empty()) c.domain.name = "entry" + std::to_string(i);
      c.theorem = e.value("theorem", std::string("iso"));
      if (c.theorem != "iso" && c.theorem != "wulff" && c.theorem != "cone") fail(at(w, "theorem"), "unknown theorem");
      if (e.contains("weights")) {
        if (!e["weights"].is_array()) fail(at(w, "weights"), "expected an array");
        for (std::size_t k = 0; k < e["weights"].size(); ++k)
          c.weights.push_back(parse_weight(e["weights"][k], c.domain.cone, at(w, "weights/" + std::to_string(k))));
      }
      if (c.weights.empty()) c.weights.push_back(HomogeneousWeight::constant(1.0, c.domain.cone.value_or(ConvexCone::full_plane())));
      out.push_back(std::move(c));
    }
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return out;
}

Json to_json(const Polygon& polygon) {
  Json a = Json::array();
  for (Vec2 v : polygon.vertices()) a.push_back({v.x, v.y});
  return a;
}

Json to_json(const QuotientReport& r) {
  Json j;
  j["quotient"] = r.quotient;
  j["reference"] = r.reference;
  j["deficit"] = r.deficit;
  j["exponent"] = r.exponent;
  j["D"] = r.D;
  Json m = r.metadata;
  m["perimeter"] = r.perimeter;
  m["measure"] = r.measure;
  m["reference_perimeter"] = r.reference_perimeter;
  m["reference_measure"] = r.reference_measure;
  j["metadata"] = m;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["title"] = c.title;
  j["all_pass"] = c.all_pass();
  j["halted"] = c.halted;
  if (c.halted) j["halt_reason"] = c.halt_reason;
  Json links = Json::array();
  for (const CertificateLink& l : c.links) {
    Json e;
    e["name"] = l.name;
    e["lhs"] = l.lhs;
    e["rhs"] = l.rhs;
    e["slack"] = l.slack;
    e["pass"] = l.pass;
    if (!l.note.empty()) e["note"] = l.note;
    links.push_back(e);
  }
  j["links"] = links;
  j["metadata"] = c.metadata;
  return j;
}

Json to_json(const FaberKrahnReport& r) {
  Json j;
  j["lambda"] = r.lambda;
  j["area"] = r.area;
  j["lambda_times_area"] = r.product;
  j["ball_value"] = r.ball_value;
  j["ratio"] = r.ratio;
  j["iterations"] = r.iterations;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const SobolevReport& r) {
  Json j;
  j["p"] = r.p;
  j["D"] = r.D;
  j["p_star"] = r.p_star;
  if (r.p == 1.0) j["c1"] = r.c1;
  j["max_quotient"] = r.max_quotient;
  j["violations"] = r.violations;
  j["pass"] = r.pass;
  Json e = Json::array();
  for (const SobolevEntry& s : r.entries) {
    Json x;
    x["kind"] = s.function.kind == TestFunction::Kind::Bump ? "bump" : "mollified_indicator";
    x["center"] = {s.function.center.x, s.function.center.y};
    x["radius"] = s.function.radius;
    x["quotient"] = s.quotient;
    x["violation"] = s.violation;
    e.push_back(x);
  }
  j["entries"] = e;
  return j;
}

Json to_json(const AbpDirichletReport& r) {
  Json j;
  j["sup_u"] = r.sup_u;
  j["diameter"] = r.diameter;
  j["f_minus_l2"] = r.f_minus_norm;
  j["ratio"] = r.ratio;
  j["slope_radius"] = r.slope_radius;
  j["samples"] = r.samples;
  j["interior"] = r.interior;
  j["coverage"] = r.coverage;
  return j;
}

Json rounded(const Json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
  }
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = rounded(it.value());
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const Json& e : j) out.push_back(rounded(e));
    return out;
  }
  return j;
}

std::string dump_report(const Json& j) { return rounded(j).dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(path + ": cannot write file");
  out << text;
}

}  // namespace abplab
