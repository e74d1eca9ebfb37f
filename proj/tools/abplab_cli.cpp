#include <cstdint>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abplab/abp_dirichlet.hpp"
#include "abplab/eigen_solver.hpp"
#include "abplab/finite_difference.hpp"
#include "abplab/inequalities.hpp"
#include "abplab/io.hpp"
#include "abplab/log_transform.hpp"
#include "abplab/sobolev.hpp"
#include "abplab/svg.hpp"
#include "abplab/trace.hpp"

using namespace abplab;
namespace fs = std::filesystem;

namespace {

struct Flags {
  std::string domain;
  std::string corpus;
  std::string out;
  std::string seed_text = "0x5EED";
  SolverSpec solver;
  CLI::Option* h_opt = nullptr;
  CLI::Option* shrink_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
  int samples = 2000;
  bool fig = false;
  double p = 1.0;
  int bumps = 20;
  double clip = 0.8;
  double chain_clip = 0.9;
};

struct Run {
  Json report;
  std::vector<Certificate> certificates;
  bool failed = false;  // a report-level check failed outside any certificate
  std::vector<std::pair<std::string, std::string>> figures;
};

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const std::uint64_t s = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return s;
  } catch (const std::exception&) {
    throw ConfigError("--seed: cannot parse \"" + text + "\"");
  }
}

struct Setup {
  DomainSpec domain;
  Json raw;
  SolverSpec solver;
  std::uint64_t seed = kDefaultSeed;
};

Setup load_setup(const Flags& f) {
  Setup s;
  s.seed = parse_seed(f.seed_text);
  if (f.domain.empty()) throw ConfigError("--domain is required");
  s.raw = load_json_file(f.domain);
  try {
    s.domain = parse_domain(s.raw);
    s.solver = s.raw.contains("solver") ? parse_solver(s.raw["solver"], {}, "/solver") : SolverSpec{};
  } catch (const ConfigError& e) {
    throw ConfigError(f.domain + ": " + e.what());
  }
  if (s.domain.name.empty()) s.domain.name = fs::path(f.domain).stem().string();
  if (f.h_opt->count()) s.solver.h = f.solver.h;
  if (f.shrink_opt->count()) s.solver.shrink = f.solver.shrink;
  if (f.tol_opt->count()) s.solver.tol = f.solver.tol;
  if (!(s.solver.h > 0) || !(s.solver.tol > 0) || s.solver.shrink < 0) throw ConfigError("solver flags out of range");
  return s;
}

HomogeneousWeight setup_weight(const Setup& s, const std::string& path) {
  if (!s.raw.contains("weight")) return HomogeneousWeight::constant(1.0, s.domain.cone.value_or(ConvexCone::full_plane()));
  try {
    return parse_weight(s.raw["weight"], s.domain.cone, "/weight");
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Json header(const std::string& command, const Setup& s) {
  Json j;
  j["command"] = command;
  j["domain"] = s.domain.name;
  j["seed"] = s.seed;
  j["h"] = s.solver.h;
  return j;
}

Json error_json(const Error& e) {
  Json j;
  j["error"] = to_string(e.kind());
  j["message"] = e.what();
  return j;
}

TraceConfig trace_config(const Setup& s, const Flags& f) {
  TraceConfig c;
  c.domain = s.domain.polygon;
  c.h = s.solver.h;
  c.shrink = s.solver.shrink;
  c.tol = s.solver.tol;
  c.samples = f.samples;
  c.seed = s.seed;
  return c;
}

void add_trace_figures(Run& run, const TraceResult& t, bool fig) {
  if (!fig) return;
  run.figures.emplace_back("domain.svg", svg_domain(t.solved_domain));
  if (t.solution && t.contact) {
    run.figures.emplace_back("contact.svg", svg_contact_set(t.solved_domain, t.solution->u.mesh(), *t.contact));
    run.figures.emplace_back("gradient.svg",
                             svg_gradient_image(t.target, *t.contact, t.coverage ? &*t.coverage : nullptr));
  }
}

Run run_iso(const Setup& s, const Flags& f) {
  Run run;
  run.report = header("iso", s);
  run.report["report"] = to_json(isoperimetric_report(s.domain.polygon));
  const TraceResult t = abp_trace(trace_config(s, f));
  run.certificates.push_back(t.certificate);
  add_trace_figures(run, t, f.fig);
  return run;
}

Run run_wulff(const Setup& s, const Flags& f) {
  Run run;
  run.report = header("wulff", s);
  try {
    run.report["report"] = to_json(wulff_report(s.domain.polygon, s.domain.gauge));
    run.certificates.push_back(wulff_identity_check(s.domain.gauge, ConvexCone::full_plane(), HomogeneousWeight::constant()));
  } catch (const Error& e) {
    run.report["report"] = error_json(e);
    run.failed = true;
    return run;
  }
  TraceConfig c = trace_config(s, f);
  c.gauge = s.domain.gauge;
  const TraceResult t = abp_trace(c);
  run.certificates.push_back(t.certificate);
  add_trace_figures(run, t, f.fig);
  return run;
}

Run run_cone(const Setup& s, const Flags& f) {
  Run run;
  run.report = header("cone", s);
  const ConvexCone cone = s.domain.cone.value_or(ConvexCone::full_plane());
  const HomogeneousWeight w = setup_weight(s, f.domain);
  run.report["weight"] = w.name();
  ConeReportOptions o;
  o.seed = s.seed;
  try {
    const Polygon clipped = clip_to_cone(s.domain.polygon, cone);
    run.report["report"] = to_json(cone_report(clipped, cone, w, s.domain.gauge, o));
    if (cone.is_full() || w.vanishes_on_cone_boundary()) {
      run.certificates.push_back(wulff_identity_check(s.domain.gauge, cone, w));
    }
  } catch (const Error& e) {
    run.report["report"] = error_json(e);
    run.failed = true;
  }
  TraceConfig c = trace_config(s, f);
  c.cone = cone;
  c.weight = w;
  c.gauge = s.domain.gauge;
  try {
    c.domain = clip_to_cone(s.domain.polygon, cone);
  } catch (const Error&) {
  }
  const TraceResult t = abp_trace(c);
  run.certificates.push_back(t.certificate);
  add_trace_figures(run, t, f.fig);
  return run;
}

Run run_eigen(const Setup& s, const Flags& f) {
  Run run;
  run.report = header("eigen", s);
  auto mesh = std::make_shared<const TriMesh>(triangulate(s.domain.polygon, s.solver.h));
  EigenOptions eo;
  eo.tol = s.solver.tol;
  const EigenResult e = principal_eigen(mesh, eo);
  run.report["lambda"] = e.lambda;
  run.report["iterations"] = e.iterations;
  run.report["converged"] = e.converged;
  const FaberKrahnReport fk = faber_krahn_report(s.domain.polygon, e);
  run.report["faber_krahn"] = to_json(fk);
  if (!fk.pass) run.failed = true;
  const LogField lf = log_eigen_transform(e, s.domain.polygon, f.clip);
  const LogResidual res = log_residual(lf, e.lambda);
  run.report["log_residual"] = {{"clip", f.clip}, {"relative_l1", res.relative_l1}};
  const LogField chain = log_eigen_transform(e, s.domain.polygon, f.chain_clip);
  Certificate cert = eigen_chain_check(chain, e.lambda, area(s.domain.polygon));
  cert.metadata["seed"] = s.seed;
  run.certificates.push_back(cert);
  if (f.fig) run.figures.emplace_back("domain.svg", svg_domain(s.domain.polygon));
  return run;
}

Run run_abp_estimate(const Setup& s, const Flags& f) {
  Run run;
  run.report = header("abp-estimate", s);
  const auto rhs = [](Vec2) { return -1.0; };
  SolverOptions so;
  so.tol = s.solver.tol;
  so.max_iter = s.solver.max_iter;
  const GridField u = solve_dirichlet_fd(s.domain.polygon, s.solver.h, OperatorCoeffs::laplacian(), rhs, so);
  const AbpDirichletReport r = abp_dirichlet_ratio(u, rhs, f.samples, s.seed);
  run.report["report"] = to_json(r);
  Certificate cert;
  cert.title = "abp_dirichlet";
  cert.add(make_link("coverage", static_cast<double>(r.samples - r.interior), 0.0, 0.0,
                     "slopes in B_{M/d} without an interior upper contact point"));
  cert.metadata["seed"] = s.seed;
  run.certificates.push_back(cert);
  if (f.fig) run.figures.emplace_back("domain.svg", svg_domain(s.domain.polygon));
  return run;
}

Run run_sobolev(const Setup& s, const Flags& f) {
  Run run;
  run.report = header("sobolev", s);
  const ConvexCone cone = s.domain.cone.value_or(ConvexCone::full_plane());
  const HomogeneousWeight w = setup_weight(s, f.domain);
  run.report["weight"] = w.name();
  std::vector<TestFunction> family = random_bumps(cone, f.bumps, s.seed);
  family.push_back(mollified_ball_indicator());
  const SobolevReport r = sobolev_check(w, cone, f.p, family);
  run.report["report"] = to_json(r);
  if (f.p == 1.0) {
    Certificate cert;
    cert.title = "sobolev_p1";
    cert.add(make_link("coarea_constant", r.max_quotient, r.c1, 0.0, "max quotient <= (D w(B_1 cap Sigma)^(1/D))^-1"));
    cert.metadata["seed"] = s.seed;
    run.certificates.push_back(cert);
  }
  return run;
}

Json entry_report(const CorpusEntry& e, std::uint64_t seed, bool& ok) {
  Json j;
  j["name"] = e.domain.name;
  j["theorem"] = e.theorem;
  j["seed"] = seed;
  Json reports = Json::array();
  try {
    if (e.theorem == "iso") {
      const QuotientReport r = isoperimetric_report(e.domain.polygon);
      reports.push_back(to_json(r));
      ok = ok && r.deficit >= -1e-3;
    } else if (e.theorem == "wulff") {
      const QuotientReport r = wulff_report(e.domain.polygon, e.domain.gauge);
      reports.push_back(to_json(r));
      ok = ok && r.deficit >= -1e-3;
    } else {
      const ConvexCone cone = e.domain.cone.value_or(ConvexCone::full_plane());
      ConeReportOptions o;
      o.seed = seed;
      for (const HomogeneousWeight& w : e.weights) {
        Json r = to_json(cone_report(e.domain.polygon, cone, w, e.domain.gauge, o));
        r["weight"] = w.name();
        ok = ok && r["deficit"].get<double>() >= -1e-3;
        reports.push_back(r);
      }
    }
  } catch (const Error& err) {
    j["error"] = error_json(err);
    ok = false;
  }
  j["reports"] = reports;
  return j;
}

int run_corpus(const Flags& f) {
  const std::uint64_t seed = parse_seed(f.seed_text);
  if (f.corpus.empty()) throw ConfigError("--corpus is required");
  const std::vector<CorpusEntry> entries = load_corpus(f.corpus);
  std::vector<std::future<std::pair<Json, bool>>> jobs;
  for (const CorpusEntry& e : entries) {
    jobs.push_back(std::async(std::launch::async, [&e, seed] {
      bool ok = true;
      Json j = entry_report(e, seed, ok);
      return std::make_pair(std::move(j), ok);
    }));
  }
  Json index;
  index["command"] = "corpus";
  index["corpus"] = fs::path(f.corpus).filename().string();
  index["seed"] = seed;
  Json list = Json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [j, ok] = jobs[i].get();
    all_ok = all_ok && ok;
    Json summary;
    summary["name"] = j["name"];
    summary["pass"] = ok;
    if (!f.out.empty()) {
      const std::string file = "entry_" + std::to_string(i) + ".json";
      write_text_file((fs::path(f.out) / file).string(), dump_report(j));
      summary["file"] = file;
    } else {
      summary["entry"] = j;
    }
    list.push_back(summary);
  }
  index["entries"] = list;
  index["all_pass"] = all_ok;
  const std::string text = dump_report(index);
  if (!f.out.empty()) write_text_file((fs::path(f.out) / "index.json").string(), text);
  std::cout << text;
  return all_ok ? 0 : 1;
}

int finish(const std::string& command, Run& run, const Flags& f) {
  bool ok = !run.failed;
  Json certs = Json::array();
  for (const Certificate& c : run.certificates) {
    ok = ok && c.all_pass() && !c.halted;
    certs.push_back(to_json(c));
  }
  run.report["all_pass"] = ok;
  const std::string report = dump_report(run.report);
  if (!f.out.empty()) {
    const fs::path dir(f.out);
    std::string stem = command;
    for (char& ch : stem) {
      if (ch == '-') ch = '_';
    }
    write_text_file((dir / (stem + "_report.json")).string(), report);
    Json cj;
    cj["seed"] = run.report["seed"];
    cj["certificates"] = certs;
    write_text_file((dir / (stem + "_certificate.json")).string(), dump_report(cj));
    for (const auto& [name, svg] : run.figures) write_text_file((dir / (stem + "_" + name)).string(), svg);
  }
  std::cout << report;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of isoperimetric inequalities by the ABP method"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("--help", "print help and exit");
  Flags f;
  app.add_option("--seed", f.seed_text, "random seed (decimal or 0x-prefixed hex)")->capture_default_str();
  app.add_option("--out", f.out, "output directory for report, certificate and figures");
  app.add_flag("--fig", f.fig, "write SVG figures");
  f.h_opt = app.add_option("--h", f.solver.h, "mesh size")->capture_default_str();
  f.shrink_opt = app.add_option("--shrink", f.solver.shrink, "shift into the open cone")->capture_default_str();
  f.tol_opt = app.add_option("--tol", f.solver.tol, "solver tolerance")->capture_default_str();
  app.add_option("--samples", f.samples, "coverage samples")->capture_default_str()->check(CLI::PositiveNumber);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"iso", "isoperimetric report and classical proof trace"},
      {"wulff", "anisotropic report, Wulff identity and trace"},
      {"cone", "weighted cone report, identity and trace"},
      {"eigen", "principal eigenvalue, Faber-Krahn ratio and log-transform chain"},
      {"abp-estimate", "Dirichlet ABP ratio for f = -1"},
      {"sobolev", "weighted Sobolev quotients over seeded bumps"},
      {"corpus", "batch quotient reports over a corpus file"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "corpus") {
      sub->add_option("corpus", f.corpus, "corpus file")->required();
    } else {
      sub->add_option("--domain", f.domain, "domain spec file")->required();
    }
    if (name == "eigen") {
      sub->add_option("--clip", f.clip, "interior fraction for the residual")->capture_default_str();
      sub->add_option("--chain-clip", f.chain_clip, "interior fraction for the chain")->capture_default_str();
    }
    if (name == "sobolev") {
      sub->add_option("--p", f.p, "exponent")->capture_default_str();
      sub->add_option("--bumps", f.bumps, "number of seeded bumps")->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json j;
    j["error"] = "config";
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (!f.out.empty()) fs::create_directories(f.out);
    if (command == "corpus") return run_corpus(f);
    const Setup s = load_setup(f);
    Run run;
    if (command == "iso") run = run_iso(s, f);
    else if (command == "wulff") run = run_wulff(s, f);
    else if (command == "cone") run = run_cone(s, f);
    else if (command == "eigen") run = run_eigen(s, f);
    else if (command == "abp-estimate") run = run_abp_estimate(s, f);
    else run = run_sobolev(s, f);
    return finish(command, run, f);
  } catch (const ConfigError& e) {
    std::cerr << error_json(e).dump() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    Json j;
    j["error"] = "config";
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return 2;
  }
}
