#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "abplab/abp_dirichlet.hpp"
#include "abplab/contact.hpp"
#include "abplab/eigen_solver.hpp"
#include "abplab/inequalities.hpp"
#include "abplab/io.hpp"
#include "abplab/log_transform.hpp"
#include "abplab/sobolev.hpp"
#include "abplab/trace.hpp"

using namespace abplab;

namespace {

const double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double a) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) o.pass = false;
  o.detail += (o.detail.empty() ? "" : "; ") + what + (ok ? "" : " [FAILED]");
}

// First zero of J0 by bisection on [2, 3].
double j01_bisect() {
  double lo = 2.0, hi = 3.0;
  for (int k = 0; k < 200 && hi - lo > 1e-15; ++k) {
    const double mid = 0.5 * (lo + hi);
    (std::cyl_bessel_j(0, mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Convex hull of 12 points at jittered angles and radii in [0.5, 1.5]; the origin is interior.
Polygon random_convex(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec2> pts;
  for (int k = 0; k < 12; ++k) {
    const double t = 2 * kPi * (k + 0.8 * rng.uniform()) / 12;
    const double r = rng.uniform(0.5, 1.5);
    pts.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return convex_hull(pts);
}

double lumped_mean(const ScalarField& u, const std::function<double(Vec2)>& f) {
  double s = 0.0, a = 0.0;
  const TriMesh& m = u.mesh();
  for (std::size_t i = 0; i < m.vertex_count(); ++i) {
    s += f(m.vertex(static_cast<int>(i))) * m.vertex_areas()[i];
    a += m.vertex_areas()[i];
  }
  return s / a;
}

Outcome criterion1() {
  Outcome o;
  Clock clock;
  const QuotientReport sq = isoperimetric_report(rectangle(1, 1));
  const QuotientReport disc = isoperimetric_report(regular_ngon(512, 1.0));
  const double t = clock.seconds();
  const double ref = 2.0 * std::sqrt(kPi);
  require(o, sq.quotient == 4.0, fmt("square quotient %.15g == 4", sq.quotient));
  require(o, std::abs(disc.quotient - ref) <= 1e-3, fmt("|disc quotient - 2 sqrt(pi)| = %.3e <= 1e-3", std::abs(disc.quotient - ref)));
  require(o, sq.quotient > disc.quotient, "square > disc");
  require(o, t < 1.0, fmt("runtime %.3f s < 1 s", t));
  return o;
}

Outcome criterion2() {
  Outcome o;
  Clock clock;
  const int N = 512;
  const Polygon disc = regular_ngon(N, 1.0);
  const double k = 1.0 / (2.0 * std::cos(kPi / N));  // exact solution on the N-gon: k |x|^2
  const double hs[3] = {0.08, 0.04, 0.02};
  double l2[3], sup_poly[3], sup_int[3];
  for (int s = 0; s < 3; ++s) {
    auto mesh = std::make_shared<const TriMesh>(triangulate(disc, hs[s]));
    const NeumannResult r = solve_neumann(mesh, HomogeneousWeight::constant());
    const auto exact = [k](Vec2 x) { return k * x.squared_norm(); };
    const auto half = [](Vec2 x) { return 0.5 * x.squared_norm(); };
    const double me = lumped_mean(r.u, exact), mh = lumped_mean(r.u, half);
    double e2 = 0.0, es = 0.0, ei = 0.0, sup_half = 0.0;
    for (std::size_t i = 0; i < mesh->vertex_count(); ++i) {
      const Vec2 x = mesh->vertex(static_cast<int>(i));
      const double e = r.u.value(static_cast<int>(i)) - (exact(x) - me);
      e2 += e * e * mesh->vertex_areas()[i];
      es = std::max(es, std::abs(e));
      if (!mesh->is_boundary_vertex(static_cast<int>(i))) ei = std::max(ei, std::abs(e));
      sup_half = std::max(sup_half, std::abs(r.u.value(static_cast<int>(i)) - (half(x) - mh)));
    }
    l2[s] = std::sqrt(e2);
    sup_poly[s] = es;
    sup_int[s] = ei;
    if (s == 2) {
      require(o, sup_half <= 5e-3, fmt("h=0.02 sup|u - (|x|^2/2 - mean)| = %.3e <= 5e-3", sup_half));
      require(o, r.b >= 1.99 && r.b <= 2.01, fmt("b = %.10f in [1.99, 2.01]", r.b));
    }
  }
  const double o1 = std::log2(l2[0] / l2[1]), o2 = std::log2(l2[1] / l2[2]);
  require(o, std::min(o1, o2) >= 1.7,
          fmt("L2 orders %.2f", o1) + fmt(", %.2f >= 1.7", o2) + fmt(" (sup orders %.2f", std::log2(sup_poly[0] / sup_poly[1])) +
              fmt(", %.2f;", std::log2(sup_poly[1] / sup_poly[2])) +
              fmt(" interior sup orders %.2f", std::log2(sup_int[0] / sup_int[1])) +
              fmt(", %.2f)", std::log2(sup_int[1] / sup_int[2])));
  const double t = clock.seconds();
  require(o, t < 30.0, fmt("runtime %.1f s < 30 s", t));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Polygon unit_ball = regular_ngon(1024, 1.0);
  struct Case {
    const char* name;
    Polygon domain;
    double h;
  };
  const Case cases[] = {{"disc", regular_ngon(512, 1.0), 0.02}, {"square", rectangle(1, 1), 0.01}};
  for (const Case& c : cases) {
    auto mesh = std::make_shared<const TriMesh>(triangulate(c.domain, c.h));
    const NeumannResult r = solve_neumann(mesh, HomogeneousWeight::constant());
    const CoverageReport cov = gradient_coverage(r.u, unit_ball, 0.05, 2000, kDefaultSeed);
    require(o, cov.samples == 2000 && cov.interior == 2000,
            std::string(c.name) + fmt(" h=%.2f: ", c.h) + std::to_string(cov.interior) + "/2000 interior");
  }
  auto coarse = std::make_shared<const TriMesh>(triangulate(rectangle(1, 1), 0.02));
  const CoverageReport sq02 = gradient_coverage(solve_neumann(coarse, HomogeneousWeight::constant()).u, unit_ball, 0.05, 2000);
  o.detail += "; info: square at h=0.02 has " + std::to_string(sq02.interior) + "/2000";
  return o;
}

Outcome criterion4(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  int ok = 0;
  double worst_low = 1e300, worst_high = -1e300;
  std::string failures;
  for (const CorpusEntry& e : corpus) {
    auto mesh = std::make_shared<const TriMesh>(triangulate(e.domain.polygon, 0.02));
    const NeumannResult r = solve_neumann(mesh, HomogeneousWeight::constant());
    const ContactSet gamma = lower_contact_set(r.u);
    const double idet = contact_integral(gamma);
    const double top = 0.25 * r.b * r.b * area(e.domain.polygon);
    const bool pass = kPi * 0.98 <= idet && idet <= top * 1.02;
    worst_low = std::min(worst_low, idet / kPi);
    worst_high = std::max(worst_high, idet / top);
    if (pass) ++ok;
    else failures += " " + e.domain.name;
  }
  require(o, ok == static_cast<int>(corpus.size()),
          std::to_string(ok) + "/" + std::to_string(corpus.size()) + " corpus domains" +
              fmt(" (min integral / pi = %.4f", worst_low) + fmt(", max integral / ((b/2)^2 |Omega|) = %.4f)", worst_high) +
              failures);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const ConvexCone full = ConvexCone::full_plane();
  const HomogeneousWeight one = HomogeneousWeight::constant();
  const auto rel = [&](const Gauge& g) { return wulff_identity_check(g, full, one).links.front().lhs; };
  const double re = rel(Gauge::euclidean()), r1 = rel(Gauge::l1()), ri = rel(Gauge::linf());
  require(o, re <= 1e-4 && r1 <= 1e-4 && ri <= 1e-4,
          fmt("euclidean %.1e", re) + fmt(", l1 %.1e", r1) + fmt(", linf %.1e <= 1e-4", ri));
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const Gauge g = Gauge::support_of(random_convex(kDefaultSeed + 100 + k), 720);
    worst = std::max(worst, rel(g));
  }
  require(o, worst <= 1e-4, fmt("10 random polyhedral gauges: worst %.1e <= 1e-4", worst));
  const Certificate xy = wulff_identity_check(Gauge::euclidean(), ConvexCone::quadrant(), HomogeneousWeight::monomial(1, 1));
  const double per = xy.metadata["perimeter"].get<double>();
  const double dm = xy.metadata["D_times_measure"].get<double>();
  require(o, std::abs(per - 0.5) <= 1e-5 && std::abs(dm - 4.0 * 0.125) <= 1e-5 && xy.links.front().lhs <= 1e-5,
          fmt("quadrant xy: P = %.8f", per) + fmt(", 4 w(W) = %.8f", dm) + fmt(", rel %.1e <= 1e-5", xy.links.front().lhs));
  return o;
}

Outcome criterion6(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  Clock clock;
  const ConvexCone q = ConvexCone::quadrant();
  const std::vector<HomogeneousWeight> weights = {HomogeneousWeight::constant(1.0, q), HomogeneousWeight::monomial(1, 1),
                                                  HomogeneousWeight::monomial(1.5, 0.5)};
  const Polygon qd = sector_polygon(0, kPi / 2, 1.0, 512);
  double eq = 0.0;
  for (const HomogeneousWeight& w : weights) eq = std::max(eq, std::abs(cone_report(qd, q, w, Gauge::euclidean()).deficit));
  require(o, eq <= 1e-3, fmt("quarter disc |deficit| %.2e <= 1e-3", eq));
  int sets = 0, reports = 0;
  double worst = 1e300;
  for (const CorpusEntry& e : corpus) {
    if (e.theorem != "cone" || !e.domain.cone || std::abs(e.domain.cone->opening() - kPi / 2) > 1e-12) continue;
    ++sets;
    for (const HomogeneousWeight& w : weights) {
      worst = std::min(worst, cone_report(e.domain.polygon, q, w, Gauge::euclidean()).deficit);
      ++reports;
    }
  }
  require(o, sets >= 20, std::to_string(sets) + " quadrant corpus sets >= 20");
  require(o, worst >= -1e-3, std::to_string(reports) + fmt(" reports, min deficit %.2e >= -1e-3", worst));
  bool rejected = false;
  try {
    cone_report(rectangle(1, 1), q, HomogeneousWeight::radial_power(2.0, q), Gauge::euclidean());
  } catch (const HypothesisError&) {
    rejected = true;
  }
  require(o, rejected, "x^2 + y^2 rejected by the concavity hypothesis");
  const double t = clock.seconds();
  require(o, t < 60.0, fmt("runtime %.1f s < 60 s", t));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const double j = j01_bisect();
  auto disc = std::make_shared<const TriMesh>(triangulate(regular_ngon(512, 1.0), 0.02));
  const double ld = principal_eigen(disc).lambda;
  require(o, std::abs(ld / (j * j) - 1) <= 0.01, fmt("disc lambda %.5f", ld) + fmt(" vs j01^2 = %.5f", j * j));
  auto sq = std::make_shared<const TriMesh>(triangulate(rectangle(1, 1), 0.02));
  const double ls = principal_eigen(sq).lambda;
  require(o, std::abs(ls / (2 * kPi * kPi) - 1) <= 0.01, fmt("square lambda %.5f", ls) + fmt(" vs 2 pi^2 = %.5f", 2 * kPi * kPi));
  double worst = 1e300;
  for (int k = 0; k < 10; ++k) {
    const Polygon p = random_convex(kDefaultSeed + 200 + k);
    worst = std::min(worst, faber_krahn_report(p, 0.03).product);
  }
  require(o, worst >= 18.0, fmt("10 random convex polygons: min lambda |Omega| = %.4f >= 18.0", worst) +
                                fmt(" (ball value pi j01^2 = %.4f)", kPi * j * j));
  return o;
}

Outcome criterion8() {
  Outcome o;
  struct Case {
    const char* name;
    Polygon domain;
  };
  const Case cases[] = {{"disc", regular_ngon(512, 1.0)}, {"square", rectangle(1, 1)}};
  for (const Case& c : cases) {
    auto mesh = std::make_shared<const TriMesh>(triangulate(c.domain, 0.02));
    const EigenResult e = principal_eigen(mesh);
    const double res = log_residual(log_eigen_transform(e, c.domain, 0.8), e.lambda).relative_l1;
    require(o, res <= 0.05, std::string(c.name) + fmt(" residual on the 0.8 clip %.4f <= 0.05", res));
    const Certificate cert = eigen_chain_check(log_eigen_transform(e, c.domain, 0.9), e.lambda, area(c.domain), 0.0, 0.1);
    const double left = cert.metadata["left"].get<double>(), right = cert.metadata["right"].get<double>();
    require(o, cert.all_pass(), std::string(c.name) + " chain on the 0.9 clip with 10% slack" +
                                    fmt(" (LEFT %.4f", left) + fmt(", RIGHT %.4f)", right));
    const Certificate c8 = eigen_chain_check(log_eigen_transform(e, c.domain, 0.8), e.lambda, area(c.domain), 0.0, 0.1);
    o.detail += std::string("; info: ") + c.name + fmt(" RIGHT/LEFT on the 0.8 clip %.3f",
                                                     c8.metadata["right"].get<double>() / c8.metadata["left"].get<double>());
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::vector<double> ratios;
  int covered = 0, total = 0;
  double worst_sup = 0.0;
  for (double R : {0.5, 1.0, 2.0}) {
    const auto f = [](Vec2) { return -1.0; };
    const GridField u = solve_dirichlet_fd(regular_ngon(512, R), 0.02, OperatorCoeffs::laplacian(), f);
    const AbpDirichletReport r = abp_dirichlet_ratio(u, f, 1000);
    ratios.push_back(r.ratio);
    worst_sup = std::max(worst_sup, std::abs(r.sup_u / (R * R / 4) - 1));
    covered += r.interior;
    total += r.samples;
  }
  const double lo = std::min({ratios[0], ratios[1], ratios[2]}), hi = std::max({ratios[0], ratios[1], ratios[2]});
  const double oracle = 1.0 / (8.0 * std::sqrt(kPi));
  require(o, hi / lo - 1 <= 0.02, fmt("ratios spread %.2e <= 2%%", hi / lo - 1) + fmt(" (closed form 1/(8 sqrt(pi)) = %.6f", oracle) +
                                      fmt(", observed %.6f)", ratios[1]));
  require(o, worst_sup <= 0.02, fmt("sup u vs R^2/4 worst relative error %.2e", worst_sup));
  require(o, covered == total, std::to_string(covered) + "/" + std::to_string(total) + " slopes in B_{M/d} covered");
  return o;
}

Outcome criterion10() {
  Outcome o;
  const ConvexCone q = ConvexCone::quadrant();
  const HomogeneousWeight xy = HomogeneousWeight::monomial(1, 1);
  const double c1 = 1.0 / (4.0 * std::pow(1.0 / 8.0, 0.25));
  const SobolevReport bumps = sobolev_check(xy, q, 1.0, random_bumps(q, 20, kDefaultSeed));
  require(o, std::abs(bumps.c1 - c1) <= 1e-5 * c1, fmt("C1 = %.6f", bumps.c1) + fmt(" vs (4 (1/8)^(1/4))^-1 = %.6f", c1));
  require(o, bumps.violations == 0 && bumps.entries.size() == 20,
          std::to_string(bumps.violations) + fmt(" violations over 20 bumps (max Q / C1 = %.4f)", bumps.max_quotient / c1));
  const SobolevReport ind = sobolev_check(xy, q, 1.0, {mollified_ball_indicator()});
  require(o, ind.max_quotient >= 0.9 * c1, fmt("mollified quarter-disc indicator Q / C1 = %.4f >= 0.9", ind.max_quotient / c1));
  return o;
}

Outcome criterion11(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  const auto run = [&] {
    Json j;
    j["iso"] = to_json(isoperimetric_report(rectangle(1, 1)));
    TraceConfig c;
    c.domain = rectangle(1, 1);
    c.h = 0.04;
    j["trace"] = to_json(abp_trace(c).certificate);
    c.domain = annulus_sector(0, kPi / 2, 0.5, 1.5, 96);
    c.cone = ConvexCone::quadrant();
    c.weight = HomogeneousWeight::monomial(1, 1);
    j["weighted_trace"] = to_json(abp_trace(c).certificate);
    const CorpusEntry& e = corpus.front();
    j["cone"] = to_json(cone_report(e.domain.polygon, *e.domain.cone, e.weights.back(), e.domain.gauge));
    const ConvexCone q = ConvexCone::quadrant();
    j["sobolev"] = to_json(sobolev_check(HomogeneousWeight::monomial(1, 1), q, 1.0, random_bumps(q, 5)));
    const GridField u = solve_dirichlet_fd(regular_ngon(128, 1.0), 0.04, OperatorCoeffs::laplacian(), [](Vec2) { return -1.0; });
    j["abp"] = to_json(abp_dirichlet_ratio(u, [](Vec2) { return -1.0; }, 500));
    j["fk"] = to_json(faber_krahn_report(rectangle(1, 1), 0.04));
    return dump_report(j);
  };
  const std::string a = run(), b = run();
  require(o, a == b, std::to_string(a.size()) + " bytes of report JSON identical across two runs");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string corpus_path = argc > 1 ? argv[1] : "corpus/corpus.json";
  std::vector<CorpusEntry> corpus;
  try {
    corpus = load_corpus(corpus_path);
  } catch (const Error& e) {
    std::printf("cannot load corpus: %s\n", e.what());
    return 2;
  }
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1},
      {2, criterion2},
      {3, criterion3},
      {4, [&] { return criterion4(corpus); }},
      {5, criterion5},
      {6, [&] { return criterion6(corpus); }},
      {7, criterion7},
      {8, criterion8},
      {9, criterion9},
      {10, criterion10},
      {11, [&] { return criterion11(corpus); }},
  };
  int failed = 0;
  for (const auto& [id, check] : criteria) {
    Clock clock;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %s (%.1f s): %s\n", id, o.pass ? "PASS" : "FAIL", clock.seconds(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
