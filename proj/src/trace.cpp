#include "abplab/trace.hpp"

#include <cmath>
#include <sstream>

#include "abplab/inequalities.hpp"
#include "abplab/perimeter.hpp"

namespace abplab {

namespace {

bool is_cone_trace(const TraceConfig& c) {
  return (c.cone && !c.cone->is_full()) || !c.weight.is_constant();
}

}  // namespace

TraceResult abp_trace(const TraceConfig& config) {
  TraceResult result;
  Certificate& cert = result.certificate;
  const bool weighted = is_cone_trace(config);
  const ConvexCone cone = config.cone ? *config.cone : config.weight.cone();
  cert.title = weighted ? "abp_trace_weighted" : (config.gauge.is_euclidean() ? "abp_trace" : "abp_trace_wulff");
  cert.metadata["h"] = config.h;
  cert.metadata["seed"] = config.seed;
  cert.metadata["weight"] = config.weight.name();
  cert.metadata["gauge"] = config.gauge.is_euclidean() ? "euclidean" : "sampled";
  try {
    const HomogeneousWeight& w = config.weight;
    const double D = 2.0 + w.degree();
    cert.metadata["D"] = D;
    if (weighted) {
      const WeightCheckReport conc = concavity_check(w, 2000, config.seed, 1e-3, &cone);
      cert.add(make_link("hypothesis", conc.max_violation, 0.0, 1e-9,
                         "alpha (w(z)/w(x))^(1/alpha) <= grad w(x).z / w(x) on sampled pairs"));
      if (!conc.pass) {
        cert.halted = true;
        std::ostringstream os;
        os << "concavity condition fails for " << w.name() << " at x = (" << conc.witness_x.x << ", "
           << conc.witness_x.y << "), z = (" << conc.witness_z.x << ", " << conc.witness_z.y << ")";
        cert.halt_reason = os.str();
        cert.metadata["error"] = to_string(ErrorKind::Hypothesis);
        return result;
      }
    }

    result.solved_domain = weighted && !cone.is_full() ? shift_into_cone(config.domain, cone, config.shrink)
                                                       : config.domain;
    result.target = wulff_in_cone(config.gauge, weighted ? cone : ConvexCone::full_plane(), 512);
    MeshOptions mo;
    if (!cone.is_full()) mo.cone = cone;
    auto mesh = std::make_shared<const TriMesh>(triangulate(result.solved_domain, config.h, mo));
    cert.metadata["vertices"] = mesh->vertex_count();

    FluxFunction g;
    if (!config.gauge.is_euclidean()) {
      const Gauge H = config.gauge;
      g = [H](Vec2, Vec2 nu) { return H(nu); };
    }
    SolverOptions so;
    so.tol = config.tol;
    result.solution = solve_neumann(mesh, w, g, so);
    const NeumannResult& sol = *result.solution;
    const double b = sol.b;
    cert.metadata["b"] = b;
    cert.metadata["boundary_flux"] = sol.boundary_flux;
    cert.metadata["measure"] = sol.measure;
    cert.metadata["residual"] = sol.residual;
    cert.add(make_link("compatibility", sol.compatibility_defect, 0.0, config.tol,
                       "load of the Neumann system is orthogonal to constants"));

    result.coverage = gradient_coverage(sol.u, result.target, config.coverage_delta, config.samples, config.seed);
    cert.metadata["coverage_fraction"] = result.coverage->fraction;
    cert.add(make_link("coverage", 1.0 - result.coverage->fraction, 0.0, config.coverage_slack,
                       "fraction of sampled slopes whose Legendre argmin touches the boundary"));

    result.contact = lower_contact_set(sol.u);
    const ContactSet& gamma = *result.contact;
    cert.metadata["contact_vertices"] = gamma.size();
    cert.metadata["contact_epsilon"] = gamma.epsilon;
    const double slack = config.chain_slack;

    if (!weighted) {
      const double target_area = config.gauge.is_euclidean() ? ball_constants(2).volume : area(result.target);
      const double idet = contact_integral(gamma);
      double itrace = 0.0;
      for (std::size_t k = 0; k < gamma.size(); ++k) {
        const double half = 0.5 * gamma.hessians[k].trace();
        itrace += half * half * gamma.areas[k];
      }
      const double top = 0.25 * b * b * sol.measure;
      cert.metadata["target_area"] = target_area;
      cert.metadata["contact_integral"] = idet;
      cert.add(make_link("ineq", target_area, idet, slack * target_area, "|W| <= integral over the contact set of det D^2u"));
      cert.add(make_link("means", idet, itrace, 1e-9 * std::max(1.0, itrace), "det D^2u <= (Laplacian / 2)^2"));
      cert.add(make_link("contact", itrace, top, slack * top, "integral of (Laplacian / 2)^2 <= (b / 2)^2 |Omega|"));
      cert.add(make_link("isopfin", target_area, top, 1e-9 * top, "|W| <= (P_H / (2 |Omega|))^2 |Omega|"));
    } else {
      const double target_measure = weighted_measure(result.target, w);
      const double iw = contact_integral(gamma, [&](Vec2 p) { return w(p); }, &cone);
      const double bound = std::pow(b / D, D);
      double iright = 0.0;
      for (std::size_t k = 0; k < gamma.size(); ++k) {
        if (!cone.contains(gamma.gradients[k])) continue;
        iright += w(mesh->vertex(gamma.members[k])) * gamma.areas[k];
      }
      iright *= bound;
      const double top = bound * sol.measure;
      const AmgmReport am = amgm_check(sol.u, gamma, w, b, slack);
      cert.metadata["target_measure"] = target_measure;
      cert.metadata["contact_integral"] = iw;
      cert.metadata["amgm_worst_relative_slack"] = am.worst_slack;
      cert.add(make_link("ineq", target_measure, iw, slack * target_measure,
                         "w(W cap Sigma) <= integral over the contact set of w(grad u) det D^2u"));
      cert.add(make_link("means", iw, iright, slack * iright, "w(grad u) det D^2u <= w(x) (b / D)^D"));
      cert.add(make_link("contact", iright, top, 1e-9 * top, "(b / D)^D w(contact set) <= (b / D)^D w(Omega)"));
      cert.add(make_link("isopfin", target_measure, top, 1e-3 * target_measure,
                         "w(W cap Sigma) <= (P_w / (D w(Omega)))^D w(Omega)"));
    }
  } catch (const Error& e) {
    cert.halted = true;
    cert.halt_reason = e.what();
    cert.metadata["error"] = to_string(e.kind());
  }
  return result;
}

}  // namespace abplab
