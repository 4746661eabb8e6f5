#include "qvol/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "qvol/potential.hpp"
#include "qvol/solution.hpp"
#include "qvol/triangulation.hpp"

namespace qvol {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad_job(const std::string& what) {
  throw Error(ErrorCode::MalformedJob, "malformed job: " + what);
}

// ---- JSON helpers ---------------------------------------------------------

ordered_json complex_to_json(const Complex& z) {
  return ordered_json::array({z.real(), z.imag()});
}

ordered_json pvec_to_json(const PVec& v) {
  return ordered_json::array({complex_to_json(v.alpha),
                              complex_to_json(v.beta)});
}

Complex complex_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number())
    bad_job("a complex number must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

PVec pvec_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2)
    bad_job("a projective vector must be a pair of complex numbers");
  return {complex_from_json(j[0]), complex_from_json(j[1])};
}

std::vector<PVec> pvec_list_from_json(const ordered_json& j,
                                      const char* what) {
  if (!j.is_array()) bad_job(std::string(what) + " must be an array");
  std::vector<PVec> out;
  for (const auto& entry : j) {
    PVec v = pvec_from_json(entry);
    if (is_zero_vector(v))
      bad_job(std::string(what) + " contains a zero vector");
    out.push_back(v);
  }
  return out;
}

// ---- built-in examples ----------------------------------------------------

JobSpec assemble_example(const std::vector<std::array<int, 4>>& pd,
                         const std::vector<PVec>& arcs, int seed_side,
                         const PVec& seed_color, const PVec& p) {
  JobSpec job;
  job.pd = PdCode{pd};
  job.arc_colors = arcs;
  const LinkDiagram d = build_diagram(job.pd);
  job.region_colors = propagate_regions(
      d, arcs, d.right_region.at(seed_side), seed_color);
  job.p = p;
  return job;
}

JobSpec example_fig8(bool plus) {
  const Complex t{-0.5, (plus ? 1.0 : -1.0) * std::sqrt(3.0) / 2.0};
  const Complex one{1.0, 0.0}, zero{0.0, 0.0};
  const std::vector<PVec> arcs = {
      {zero, t}, {one, zero}, {-t, one + t}, {-t, t}};
  return assemble_example({{4, 7, 5, 8}, {8, 3, 1, 4}, {2, 6, 3, 5},
                           {6, 2, 7, 1}},
                          arcs, /*seed_side=*/4, PVec{one, one},
                          PVec{{2.0, 0.0}, one});
}

JobSpec example_trefoil() {
  const Complex one{1.0, 0.0}, zero{0.0, 0.0};
  const PVec a34{-one, one};
  const std::vector<PVec> arcs = {{one, zero}, {zero, one}, a34, a34};
  return assemble_example({{1, 5, 2, 4}, {5, 3, 6, 2}, {3, 1, 4, 8},
                           {7, 6, 8, 7}},
                          arcs, /*seed_side=*/1, PVec{one, one},
                          PVec{{2.0, 0.0}, one});
}

}  // namespace

Report run_job(const JobSpec& job) {
  for (const PVec& a : job.arc_colors)
    if (is_zero_vector(a, job.tol.tol_zero))
      bad_job("arc colors must be nonzero vectors");

  const LinkDiagram d = build_diagram(job.pd);

  Report rep;
  (void)check_arc_relations(d, job.arc_colors, job.tol.tol_rel,
                            &rep.relation_residual);

  ShadowColoring s = find_generic_coloring(d, job.arc_colors, job.seed,
                                           job.region_colors, job.p,
                                           job.tol.tol_sep);
  rep.propagation_residual = closure_residual(d, s.arc_colors, s.region_colors);
  if (rep.propagation_residual > job.tol.tol_rel)
    throw Error(ErrorCode::InconsistentPropagation,
                "region colors fail the left/right closure rule",
                {{"residual", std::to_string(rep.propagation_residual)}});
  rep.genericity_margin =
      check_genericity(d, s, job.tol.tol_sep, /*strict=*/true).min_separation;

  std::vector<bool> degenerate;
  for (std::size_t j = 0; j < d.crossings.size(); ++j) {
    degenerate.push_back(crossing_degenerate(d, s, int(j), job.tol.tol_sep));
    rep.crossing_signs.push_back(d.crossings[j].sign);
    if (degenerate.back()) rep.degenerate_crossings.push_back(int(j));
  }

  const PotentialFunction pf = build_potential(d, degenerate);
  const ConstructedSolution sol = construct_solution(d, s, pf);

  rep.h_residual = check_saddle(pf, sol.assignment).max_residual;
  if (rep.h_residual > job.tol.tol_h)
    throw Error(ErrorCode::NotAtSaddle,
                "constructed point misses the saddle tolerance",
                {{"residual", std::to_string(rep.h_residual)},
                 {"tolerance", std::to_string(job.tol.tol_h)}});

  const Complex v0 = eval_V0(pf, sol.assignment);
  const ComplexVolumeResult cv = extract_complex_volume(v0);
  rep.vol = cv.vol;
  rep.cs_mod_pi2 = cv.cs_mod_pi2;
  rep.v0_re = v0.real();
  rep.v0_im = v0.imag();

  const SimplifiedPotential sp = build_simplified(pf);
  const auto rs = r_values(sp, sol.assignment, /*strict=*/true,
                           job.tol.tol_int);
  for (const Complex& r : rs) {
    rep.r_values.push_back(r.real());
    const double even = 2.0 * std::round(r.real() / 2.0);
    rep.r_integrality =
        std::max(rep.r_integrality, std::abs(r - even));
  }

  if (job.cross_check) {
    CrossCheckReport cc;
    const auto tets = build_tetrahedra(d, s, job.debug_degenerate);
    const auto classes = build_edge_classes(tets, d, job.tol.tol_int);
    Complex total{};
    for (std::size_t ti = 0; ti < tets.size(); ++ti) {
      const SignedTetrahedron& t = tets[ti];
      cc.max_ptolemy_residual =
          std::max(cc.max_ptolemy_residual, ptolemy_residual(t));
      TetRow row;
      row.sigma = t.sigma;
      row.crossing = t.crossing;
      if (t.cancelling) {
        const Complex u = snap_below_cut(cross_ratio_tuple(t));
        row.z_re = u.real();
        row.z_im = u.imag();
        row.quad = '-';
      } else {
        const FlattenedTetrahedron ft =
            flatten(t, classes, int(ti), /*strict=*/true, job.tol.tol_int);
        total += double(ft.sigma) * lhat(ft);
        row.z_re = ft.z.real();
        row.z_im = ft.z.imag();
        row.p = ft.p;
        row.q = ft.q;
        row.quad = quad_letter(t.quad);
        cc.max_pq_residual = std::max(cc.max_pq_residual, ft.pq_residual);
      }
      cc.tetrahedra.push_back(row);
    }
    for (const Complex& prod :
         gluing_products(tets, classes, /*strict=*/true, job.tol.tol_int))
      cc.max_gluing_defect = std::max(cc.max_gluing_defect,
                                      std::abs(prod - Complex{1.0, 0.0}));
    cc.lhat_sum_re = total.real();
    cc.lhat_sum_im = total.imag();
    cc.agreement = std::max(mod_pi2_dist(total.real(), v0.real()),
                            std::abs(total.imag() - v0.imag()));
    if (cc.agreement > job.tol.tol_agree)
      throw Error(ErrorCode::GluingMismatch,
                  "triangulation total disagrees with the potential value",
                  {{"agreement", std::to_string(cc.agreement)}});
    rep.cross_check = std::move(cc);
  }
  return rep;
}

JobSpec parse_jobspec(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::exception& e) {
    bad_job(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad_job("expected a JSON object");
  if (!doc.contains("pd")) bad_job("missing \"pd\"");
  if (!doc.contains("arc_colors")) bad_job("missing \"arc_colors\"");

  JobSpec job;
  job.pd = parse_pd(doc["pd"].dump());
  job.arc_colors = pvec_list_from_json(doc["arc_colors"], "arc_colors");
  if (doc.contains("region_colors"))
    job.region_colors =
        pvec_list_from_json(doc["region_colors"], "region_colors");
  if (doc.contains("p")) job.p = pvec_from_json(doc["p"]);
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) bad_job("seed must be unsigned");
    job.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    if (!t.is_object()) bad_job("tolerances must be an object");
    auto get = [&](const char* key, double& slot) {
      if (t.contains(key)) {
        if (!t[key].is_number()) bad_job("tolerance values must be numbers");
        slot = t[key].get<double>();
      }
    };
    get("zero", job.tol.tol_zero);
    get("sep", job.tol.tol_sep);
    get("rel", job.tol.tol_rel);
    get("h", job.tol.tol_h);
    get("int", job.tol.tol_int);
    get("agree", job.tol.tol_agree);
  }
  if (doc.contains("cross_check")) {
    if (!doc["cross_check"].is_boolean()) bad_job("cross_check must be bool");
    job.cross_check = doc["cross_check"].get<bool>();
  }
  if (doc.contains("debug_degenerate")) {
    if (!doc["debug_degenerate"].is_boolean())
      bad_job("debug_degenerate must be bool");
    job.debug_degenerate = doc["debug_degenerate"].get<bool>();
  }
  return job;
}

std::string jobspec_to_json(const JobSpec& job) {
  ordered_json doc;
  ordered_json pd = ordered_json::array();
  for (const auto& row : job.pd.crossings)
    pd.push_back(ordered_json::array({row[0], row[1], row[2], row[3]}));
  doc["pd"] = std::move(pd);
  ordered_json arcs = ordered_json::array();
  for (const PVec& v : job.arc_colors) arcs.push_back(pvec_to_json(v));
  doc["arc_colors"] = std::move(arcs);
  if (job.region_colors) {
    ordered_json regions = ordered_json::array();
    for (const PVec& v : *job.region_colors)
      regions.push_back(pvec_to_json(v));
    doc["region_colors"] = std::move(regions);
  }
  if (job.p) doc["p"] = pvec_to_json(*job.p);
  doc["seed"] = job.seed;
  doc["tolerances"] = {{"zero", job.tol.tol_zero}, {"sep", job.tol.tol_sep},
                       {"rel", job.tol.tol_rel},   {"h", job.tol.tol_h},
                       {"int", job.tol.tol_int},   {"agree", job.tol.tol_agree}};
  doc["cross_check"] = job.cross_check;
  doc["debug_degenerate"] = job.debug_degenerate;
  return doc.dump(2);
}

std::string report_to_json(const Report& report) {
  ordered_json doc;
  doc["volume"] = report.vol;
  doc["cs_mod_pi2"] = report.cs_mod_pi2;
  doc["v0"] = ordered_json::array({report.v0_re, report.v0_im});
  doc["h_residual"] = report.h_residual;
  doc["relation_residual"] = report.relation_residual;
  doc["propagation_residual"] = report.propagation_residual;
  doc["genericity_margin"] = report.genericity_margin;
  doc["r_values"] = report.r_values;
  doc["r_integrality"] = report.r_integrality;
  doc["crossing_signs"] = report.crossing_signs;
  doc["degenerate_crossings"] = report.degenerate_crossings;
  if (report.cross_check) {
    const CrossCheckReport& cc = *report.cross_check;
    ordered_json rows = ordered_json::array();
    for (const TetRow& row : cc.tetrahedra) {
      ordered_json r;
      r["z"] = ordered_json::array({row.z_re, row.z_im});
      r["p"] = row.p;
      r["q"] = row.q;
      r["sigma"] = row.sigma;
      r["crossing"] = row.crossing;
      r["quad"] = std::string(1, row.quad);
      rows.push_back(std::move(r));
    }
    ordered_json ccj;
    ccj["tetrahedra"] = std::move(rows);
    ccj["lhat_sum"] = ordered_json::array({cc.lhat_sum_re, cc.lhat_sum_im});
    ccj["agreement"] = cc.agreement;
    ccj["max_pq_residual"] = cc.max_pq_residual;
    ccj["max_ptolemy_residual"] = cc.max_ptolemy_residual;
    ccj["max_gluing_defect"] = cc.max_gluing_defect;
    doc["cross_check"] = std::move(ccj);
  }
  return doc.dump(2);
}

std::string error_to_json(const Error& err) {
  ordered_json doc;
  ordered_json e;
  e["code"] = error_code_name(err.code());
  e["message"] = err.what();
  ordered_json details = ordered_json::object();
  for (const auto& [key, value] : err.details()) details[key] = value;
  e["details"] = std::move(details);
  e["validation"] = is_validation_error(err.code());
  doc["error"] = std::move(e);
  return doc.dump(2);
}

JobSpec builtin_example(const std::string& name) {
  if (name == "fig8_minus") return example_fig8(false);
  if (name == "fig8_plus") return example_fig8(true);
  if (name == "trefoil") return example_trefoil();
  throw Error(ErrorCode::UnknownExample, "unknown example \"" + name + "\"",
              {{"name", name}});
}

std::vector<std::string> builtin_example_names() {
  return {"fig8_minus", "fig8_plus", "trefoil"};
}

}  // namespace qvol
