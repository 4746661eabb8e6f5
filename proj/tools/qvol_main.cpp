// qvol: complex volumes of parabolic link-group representations from
// PD-coded diagrams with quandle shadow-colorings.
//
// Exit codes: 0 success, 1 invalid input, 2 numerical certificate failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qvol/coloring.hpp"
#include "qvol/diagram.hpp"
#include "qvol/errors.hpp"
#include "qvol/pipeline.hpp"

namespace {

struct Options {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  bool cross_check = false;
  std::string json_out;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw qvol::Error(qvol::ErrorCode::MalformedJob,
                      "cannot open file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void apply_options(qvol::JobSpec& job, const Options& opt) {
  if (opt.seed) job.seed = *opt.seed;
  if (opt.tol) job.tol.tol_h = *opt.tol;
  if (opt.cross_check) job.cross_check = true;
}

void maybe_write_json(const Options& opt, const std::string& text) {
  if (opt.json_out.empty()) return;
  std::ofstream out(opt.json_out, std::ios::binary);
  if (!out)
    throw qvol::Error(qvol::ErrorCode::MalformedJob,
                      "cannot write \"" + opt.json_out + "\"");
  out << text << "\n";
}

void print_report(const qvol::Report& rep) {
  std::printf("volume               %.15g\n", rep.vol);
  std::printf("cs_mod_pi2           %.15g\n", rep.cs_mod_pi2);
  std::printf("v0                   %.15g %+.15gi\n", rep.v0_re, rep.v0_im);
  std::printf("saddle_residual      %.3g\n", rep.h_residual);
  std::printf("genericity_margin    %.3g\n", rep.genericity_margin);
  std::printf("crossing_signs      ");
  for (const int s : rep.crossing_signs) std::printf(" %c", s > 0 ? '+' : '-');
  std::printf("\n");
  std::printf("degenerate          ");
  if (rep.degenerate_crossings.empty()) {
    std::printf(" (none)");
  } else {
    for (const int j : rep.degenerate_crossings) std::printf(" %d", j);
  }
  std::printf("\n");
  std::printf("r_values            ");
  for (const double r : rep.r_values) std::printf(" %.0f", r);
  std::printf("  (integrality %.3g)\n", rep.r_integrality);
  if (rep.cross_check) {
    const auto& cc = *rep.cross_check;
    std::printf("cross_check          %zu tetrahedra, agreement %.3g\n",
                cc.tetrahedra.size(), cc.agreement);
    std::printf("                     pq %.3g, ptolemy %.3g, gluing %.3g\n",
                cc.max_pq_residual, cc.max_ptolemy_residual,
                cc.max_gluing_defect);
  }
}

int cmd_volume(const qvol::JobSpec& base, const Options& opt) {
  qvol::JobSpec job = base;
  apply_options(job, opt);
  const qvol::Report rep = qvol::run_job(job);
  print_report(rep);
  maybe_write_json(opt, qvol::report_to_json(rep));
  return 0;
}

int cmd_check(const qvol::JobSpec& base, const Options& opt) {
  qvol::JobSpec job = base;
  apply_options(job, opt);
  const qvol::LinkDiagram d = qvol::build_diagram(job.pd);
  double relation_residual = 0.0;
  (void)qvol::check_arc_relations(d, job.arc_colors, job.tol.tol_rel,
                                  &relation_residual);
  const qvol::ShadowColoring s = qvol::find_generic_coloring(
      d, job.arc_colors, job.seed, job.region_colors, job.p, job.tol.tol_sep);
  const auto gen = qvol::check_genericity(d, s, job.tol.tol_sep,
                                          /*strict=*/true);

  std::printf("check                ok\n");
  std::printf("crossings            %zu\n", d.crossing_count());
  std::printf("sides                %zu\n", d.sides.size());
  std::printf("components           %zu\n", d.components.size());
  std::printf("arcs                 %zu\n", d.arcs.size());
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    std::printf("  arc %-2zu             ", a);
    for (const int lab : d.arcs[a]) std::printf(" %d", lab);
    std::printf("\n");
  }
  std::printf("regions              %zu\n", d.regions.size());
  for (std::size_t r = 0; r < d.regions.size(); ++r) {
    std::printf("  region %-2zu          ", r);
    for (const auto& [lab, dirn] : d.regions[r].boundary)
      std::printf(" %d%c", lab, dirn > 0 ? '+' : '-');
    std::printf("\n");
  }
  std::printf("relation_residual    %.3g\n", relation_residual);
  std::printf("closure_residual     %.3g\n",
              qvol::closure_residual(d, s.arc_colors, s.region_colors));
  std::printf("genericity_margin    %.3g\n", gen.min_separation);
  int degenerate = 0;
  for (std::size_t j = 0; j < d.crossings.size(); ++j)
    if (qvol::crossing_degenerate(d, s, int(j), job.tol.tol_sep)) ++degenerate;
  std::printf("degenerate           %d of %zu crossings\n", degenerate,
              d.crossings.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Complex volume (hyperbolic volume + i CS) of a parabolic "
      "representation defined by a PD code and a shadow-coloring"};
  app.require_subcommand(1);

  Options opt;
  std::string path, example_name;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed,
                    "Seed for the deterministic coloring search");
    sub->add_option("--tol", opt.tol, "Saddle-point residual tolerance");
    sub->add_flag("--cross-check", opt.cross_check,
                  "Also evaluate the triangulated dilogarithm sum");
    sub->add_option("--json-out", opt.json_out,
                    "Write the full report as JSON to this path");
  };

  CLI::App* volume = app.add_subcommand(
      "volume", "Compute the complex volume of a job file (\"-\" = stdin)");
  volume->add_option("file", path, "Job file")->required();
  add_common(volume);

  CLI::App* check = app.add_subcommand(
      "check", "Validate a job file and print the diagram structure");
  check->add_option("file", path, "Job file")->required();
  add_common(check);

  CLI::App* examples =
      app.add_subcommand("examples", "Run a built-in example");
  std::string names;
  for (const auto& n : qvol::builtin_example_names())
    names += (names.empty() ? "" : ", ") + n;
  examples->add_option("name", example_name, "One of: " + names)->required();
  add_common(examples);

  CLI11_PARSE(app, argc, argv);

  try {
    if (volume->parsed())
      return cmd_volume(qvol::parse_jobspec(slurp(path)), opt);
    if (check->parsed())
      return cmd_check(qvol::parse_jobspec(slurp(path)), opt);
    return cmd_volume(qvol::builtin_example(example_name), opt);
  } catch (const qvol::Error& e) {
    std::fprintf(stderr, "error [%s]: %s\n", qvol::error_code_name(e.code()),
                 e.what());
    if (!opt.json_out.empty()) {
      std::ofstream out(opt.json_out, std::ios::binary);
      if (out) out << qvol::error_to_json(e) << "\n";
    }
    return qvol::is_validation_error(e.code()) ? 1 : 2;
  }
}
