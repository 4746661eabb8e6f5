#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qvol/coloring.hpp"
#include "qvol/diagram.hpp"
#include "qvol/errors.hpp"
#include "qvol/quandle.hpp"

namespace qvol {

// Tolerances threaded through the pipeline.  Members mirror the knobs of the
// individual modules; a JobSpec may override any of them.
struct Tolerances {
  double tol_zero = 1e-12;   // projective "is this coordinate zero"
  double tol_sep = 1e-9;     // genericity separation (chordal metric)
  double tol_rel = 1e-9;     // relation / propagation closure
  double tol_h = 1e-9;       // saddle residual gate
  double tol_int = 1e-9;     // integrality of r_k and (p, q)
  double tol_agree = 1e-6;   // cross-check agreement mod pi^2
};

// A complete job: diagram, coloring data, options.  Region colors and p are
// optional; when absent they are searched for deterministically from `seed`.
struct JobSpec {
  PdCode pd;
  std::vector<PVec> arc_colors;
  std::optional<std::vector<PVec>> region_colors;
  std::optional<PVec> p;
  std::uint64_t seed = 0;
  Tolerances tol;
  bool cross_check = false;
  bool debug_degenerate = false;
};

struct TetRow {
  double z_re = 0.0, z_im = 0.0;
  int p = 0, q = 0, sigma = 0;
  int crossing = -1;
  char quad = '?';
};

struct CrossCheckReport {
  std::vector<TetRow> tetrahedra;
  double lhat_sum_re = 0.0, lhat_sum_im = 0.0;
  double agreement = 0.0;        // mod-pi^2 distance from V0
  double max_pq_residual = 0.0;
  double max_ptolemy_residual = 0.0;
  double max_gluing_defect = 0.0;
};

struct Report {
  double vol = 0.0;
  double cs_mod_pi2 = 0.0;
  double v0_re = 0.0, v0_im = 0.0;
  double h_residual = 0.0;             // max saddle residual
  double relation_residual = 0.0;      // worst crossing-relation defect
  double propagation_residual = 0.0;   // worst closure defect
  double genericity_margin = 0.0;      // smallest chordal separation
  std::vector<double> r_values;        // one per z-class
  double r_integrality = 0.0;          // distance from nearest even integers
  std::vector<int> crossing_signs;
  std::vector<int> degenerate_crossings;
  std::optional<CrossCheckReport> cross_check;
};

// Run the full pipeline on a job.  Throws Error on validation failures
// (malformed input, relation violations, failed search) and on numerical
// gate failures (saddle residual above tol_h, non-integral flattening,
// cross-check disagreement).
Report run_job(const JobSpec& job);

// --- JSON interface --------------------------------------------------------
// JobSpec JSON schema:
//   {
//     "pd": [[a,b,c,d], ...],
//     "arc_colors": [[[re,im],[re,im]], ...],
//     "region_colors": [...],          // optional, same shape
//     "p": [[re,im],[re,im]],          // optional
//     "seed": 0,                       // optional
//     "tolerances": {"h": ..., ...},   // optional overrides
//     "cross_check": false,            // optional
//     "debug_degenerate": false        // optional
//   }
// Complex numbers are [re, im] pairs; projective vectors are pairs of them.
JobSpec parse_jobspec(const std::string& json_text);
std::string jobspec_to_json(const JobSpec& job);

// Deterministic (byte-stable) report serialization.
std::string report_to_json(const Report& report);

// Error serialization: {"error": {"code": ..., "message": ..., "details": {...}}}.
std::string error_to_json(const Error& err);

// Built-in example jobs: "fig8_minus", "fig8_plus", "trefoil".
// Throws Error(UnknownExample) otherwise.
JobSpec builtin_example(const std::string& name);
std::vector<std::string> builtin_example_names();

}  // namespace qvol
