#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qvol/diagram.hpp"
#include "qvol/quandle.hpp"

namespace qvol {

// A shadow coloring of a link diagram: one projective vector per arc, one per
// region, plus one auxiliary vector p.  Region colors satisfy the rule
// "left = right * (arc color)" across every side, and arc colors satisfy the
// crossing relation (out = in * over) up to sign.
struct ShadowColoring {
  std::vector<PVec> arc_colors;     // indexed by arc
  std::vector<PVec> region_colors;  // indexed by region
  PVec p;
};

// Verify the crossing relation qop(arc at port h, arc at port g) =
// +-(arc at port f) at every crossing, within tol on the better of the two
// signs.  Returns the realised sign (+1/-1) per crossing; throws
// Error(RelationViolated) on failure.  If out_residual is non-null it
// receives the worst defect.
std::vector<int> check_arc_relations(const LinkDiagram& d,
                                     const std::vector<PVec>& arc_colors,
                                     double tol = 1e-9,
                                     double* out_residual = nullptr);

// Propagate region colors from a single seeded region by breadth-first search
// across sides (left = right * arc, right = left *^{-1} arc), then check
// closure of every side within tol.  Throws Error(InconsistentPropagation) if
// a revisited region disagrees.
std::vector<PVec> propagate_regions(const LinkDiagram& d,
                                    const std::vector<PVec>& arc_colors,
                                    int seed_region, const PVec& seed_color,
                                    double tol = 1e-9);

// Crossing-local data extracted from a coloring.
bool crossing_degenerate(const LinkDiagram& d, const ShadowColoring& s,
                         int crossing, double tol_sep = 1e-9);

// z-value of a side k: det2(a, p) / det2(a, r) where a is the color of the
// arc containing k and r is the color of the region to the right of k.
Complex z_value(const LinkDiagram& d, const ShadowColoring& s, int side);

// The three independent w-values (w_e, w_f, w_g) of a degenerate crossing.
std::array<Complex, 3> w_values(const LinkDiagram& d, const ShadowColoring& s,
                                int crossing);

// All four quadrant region colors of a crossing, as projective vectors
// recomputed from the right-hand seed by quandle operations (matches the
// stored region colors up to sign).
std::array<PVec, 4> quadrant_colors(const LinkDiagram& d,
                                    const ShadowColoring& s, int crossing);

struct GenericityReport {
  bool ok = true;
  double min_separation = 0.0;         // smallest chordal gap encountered
  std::vector<std::string> failures;   // human-readable descriptions
};

// Genericity: for each side the three points h(arc), h(right region),
// h(left region) are pairwise distinct in the chordal metric, and h(p) stays
// away from every arc and region image.  Throws Error(GenericityViolated)
// when `strict` and a gap falls below tol_sep.
GenericityReport check_genericity(const LinkDiagram& d,
                                  const ShadowColoring& s,
                                  double tol_sep = 1e-9, bool strict = false);

// Worst closure defect max |qop(right, arc) - left| over all sides.
double closure_residual(const LinkDiagram& d, const std::vector<PVec>& arcs,
                        const std::vector<PVec>& regions);

// Deterministic completion of a coloring.  Components already present
// (region colors and/or p) are kept and validated; missing ones are searched
// for with small-integer seeds drawn from a seeded RNG over a growing range,
// rejecting non-generic candidates.  Throws Error(SearchExhausted) after
// max_tries failures.
ShadowColoring find_generic_coloring(
    const LinkDiagram& d, const std::vector<PVec>& arc_colors,
    std::uint64_t seed,
    const std::optional<std::vector<PVec>>& region_colors = std::nullopt,
    const std::optional<PVec>& p = std::nullopt, double tol_sep = 1e-9,
    int max_tries = 10000);

}  // namespace qvol
