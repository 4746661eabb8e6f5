#pragma once

#include <map>

#include "qvol/coloring.hpp"
#include "qvol/potential.hpp"

namespace qvol {

// The saddle point constructed directly from a shadow coloring: z-values from
// det-ratios per side, w-values per degenerate crossing.
struct ConstructedSolution {
  Assignment assignment;
  std::map<int, std::array<Complex, 3>> w_by_crossing;  // degenerate only
};

ConstructedSolution construct_solution(const LinkDiagram& d,
                                       const ShadowColoring& s,
                                       const PotentialFunction& pf);

struct ComplexVolumeResult {
  Complex v0;          // value of V0 at the constructed point
  double vol;          // Im V0
  double cs_mod_pi2;   // -Re V0 reduced to (-pi^2/2, pi^2/2]
};

// vol + i CS from V0: vol = Im V0, CS = -Re V0 (mod pi^2).
ComplexVolumeResult extract_complex_volume(Complex v0);

}  // namespace qvol
