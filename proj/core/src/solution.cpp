#include "qvol/solution.hpp"

#include "qvol/complexmath.hpp"

namespace qvol {

ConstructedSolution construct_solution(const LinkDiagram& d,
                                       const ShadowColoring& s,
                                       const PotentialFunction& pf) {
  ConstructedSolution out;
  for (const int k : pf.z_sides) out.assignment.z[k] = z_value(d, s, k);
  out.assignment.w.resize(pf.w_count);
  for (const CrossingTerm& t : pf.terms) {
    if (!t.degenerate) continue;
    const auto w = w_values(d, s, t.crossing);
    out.w_by_crossing[t.crossing] = w;
    for (int i = 0; i < 3; ++i) out.assignment.w[t.windex[i]] = w[i];
  }
  return out;
}

ComplexVolumeResult extract_complex_volume(Complex v0) {
  return {v0, v0.imag(), mod_pi2(-v0.real())};
}

}  // namespace qvol
