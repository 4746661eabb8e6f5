#pragma once

#include <array>
#include <map>
#include <vector>

#include "qvol/coloring.hpp"
#include "qvol/complexmath.hpp"
#include "qvol/diagram.hpp"

namespace qvol {

// One crossing's contribution to the potential function.  Sides are recorded
// at ports (e, f, g, h); a degenerate crossing contributes a purely
// logarithmic term driven by its three w-parameters instead of dilogarithms.
struct CrossingTerm {
  int crossing = -1;
  int sign = 0;
  bool degenerate = false;
  std::array<int, 4> sides{};    // side labels at ports e, f, g, h
  std::array<int, 3> windex{};   // indices into Assignment::w (w_e, w_f, w_g)
};

// The symbol of the potential: which variables appear and how.
struct PotentialFunction {
  std::vector<CrossingTerm> terms;
  std::vector<int> z_sides;   // side labels carrying a z-variable (all sides)
  int w_count = 0;            // 3 per degenerate crossing
};

// Point at which the potential is evaluated.
struct Assignment {
  std::map<int, Complex> z;   // side label -> z-value
  std::vector<Complex> w;     // flattened (w_e, w_f, w_g) blocks
};

PotentialFunction build_potential(const LinkDiagram& d,
                                  const std::vector<bool>& degenerate);

// V = sum over crossings of Li2(z_f/z_e) - Li2(z_f/z_g) + Li2(z_h/z_g)
//      - Li2(z_h/z_e) for non-degenerate crossings, and
//     -log w_e log z_e + log w_f log z_f - log w_g log z_g
//      + (log w_e + log w_g - log w_f) log z_h for degenerate ones,
// with every logarithm principal.  The crossing sign is already encoded in
// the slot -> port assignment, so no explicit sign factor appears.
Complex eval_potential(const PotentialFunction& pf, const Assignment& a);

// All partial derivatives z_k dV/dz_k at once, closed form: sums of
// principal logarithms log(1 - ratio) plus the logarithmic terms of
// degenerate crossings.  Throws Error(ArgumentOnCut) if some ratio equals 1
// within tol (the derivative has a pole there) or a log argument vanishes.
std::map<int, Complex> grad_z_all(const PotentialFunction& pf,
                                  const Assignment& a, double tol = 1e-12);

// Single-variable convenience wrapper around grad_z_all.
Complex grad_z(const PotentialFunction& pf, const Assignment& a, int side,
               double tol = 1e-12);

// All derivatives w_j dV/dw_j (differences of log z over the degenerate
// crossings), indexed like Assignment::w.
std::vector<Complex> grad_w_all(const PotentialFunction& pf,
                                const Assignment& a);

// w d/dw of the degenerate term of one crossing; which in {0,1,2} selects
// (w_e, w_f, w_g).
Complex grad_w(const PotentialFunction& pf, const Assignment& a, int crossing,
               int which);

struct HReport {
  double max_residual = 0.0;               // max |exp(grad) - 1|
  std::map<int, double> z_residuals;       // per side
  std::vector<double> w_residuals;         // per w-variable
};

// Saddle-point residuals: |exp(z dV/dz) - 1| for every z and |exp(w dV/dw)-1|
// for every w.
HReport check_saddle(const PotentialFunction& pf, const Assignment& a);

// V0 = V - sum_k (z_k dV/dz_k) log z_k - sum_j (w_j dV/dw_j) log w_j.
Complex eval_V0(const PotentialFunction& pf, const Assignment& a);

// V0 with every log z_k replaced by log z_k + 2 pi i m_k and log w_j by
// log w_j + 2 pi i n_j, consistently through V, the gradients and the
// correction terms.  Differs from eval_V0 by an exact multiple of pi^2.
Complex eval_V0_shifted(const PotentialFunction& pf, const Assignment& a,
                        const std::map<int, int>& z_shifts,
                        const std::vector<int>& w_shifts);

// --- Simplified potential -------------------------------------------------
// Degenerate crossings force all four of their z-variables equal; the
// simplified potential identifies them (union-find over side labels) and
// keeps only the dilogarithm terms.
struct SimplifiedPotential {
  PotentialFunction pf;            // the original symbol
  std::map<int, int> side_class;   // side label -> class id
  std::vector<std::vector<int>> classes;  // member side labels per class
  std::vector<int> rep;            // representative side label per class
};

SimplifiedPotential build_simplified(const PotentialFunction& pf);

// r_k = (z_k dVhat/dz_k) / (pi i) per z-class, evaluated with each
// dilogarithm argument snapped to the lower lip of the branch cut when it
// lands on [1, infinity).  At a saddle these are even integers summing to 0;
// throws Error(NotAtSaddle) when `strict` and some r_k strays from an
// integer by more than tol.
std::vector<Complex> r_values(const SimplifiedPotential& sp,
                              const Assignment& a, bool strict = false,
                              double tol = 1e-9);

// Vhat0 = sum sign * Li2(snapped ratio) - sum_k r_k pi i log z_k, congruent
// to eval_V0 modulo pi^2 at a saddle.
Complex eval_Vhat0(const SimplifiedPotential& sp, const Assignment& a);

}  // namespace qvol
