#pragma once

#include <array>

#include "qvol/complexmath.hpp"

namespace qvol {

inline constexpr double kTolZero = 1e-12;

// A parabolic vector: a fixed representative (alpha, beta) in C^2 \ {0} of an
// element of (C^2 \ {0}) / +-.  The library never renormalizes the sign; two
// representatives of the same element compare equal only under eq_up_to_sign.
struct PVec {
  Complex alpha{};
  Complex beta{};
};

inline PVec negate(const PVec& a) { return {-a.alpha, -a.beta}; }

bool eq_up_to_sign(const PVec& a, const PVec& b, double tol = 1e-9);

// True if max(|alpha|, |beta|) <= tol: not a valid representative.
bool is_zero_vector(const PVec& a, double tol = kTolZero);

// The quandle operation a * b: the parabolic matrix of b applied to a,
//   [[1 + gd, -g^2], [d^2, 1 - gd]] . (alpha, beta)   with b = (g, d).
PVec qop(const PVec& a, const PVec& b);

// Inverse operation: qop(qop_inv(a, b), b) == a up to rounding.
PVec qop_inv(const PVec& a, const PVec& b);

// det2(a, b) = alpha_a * beta_b - beta_a * alpha_b.  Well defined on fixed
// representatives; invariant under the simultaneous action of any c.
Complex det2(const PVec& a, const PVec& b);

// A point of CP^1 = C u {inf}.
struct ExtendedComplex {
  Complex value{};
  bool infinite = false;

  static ExtendedComplex infinity() { return {Complex{}, true}; }
  static ExtendedComplex finite(Complex v) { return {v, false}; }
};

// Hopf image alpha / beta, with infinity when |beta| <= tol_zero.
ExtendedComplex hopf(const PVec& a, double tol_zero = kTolZero);

// Chordal metric on CP^1 (range [0, 2]); handles infinity symmetrically.
double chordal_distance(const ExtendedComplex& x, const ExtendedComplex& y);

// Row-major 2x2 complex matrix [[m[0], m[1]], [m[2], m[3]]].
using Mat2 = std::array<Complex, 4>;

// The parabolic PSL(2, C) matrix of a = (alpha, beta):
//   [[1 + alpha*beta, -alpha^2], [beta^2, 1 - alpha*beta]]  (det 1, trace 2).
// qop(x, a) is exactly this matrix applied to x as a column vector.
Mat2 to_matrix(const PVec& a);

// Moebius action (az + b) / (cz + d) on CP^1 with degeneration at infinity.
ExtendedComplex mobius_apply(const Mat2& m, const ExtendedComplex& z,
                             double tol_zero = kTolZero);

}  // namespace qvol
