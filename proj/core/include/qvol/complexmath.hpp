#pragma once

#include <complex>
#include <numbers>

namespace qvol {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPiSq = kPi * kPi;

// Principal complex logarithm with deterministic treatment of the negative
// real axis: an imaginary part of -0.0 is canonicalized to +0.0 first, so
// log(-x) = ln x + i*pi for every exactly-real negative input regardless of
// how the zero was produced upstream.
inline Complex clog(Complex z) {
  if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
  return std::log(z);
}

// Dilogarithm Li2(z) = -\int_0^z log(1-t)/t dt, principal branch with the
// cut on [1, inf).  Exactly-real inputs x > 1 evaluate on the lower side of
// the cut (continuity from below): Li2(x) = P(x) - i*pi*ln x.  Relative
// accuracy ~1e-15; see the frozen high-precision oracle table in the tests.
Complex li2(Complex z);

// Canonical representative of x modulo pi^2 in (-pi^2/2, pi^2/2].
double mod_pi2(double x);

// min_{k in [-8, 8]} |x - y - k*pi^2|: distance between two values that are
// expected to agree modulo pi^2 and to lie within a few multiples of it.
double mod_pi2_dist(double x, double y);

// |x - round(x / pi^2) * pi^2|: residual of x from the *nearest* integer
// multiple of pi^2, for differences that may be large multiples.
double pi2_multiple_residual(double x);

// Branch-cut alignment for tetrahedron shapes.  A shape that is real up to
// roundoff sits on the cuts of both Li2 and log(1-z); this nudges it to the
// lower side of the real axis so every consumer (Li2, log, log(1-.)) sees
// the same side.  The companion value 1-u must then be derived from the
// returned u, never recomputed from independent products.
Complex snap_below_cut(Complex u, double rel_tol = 1e-9);

// Rogers-type dilogarithm of a flattened shape:
//   Li2(z) + (1/2) log z log(1-z) + (i*pi/2)(q log z + p log(1-z)) - pi^2/6
// with both logs principal and 1-z derived from z.
Complex lhat_term(Complex z, int p, int q);

// Variant with explicit log values, used by the branch-transfer tests.
Complex lhat_term_with_logs(Complex z, Complex log_z, Complex log_1mz, int p,
                            int q);

}  // namespace qvol
