#include "qvol/quandle.hpp"

#include <algorithm>
#include <cmath>

namespace qvol {

bool eq_up_to_sign(const PVec& a, const PVec& b, double tol) {
  const double plus = std::max(std::abs(a.alpha - b.alpha),
                               std::abs(a.beta - b.beta));
  const double minus = std::max(std::abs(a.alpha + b.alpha),
                                std::abs(a.beta + b.beta));
  return std::min(plus, minus) <= tol;
}

bool is_zero_vector(const PVec& a, double tol) {
  return std::max(std::abs(a.alpha), std::abs(a.beta)) <= tol;
}

PVec qop(const PVec& a, const PVec& b) {
  const Complex g = b.alpha, d = b.beta;
  const Complex gd = g * d;
  return {(1.0 + gd) * a.alpha - g * g * a.beta,
          d * d * a.alpha + (1.0 - gd) * a.beta};
}

PVec qop_inv(const PVec& a, const PVec& b) {
  const Complex g = b.alpha, d = b.beta;
  const Complex gd = g * d;
  return {(1.0 - gd) * a.alpha + g * g * a.beta,
          -d * d * a.alpha + (1.0 + gd) * a.beta};
}

Complex det2(const PVec& a, const PVec& b) {
  return a.alpha * b.beta - a.beta * b.alpha;
}

ExtendedComplex hopf(const PVec& a, double tol_zero) {
  if (std::abs(a.beta) <= tol_zero) return ExtendedComplex::infinity();
  return ExtendedComplex::finite(a.alpha / a.beta);
}

double chordal_distance(const ExtendedComplex& x, const ExtendedComplex& y) {
  if (x.infinite && y.infinite) return 0.0;
  if (x.infinite) return 2.0 / std::sqrt(1.0 + std::norm(y.value));
  if (y.infinite) return 2.0 / std::sqrt(1.0 + std::norm(x.value));
  return 2.0 * std::abs(x.value - y.value) /
         std::sqrt((1.0 + std::norm(x.value)) * (1.0 + std::norm(y.value)));
}

Mat2 to_matrix(const PVec& a) {
  const Complex ab = a.alpha * a.beta;
  return {1.0 + ab, -a.alpha * a.alpha, a.beta * a.beta, 1.0 - ab};
}

ExtendedComplex mobius_apply(const Mat2& m, const ExtendedComplex& z,
                             double tol_zero) {
  if (z.infinite) {
    if (std::abs(m[2]) <= tol_zero) return ExtendedComplex::infinity();
    return ExtendedComplex::finite(m[0] / m[2]);
  }
  const Complex den = m[2] * z.value + m[3];
  if (std::abs(den) <= tol_zero) return ExtendedComplex::infinity();
  return ExtendedComplex::finite((m[0] * z.value + m[1]) / den);
}

}  // namespace qvol
