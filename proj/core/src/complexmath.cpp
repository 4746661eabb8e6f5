#include "qvol/complexmath.hpp"

#include <cmath>
#include <cstdlib>

namespace qvol {
namespace {

// Coefficients B_n / (n + 1)! of the log-argument series
//   Li2(z) = sum_n c_n u^{n+1},  u = -log(1 - z),
// for n = 0, 1 and then even n = 2, 4, ..., 44 (odd n > 1 vanish).
constexpr double kLogSeries[] = {
    1.0,
    -0.25,
    0.027777777777777777778,
    -0.00027777777777777777778,
    4.7241118669690098262e-6,
    -9.1857730746619635509e-8,
    1.8978869988970999072e-9,
    -4.0647616451442255268e-11,
    8.9216910204564525552e-13,
    -1.9939295860721075687e-14,
    4.5189800296199181917e-16,
    -1.0356517612181247014e-17,
    2.3952186210261867457e-19,
    -5.5817858743250093363e-21,
    1.3091507554183212858e-22,
    -3.0874198024267402932e-24,
    7.3159756527022034204e-26,
    -1.7408456572340007410e-27,
    4.1576356446138997196e-29,
    -9.9621484882846221032e-31,
    2.3940344248961653005e-32,
    -5.7683473553673900843e-34,
    1.3931794796470079778e-35,
    -3.3721219654850894705e-37,
};
constexpr int kLogSeriesCount = int(sizeof(kLogSeries) / sizeof(double));

constexpr double kPiSq6 = kPiSq / 6.0;

// Power series sum z^k / k^2 for |z| <= 1/2.
Complex li2_series(Complex z) {
  Complex sum = z;
  Complex zp = z;
  for (int k = 2; k <= 200; ++k) {
    zp *= z;
    const Complex term = zp / double(k * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Series in u = -log(1 - z), valid away from z = 0 and z = 1.
Complex li2_log_series(Complex z) {
  const Complex u = -clog(1.0 - z);
  const Complex u2 = u * u;
  Complex sum = kLogSeries[0] * u + kLogSeries[1] * u2;
  Complex up = u * u2;
  for (int i = 2; i < kLogSeriesCount; ++i) {
    const Complex term = kLogSeries[i] * up;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    up *= u2;
  }
  return sum;
}

}  // namespace

Complex li2(Complex z) {
  if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
  if (z == Complex(0.0, 0.0)) return {};
  if (z == Complex(1.0, 0.0)) return {kPiSq6, 0.0};
  const double az = std::abs(z);
  if (az > 1.0) {
    // Inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log(-z)^2 / 2.  For exactly
    // real z > 1 the canonicalized log(-z) lands on the +i*pi side, which
    // yields the lower lip of the cut for Li2 itself.
    const Complex lm = clog(-z);
    return -li2(1.0 / z) - kPiSq6 - 0.5 * lm * lm;
  }
  if (az <= 0.5) return li2_series(z);
  if (std::abs(1.0 - z) < 0.5) {
    // Reflection: Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z).
    return kPiSq6 - clog(z) * clog(1.0 - z) - li2(1.0 - z);
  }
  return li2_log_series(z);
}

double mod_pi2(double x) {
  double y = std::remainder(x, kPiSq);
  if (y <= -kPiSq / 2.0) y += kPiSq;
  return y;
}

double mod_pi2_dist(double x, double y) {
  double best = std::abs(x - y);
  for (int k = -8; k <= 8; ++k)
    best = std::min(best, std::abs(x - y - k * kPiSq));
  return best;
}

double pi2_multiple_residual(double x) {
  return std::abs(x - std::round(x / kPiSq) * kPiSq);
}

Complex snap_below_cut(Complex u, double rel_tol) {
  if (std::abs(u.imag()) < rel_tol * std::abs(u))
    return {u.real(), -std::abs(u.real()) * 1e-25};
  return u;
}

Complex lhat_term_with_logs(Complex z, Complex log_z, Complex log_1mz, int p,
                            int q) {
  const Complex ipi_half{0.0, kPi / 2.0};
  return li2(z) + 0.5 * log_z * log_1mz +
         ipi_half * (double(q) * log_z + double(p) * log_1mz) - kPiSq6;
}

Complex lhat_term(Complex z, int p, int q) {
  return lhat_term_with_logs(z, clog(z), clog(1.0 - z), p, q);
}

}  // namespace qvol
