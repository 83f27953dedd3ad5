#include "cbm/numerics/bessel.hpp"

#include <cmath>
#include <numbers>

#include "cbm/errors.hpp"

namespace cbm {
namespace detail {

double bessel_j0_series(double x) {
  // sum_k (-1)^k (x/2)^{2k} / (k!)^2, accumulated in extended precision;
  // the largest term near |x| = 12 is ~4e3 so cancellation costs ~4 digits.
  const long double q = static_cast<long double>(x) * x / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<long double>(k) * k);
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum) + 1e-30L) break;
  }
  return static_cast<double>(sum);
}

double bessel_j0_asymptotic(double x) {
  x = std::fabs(x);
  // J0(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi), chi = x - pi/4, with
  // |a_k| = prod_{j<=k} (2j-1)^2 / (k! 8^k) split between P and Q.
  const double inv = 1.0 / x;
  double p = 0.0;
  double q = 0.0;
  double a = 1.0;       // a_k
  double power = 1.0;   // x^{-k}
  double previous = INFINITY;
  for (int k = 0; k < 60; ++k) {
    const double term = a * power;
    if (term > previous) break;  // asymptotic series: stop at the smallest term
    previous = term;
    // For nu = 0, a_k carries (-1)^k, so P alternates starting at +1 and
    // Q alternates starting at -1/(8x).
    const int m = k / 2;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * term;
    } else {
      q -= sign * term;
    }
    if (term < 1e-18) break;
    const double odd = 2.0 * (k + 1) - 1.0;
    a *= odd * odd / ((k + 1) * 8.0);
    power *= inv;
  }
  const double chi = x - std::numbers::pi / 4.0;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace detail

double bessel_j0(double x) {
  if (!std::isfinite(x)) throw DomainError("bessel_j0: non-finite argument");
  const double ax = std::fabs(x);
  if (ax < detail::kBesselSeam) return detail::bessel_j0_series(ax);
  return detail::bessel_j0_asymptotic(ax);
}

}  // namespace cbm
