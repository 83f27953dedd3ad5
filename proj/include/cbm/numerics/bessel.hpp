#pragma once

namespace cbm {

// Zero-order Bessel function of the first kind, J0(0) = 1.
// Power series below |x| = 12, Hankel asymptotic expansion above.
// Absolute error below 1e-10 on |x| <= 50. Throws DomainError for
// non-finite input.
double bessel_j0(double x);

namespace detail {
// Exposed so the seam between the two branches can be tested.
double bessel_j0_series(double x);
double bessel_j0_asymptotic(double x);
inline constexpr double kBesselSeam = 12.0;
}  // namespace detail

}  // namespace cbm
