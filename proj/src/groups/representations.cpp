#include "cbm/groups/representations.hpp"

#include "cbm/numerics/quadrature.hpp"

namespace cbm {

std::complex<double> rho_heis3(double a, const Heis3Element& n, const LineFunction& f, double t) {
  const double phase = a * (n.z - 0.5 * n.x * n.y) + a * n.x * t;
  return std::polar(1.0, phase) * f(t - n.y);
}

std::complex<double> rho_dix4(double a, double b, const Dix4Element& n, const LineFunction& f, double t) {
  const double z1 = n.z - 0.5 * n.x * n.y;
  const double w1 = n.w - n.y * z1;
  const double phase = a * w1 + 2.0 * a * t * z1 + (a * t * t + b) * n.x;
  return std::polar(1.0, phase) * f(t - n.y);
}

std::complex<double> heis3_matrix_coefficient(double a, const Heis3Element& n, const LineFunction& f,
                                              const LineFunction& g, double lo, double hi) {
  auto integrand = [&](double t) { return rho_heis3(a, n, f, t) * std::conj(g(t)); };
  return quad::integrate(integrand, lo, hi, 0.05);
}

}  // namespace cbm
