#include "cbm/distributions/blowup.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "cbm/errors.hpp"
#include "cbm/numerics/quadrature.hpp"

namespace cbm {

double plateau_shoulder(double u) {
  if (u <= 0.0) return 1.0;
  if (u >= 1.0) return 0.0;
  return 1.0 - u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

double blowup_reference(double r) { return std::asinh(0.5 * r) / std::numbers::pi; }

std::vector<BlowupPoint> blowup_curve(const std::vector<double>& r_values, bool shoulder) {
  auto weight = [](double x) { return 1.0 / std::sqrt(1.0 + 0.25 * x * x); };
  const std::array<quad::Feature, 1> origin{quad::Feature{0.0, 1.0}};
  std::vector<BlowupPoint> out;
  out.reserve(r_values.size());
  for (double r : r_values) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("blowup_curve: R must be positive and finite");
    // The integrand is even; integrate over x >= 0 and double.
    const std::vector<double> breaks = quad::graded_breaks(0.0, r, origin);
    double half = quad::integrate_panels(weight, breaks);
    if (shoulder) {
      half += quad::integrate(
          [&](double x) {
            const double s = plateau_shoulder(x - r);
            return s * s * weight(x);
          },
          r, r + 1.0, 0.25);
    }
    out.push_back({r, 2.0 * half / (4.0 * std::numbers::pi)});
  }
  return out;
}

}  // namespace cbm
