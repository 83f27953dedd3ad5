#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "cbm/numerics/execution.hpp"
#include "cbm/numerics/grid_function.hpp"

namespace cbm {

using PlaneFunction = std::function<std::complex<double>(double, double)>;

struct FubiniOptions {
  // phi is taken to vanish outside [-half_width, half_width]^2.
  double half_width = 10.0;
  // Largest exclusion radius of the Richardson ladder {h, h/2, h/4}.
  double exclusion = 0.05;
  // Effective resolution: roughly this many quadrature nodes per axis on
  // the uniform part of each panel set.
  int grid = 2048;
  Execution exec = Execution::Serial;
};

struct FubiniResult {
  double i_value = 0.0;  // int dy PV int dz phi / (y^2 - z^2)
  double j_value = 0.0;  // int dz PV int dy phi / (y^2 - z^2)
  double defect = 0.0;   // i_value - j_value
};

// Both iterated principal-value integrals of phi / (y^2 - z^2). The inner
// exclusion at a given outer coordinate v is min(h, |v|/8) since the two
// poles +-v merge at v = 0. Throws ConfigurationError when the effective
// spacing exceeds exclusion / 4. Real parts are reported.
FubiniResult fubini_defect(const PlaneFunction& phi, const FubiniOptions& options);
// Sampled phi (2D grid, cubic interpolation); the grid spacing is checked
// against exclusion / 4 and the box is taken from the grid.
FubiniResult fubini_defect(const GridFunction& phi, const FubiniOptions& options);

struct BesselTransformOptions {
  // Damping envelope exp(-(y^2 + z^2) / (2 W^2)).
  double window = 10.0;
  // Truncation at +-truncation * window.
  double truncation = 7.0;
  double exclusion = 0.05;
  double max_panel = 1.0;
  Execution exec = Execution::Serial;
};

enum class IntegrationOrder { ZInner, YInner };

// Damped principal-value transform
//   int int e^{i(t y + u z)} psi_W(y, z) / (1 + y^2 - z^2) dy dz
// with the inner integral over z (poles z = +-sqrt(1 + y^2)) or over y
// (poles y = +-sqrt(z^2 - 1) for |z| > 1).
std::complex<double> bessel_transform_numeric(double t, double u, IntegrationOrder order,
                                              const BesselTransformOptions& options = {});

// Normalization factor of the closed form, fixed against
// bessel_transform_numeric (see bessel_transform_fit).
extern const double kBesselTransformFactor;

// kBesselTransformFactor * J0(sqrt(u^2 - t^2)) for u^2 > t^2, 0 for u^2 < t^2.
// Throws BoundaryError when |u^2 - t^2| < 1e-12.
double bessel_transform(double t, double u);

struct NormalizationFit {
  std::vector<double> candidates;
  std::vector<double> max_relative_error;
  double winner = 0.0;
};

// Fits numeric values K(0, u_k) against c * J0(u_k) for each candidate c.
NormalizationFit bessel_transform_fit(const std::vector<double>& u_values, const std::vector<double>& numeric,
                                      const std::vector<double>& candidates);

}  // namespace cbm
