#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "cbm/distributions/kernels.hpp"
#include "cbm/groups/representations.hpp"
#include "cbm/numerics/execution.hpp"
#include "cbm/numerics/grid_function.hpp"

namespace cbm {

using SpaceFunction = std::function<std::complex<double>(double, double, double)>;

enum class OuterOrder { XY, YX };

struct PairingOptions {
  // phi vanishes outside [-hx, hx] x [-hy, hy] x [-hz, hz].
  std::array<double, 3> half_width{4.0, 4.0, 4.0};
  // Largest exclusion radius of the ladder {h, h/2, h/4}; at a given (x, y)
  // the radius is min(h, c |y| / 8) with c = sqrt(1 + x^2/4).
  double exclusion = 0.05;
  double max_panel = 1.0;
  // Optional x-dependent bound for |z| on the support (at most hz); the
  // inner integral then covers only [-z_extent(x), z_extent(x)].
  std::function<double(double)> z_extent;
  OuterOrder order = OuterOrder::XY;
  Execution exec = Execution::Serial;
};

// int dx int dy PV int dz phi(x, y, z) / ((1 + x^2/4) y^2 - z^2), the z
// integral innermost; `order` only swaps the two outer integrals.
std::complex<double> d_pairing(const SpaceFunction& phi, const PairingOptions& options);
// Sampled phi (3D grid, cubic interpolation, box from the grid). Throws
// ConfigurationError when a grid spacing exceeds exclusion / 4.
std::complex<double> d_pairing(const GridFunction& phi, const PairingOptions& options);

struct IdentityCheck {
  double lhs = 0.0;               // int phi(x, 0, 0) / sqrt(1 + x^2/4) dx
  std::complex<double> dval;      // d_pairing(phi)
  double residual = 0.0;          // |2 dval - pi^2 lhs|
  double invariance_defect = 0.0; // sup over samples of |phi o gamma - phi|
};

// Requires sup |phi o gamma - phi| < 1e-8 on `samples` deterministic random
// points of the box, else DomainError.
IdentityCheck lemma_e_pair(const SpaceFunction& phi, const PairingOptions& options, int samples = 2000,
                           std::uint64_t seed = 11);

struct RepresentationPairingOptions {
  double x_half_width = 20.0;  // truncation of the x integral
  double y_half_width = 6.0;   // must cover supp f - supp g
  double t_lo = -6.0;          // support of g
  double t_hi = 6.0;
  double max_panel = 0.1;
  Execution exec = Execution::Serial;
};

// D applied to the matrix coefficient n -> <rho_a(n) f, g> of the
// Heisenberg group, with the z integral in closed form,
//   PV int e^{i w z} / (b^2 - z^2) dz = pi sin(|w| b) / b.
std::complex<double> representation_pairing_heis3(double a, const LineFunction& f, const LineFunction& g,
                                                  const RepresentationPairingOptions& options);

// int int conj(g(s)) k(s, t) f(t) ds dt over [-L, L]^2, with panels graded
// toward +-loci on both axes.
std::complex<double> kernel_quadratic_form(const RealKernel& k, const LineFunction& f, const LineFunction& g,
                                           double half_width, const std::vector<double>& loci,
                                           double max_panel = 0.05, Execution exec = Execution::Serial);

}  // namespace cbm
