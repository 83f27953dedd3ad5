#pragma once

#include <array>
#include <complex>
#include <functional>
#include <map>

#include <Eigen/Dense>

#include "cbm/io/report.hpp"
#include "cbm/lattice/lattice_function.hpp"

namespace cbm {

// Z^d inside R^d with fundamental domain [0, 1)^d of measure 1. Points of
// R^d and Z^d carry two coordinates; the second is ignored when d = 1.
using RealPoint = std::array<double, 2>;
using LatticePoint = std::array<long, 2>;

struct Decomposition {
  RealPoint omega;     // componentwise fractional part, in [0, 1)
  LatticePoint gamma;  // componentwise floor
};

// x = omega + gamma. Throws DomainError on non-finite x or d outside {1, 2}.
Decomposition decompose(const RealPoint& x, int dim);

// max(0, 1 - |t|)
double tent(double t);

// phi^(t) = sum_n phi(n) prod_axes tent(t - n): the convolution
// chi_Omega * (phi on the lattice) * chi_Omega~.
std::complex<double> induced_value(const LatticeFunction& phi, const RealPoint& t);
std::function<std::complex<double>(const RealPoint&)> induce(LatticeFunction phi);

// int_Omega F(omega) d omega for F constant between the points where
// floor(x + omega) or floor(y + omega) jumps, by the midpoint of each cell of
// that partition (exact up to rounding).
std::complex<double> breakpoint_integral(const std::function<std::complex<double>(const RealPoint&)>& f,
                                         const RealPoint& x, const RealPoint& y, int dim);

// Compares phi^(y - x) with int_Omega phi(floor(y + w) - floor(x + w)) dw.
// Claim id "formula-p20", absolute tolerance 1e-8.
Report check_induction_formula(const LatticeFunction& phi, const RealPoint& x, const RealPoint& y);

// ||phi^||_{A(R)} against ||phi||_{A(Z)} for d = 1. With P(theta) =
// sum_n phi(n) e^{i n theta}, the Fourier transform of phi^ is
// P(xi) sinc^2(xi / 2), so
//   ||phi^||_A = (1/2pi) int_0^{2pi} |P(theta)| sum_k sinc^2((theta + 2 pi k)/2) dtheta.
// The k sum is truncated at |k| <= periods; the neglected mass is at most
// 2 sum|phi(n)| / (pi^2 periods). Claim id "lemma-2-1"; the inequality gets
// `slack`, and a tail bound above the slack makes the report inconclusive.
struct InducedNormOptions {
  int points = 1 << 14;
  int periods = 1024;
  double slack = 1e-3;
};
Report check_induced_norm(const LatticeFunction& phi, const InducedNormOptions& options = {});

// Finitely supported vector fields on the lattice; missing points map to 0.
using LatticeField = std::map<LatticePoint, Eigen::VectorXcd>;

struct GramLift {
  std::complex<double> inner;    // <xi^(x), eta^(y)>
  std::complex<double> induced;  // phi^(y - x)
};

// <u, v> = sum_i u_i conj(v_i). Requires phi(g2 - g1) = <xi(g1), eta(g2)> on
// all pairs drawn from the two supports (DomainError otherwise).
GramLift gram_lift(const LatticeFunction& phi, const LatticeField& xi, const LatticeField& eta, const RealPoint& x,
                   const RealPoint& y, int dim);

}  // namespace cbm
