#pragma once

#include <complex>
#include <functional>

#include "cbm/groups/nilpotent.hpp"

namespace cbm {

using LineFunction = std::function<std::complex<double>(double)>;

// Schroedinger representation on L^2(R) with central character e^{iaz}.
// The element is factored as central part * x-part * y-part,
//   n(x, y, z) = n(0, 0, z - xy/2) n(x, 0, 0) n(0, y, 0),
// so (rho_a(x, y, z) f)(t) = e^{ia(z - xy/2)} e^{iaxt} f(t - y).
std::complex<double> rho_heis3(double a, const Heis3Element& n, const LineFunction& f, double t);

// Representation attached to the parabolic orbit with vertex (b, 0, a).
// With z1 = z - xy/2 and w1 = w - y z1 the element factors as
//   n(x, y, z, w) = W(w1) Z(z1) X(x) Y(y),
// so (rho_{a,b}(n) f)(t) = e^{i a w1} e^{2 i a t z1} e^{i (a t^2 + b) x} f(t - y).
std::complex<double> rho_dix4(double a, double b, const Dix4Element& n, const LineFunction& f, double t);

// <rho_a(n) f, g> = int (rho_a(n) f)(t) conj(g(t)) dt over [lo, hi].
std::complex<double> heis3_matrix_coefficient(double a, const Heis3Element& n, const LineFunction& f,
                                              const LineFunction& g, double lo, double hi);

}  // namespace cbm
