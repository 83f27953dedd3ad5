#pragma once

#include <array>
#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace cbm {

// Heisenberg group element in the coordinates
//   [[1, x, z + xy/2], [0, 1, y], [0, 0, 1]].
struct Heis3Element {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  bool operator==(const Heis3Element&) const = default;
};

// (x + x', y + y', z + z' + (x y' - x' y) / 2)
Heis3Element heis3_mul(const Heis3Element& p, const Heis3Element& q);
Heis3Element heis3_inv(const Heis3Element& p);
Eigen::Matrix3d heis3_to_matrix(const Heis3Element& p);
Heis3Element heis3_from_matrix(const Eigen::Matrix3d& m);

// (x, y, z) -> (-x, -z / c, y c),  c = sqrt(1 + x^2/4)
Heis3Element gamma(const Heis3Element& p);
// max |diag(u,1) n(p) diag(v,1) - n(gamma(p))| with
// u = [[x/2, 1], [-1, x/2]] / c and v = -u.
double gamma_conjugation_residual(const Heis3Element& p);

// Element of the four-dimensional nilpotent group in the coordinates
//   [[1, -y, z - xy/2, w], [0, 1, x, z + xy/2], [0, 0, 1, y], [0, 0, 0, 1]].
// The law, read off from the matrix product:
//   x'' = x + x',  y'' = y + y',  z'' = z + z' + (x y' - x' y) / 2,
//   w'' = w + w' - y (z' + x' y' / 2) + y' (z - x y / 2).
struct Dix4Element {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 0.0;
  bool operator==(const Dix4Element&) const = default;
};

Dix4Element dix4_mul(const Dix4Element& p, const Dix4Element& q);
Dix4Element dix4_inv(const Dix4Element& p);
Eigen::Matrix4d dix4_to_matrix(const Dix4Element& p);
Dix4Element dix4_from_matrix(const Eigen::Matrix4d& m);

// (x, y, z, w) -> (-x, -z / c, y c, w)
Dix4Element gamma_prime(const Dix4Element& p);
// Same u, v as above, acting on the middle 2x2 block.
double gamma_prime_conjugation_residual(const Dix4Element& p);

using Heis3Function = std::function<std::complex<double>(const Heis3Element&)>;

// (1/4) sum_{k=0..3} f o gamma^k; gamma has order 4, so the result is
// gamma-invariant.
Heis3Function gamma_symmetrize(Heis3Function f);

// The action of the y-subgroup on the normal R^3 = {(x, z, w)} and its
// transpose on dual coordinates (s, u, v).
using Triple = std::array<double, 3>;
Triple theta_action(double y, const Triple& xzw);
Triple theta_dual(double y, const Triple& suv);

struct OrbitClass {
  enum class Kind { Parabola, Line, Point } kind = Kind::Point;
  // Parabola: vertex (b, 0, a) with a = v, b = s - u^2 / (4 v).
  double a = 0.0;
  double b = 0.0;
  // Line: the invariant u. Point: the fixed s is stored in b.
  double u = 0.0;
};

OrbitClass classify_orbit(double s, double u, double v);
const char* to_string(OrbitClass::Kind kind);

}  // namespace cbm
