#include "cbm/groups/nilpotent.hpp"

#include <cmath>

namespace cbm {

namespace {

double stretch(double x) { return std::sqrt(1.0 + 0.25 * x * x); }

Eigen::Matrix2d rotation_u(double x) {
  Eigen::Matrix2d u;
  u << 0.5 * x, 1.0, -1.0, 0.5 * x;
  return u / stretch(x);
}

}  // namespace

Heis3Element heis3_mul(const Heis3Element& p, const Heis3Element& q) {
  return {p.x + q.x, p.y + q.y, p.z + q.z + 0.5 * (p.x * q.y - q.x * p.y)};
}

Heis3Element heis3_inv(const Heis3Element& p) { return {-p.x, -p.y, -p.z}; }

Eigen::Matrix3d heis3_to_matrix(const Heis3Element& p) {
  Eigen::Matrix3d m;
  m << 1.0, p.x, p.z + 0.5 * p.x * p.y, 0.0, 1.0, p.y, 0.0, 0.0, 1.0;
  return m;
}

Heis3Element heis3_from_matrix(const Eigen::Matrix3d& m) {
  const double x = m(0, 1);
  const double y = m(1, 2);
  return {x, y, m(0, 2) - 0.5 * x * y};
}

Heis3Element gamma(const Heis3Element& p) {
  const double c = stretch(p.x);
  return {-p.x, -p.z / c, p.y * c};
}

double gamma_conjugation_residual(const Heis3Element& p) {
  Eigen::Matrix3d left = Eigen::Matrix3d::Identity();
  left.topLeftCorner<2, 2>() = rotation_u(p.x);
  Eigen::Matrix3d right = Eigen::Matrix3d::Identity();
  right.topLeftCorner<2, 2>() = -rotation_u(p.x);
  const Eigen::Matrix3d lhs = left * heis3_to_matrix(p) * right;
  return (lhs - heis3_to_matrix(gamma(p))).cwiseAbs().maxCoeff();
}

Dix4Element dix4_mul(const Dix4Element& p, const Dix4Element& q) {
  return {p.x + q.x, p.y + q.y, p.z + q.z + 0.5 * (p.x * q.y - q.x * p.y),
          p.w + q.w - p.y * (q.z + 0.5 * q.x * q.y) + q.y * (p.z - 0.5 * p.x * p.y)};
}

Dix4Element dix4_inv(const Dix4Element& p) { return {-p.x, -p.y, -p.z, -p.w}; }

Eigen::Matrix4d dix4_to_matrix(const Dix4Element& p) {
  const double half = 0.5 * p.x * p.y;
  Eigen::Matrix4d m;
  m << 1.0, -p.y, p.z - half, p.w,  //
      0.0, 1.0, p.x, p.z + half,    //
      0.0, 0.0, 1.0, p.y,           //
      0.0, 0.0, 0.0, 1.0;
  return m;
}

Dix4Element dix4_from_matrix(const Eigen::Matrix4d& m) {
  const double x = m(1, 2);
  const double y = m(2, 3);
  return {x, y, m(1, 3) - 0.5 * x * y, m(0, 3)};
}

Dix4Element gamma_prime(const Dix4Element& p) {
  const double c = stretch(p.x);
  return {-p.x, -p.z / c, p.y * c, p.w};
}

double gamma_prime_conjugation_residual(const Dix4Element& p) {
  Eigen::Matrix4d left = Eigen::Matrix4d::Identity();
  left.block<2, 2>(1, 1) = rotation_u(p.x);
  Eigen::Matrix4d right = Eigen::Matrix4d::Identity();
  right.block<2, 2>(1, 1) = -rotation_u(p.x);
  const Eigen::Matrix4d lhs = left * dix4_to_matrix(p) * right;
  return (lhs - dix4_to_matrix(gamma_prime(p))).cwiseAbs().maxCoeff();
}

Heis3Function gamma_symmetrize(Heis3Function f) {
  return [f = std::move(f)](const Heis3Element& p) {
    const Heis3Element p1 = gamma(p);
    const Heis3Element p2 = gamma(p1);
    const Heis3Element p3 = gamma(p2);
    return 0.25 * (f(p) + f(p1) + f(p2) + f(p3));
  };
}

Triple theta_action(double y, const Triple& v) {
  const auto [x, z, w] = v;
  return {x, z - y * x, w - 2.0 * y * z + y * y * x};
}

Triple theta_dual(double y, const Triple& c) {
  const auto [s, u, v] = c;
  return {s - y * u + y * y * v, u - 2.0 * y * v, v};
}

OrbitClass classify_orbit(double s, double u, double v) {
  OrbitClass out;
  if (v != 0.0) {
    out.kind = OrbitClass::Kind::Parabola;
    out.a = v;
    out.b = s - u * u / (4.0 * v);
  } else if (u != 0.0) {
    out.kind = OrbitClass::Kind::Line;
    out.u = u;
  } else {
    out.kind = OrbitClass::Kind::Point;
    out.b = s;
  }
  return out;
}

const char* to_string(OrbitClass::Kind kind) {
  switch (kind) {
    case OrbitClass::Kind::Parabola:
      return "parabola";
    case OrbitClass::Kind::Line:
      return "line";
    case OrbitClass::Kind::Point:
      return "point";
  }
  return "point";
}

}  // namespace cbm
