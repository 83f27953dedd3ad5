#include <cmath>
#include <complex>

#include <doctest.h>

#include "cbm/errors.hpp"
#include "cbm/groups/convolution.hpp"
#include "cbm/groups/nilpotent.hpp"
#include "cbm/groups/representations.hpp"
#include "../support/oracles.hpp"

using namespace cbm;

namespace {

Heis3Element random_heis(oracle::Rng& rng, double r = 3.0) {
  return {rng.uniform(-r, r), rng.uniform(-r, r), rng.uniform(-r, r)};
}
Dix4Element random_dix(oracle::Rng& rng, double r = 3.0) {
  return {rng.uniform(-r, r), rng.uniform(-r, r), rng.uniform(-r, r), rng.uniform(-r, r)};
}
double dist(const Heis3Element& p, const Heis3Element& q) {
  return std::max({std::abs(p.x - q.x), std::abs(p.y - q.y), std::abs(p.z - q.z)});
}
double dist(const Dix4Element& p, const Dix4Element& q) {
  return std::max({std::abs(p.x - q.x), std::abs(p.y - q.y), std::abs(p.z - q.z), std::abs(p.w - q.w)});
}

}  // namespace

TEST_CASE("Heisenberg law is the matrix product") {
  oracle::Rng rng(31);
  for (int k = 0; k < 500; ++k) {
    const Heis3Element p = random_heis(rng), q = random_heis(rng), r = random_heis(rng);
    const Eigen::Matrix3d prod = heis3_to_matrix(p) * heis3_to_matrix(q);
    CHECK(dist(heis3_mul(p, q), heis3_from_matrix(prod)) < 1e-12);
    CHECK(dist(heis3_mul(heis3_mul(p, q), r), heis3_mul(p, heis3_mul(q, r))) < 1e-12);
    CHECK(dist(heis3_mul(p, heis3_inv(p)), Heis3Element{}) < 1e-12);
  }
}

TEST_CASE("gamma: conjugation identity and order four") {
  oracle::Rng rng(32);
  for (int k = 0; k < 500; ++k) {
    const Heis3Element p = random_heis(rng);
    CHECK(gamma_conjugation_residual(p) < 1e-12);
    CHECK(dist(gamma(gamma(gamma(gamma(p)))), p) < 1e-12);
  }
  const Heis3Element g = gamma({2.0, 1.0, 1.0});
  CHECK(g.x == -2.0);
  CHECK(g.y == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(g.z == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("four-dimensional group law is the matrix product") {
  oracle::Rng rng(33);
  for (int k = 0; k < 500; ++k) {
    const Dix4Element p = random_dix(rng), q = random_dix(rng);
    const Eigen::Matrix4d prod = dix4_to_matrix(p) * dix4_to_matrix(q);
    CHECK(dist(dix4_mul(p, q), dix4_from_matrix(prod)) < 1e-11);
    CHECK(dist(dix4_mul(p, dix4_inv(p)), Dix4Element{}) < 1e-11);
    CHECK(gamma_prime_conjugation_residual(p) < 1e-12);
    CHECK(gamma_prime(p).w == p.w);
  }
}

TEST_CASE("theta action: group property and duality") {
  oracle::Rng rng(34);
  for (int k = 0; k < 200; ++k) {
    const double y1 = rng.uniform(-2, 2), y2 = rng.uniform(-2, 2);
    const Triple v{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Triple c{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Triple a = theta_action(y1, theta_action(y2, v));
    const Triple b = theta_action(y1 + y2, v);
    for (int i = 0; i < 3; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
    const Triple tv = theta_action(y1, v);
    const Triple tc = theta_dual(y1, c);
    const double lhs = tv[0] * c[0] + tv[1] * c[1] + tv[2] * c[2];
    const double rhs = v[0] * tc[0] + v[1] * tc[1] + v[2] * tc[2];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    // Orbit invariants.
    const OrbitClass o1 = classify_orbit(c[0], c[1], c[2]);
    const OrbitClass o2 = classify_orbit(tc[0], tc[1], tc[2]);
    CHECK(o1.kind == o2.kind);
    CHECK(o1.b == doctest::Approx(o2.b).epsilon(1e-9));
  }
  CHECK(classify_orbit(1.0, 2.0, 0.0).kind == OrbitClass::Kind::Line);
  CHECK(classify_orbit(1.0, 0.0, 0.0).kind == OrbitClass::Kind::Point);
}

TEST_CASE("representations are homomorphisms") {
  oracle::Rng rng(35);
  const LineFunction f = [](double t) { return std::complex<double>(std::exp(-t * t), 0.3 * t); };
  for (int k = 0; k < 50; ++k) {
    const double a = rng.uniform(-2, 2);
    const Heis3Element p = random_heis(rng, 1.5), q = random_heis(rng, 1.5);
    const LineFunction qf = [&](double s) { return rho_heis3(a, q, f, s); };
    const double t = rng.uniform(-2, 2);
    CHECK(std::abs(rho_heis3(a, p, qf, t) - rho_heis3(a, heis3_mul(p, q), f, t)) < 1e-12);

    const double b = rng.uniform(-2, 2);
    const Dix4Element dp = random_dix(rng, 1.5), dq = random_dix(rng, 1.5);
    const LineFunction dqf = [&](double s) { return rho_dix4(a, b, dq, f, s); };
    CHECK(std::abs(rho_dix4(a, b, dp, dqf, t) - rho_dix4(a, b, dix4_mul(dp, dq), f, t)) < 1e-11);
  }
  // Central character.
  CHECK(std::abs(rho_heis3(0.7, {0, 0, 2.0}, f, 0.4) - std::polar(1.0, 1.4) * f(0.4)) < 1e-14);
}

TEST_CASE("gamma_symmetrize is gamma-invariant") {
  const Heis3Function f = [](const Heis3Element& p) {
    return std::complex<double>(std::exp(-(p.x - 0.3) * (p.x - 0.3) - p.y * p.y - 2 * p.z * p.z), p.y);
  };
  const Heis3Function s = gamma_symmetrize(f);
  oracle::Rng rng(36);
  for (int k = 0; k < 100; ++k) {
    const Heis3Element p = random_heis(rng, 2.0);
    CHECK(std::abs(s(gamma(p)) - s(p)) < 1e-12);
  }
}

TEST_CASE("convolution: identity value, serial/parallel bitwise, limits") {
  GridFunction f = GridFunction::centered(3, 9, 1.2);
  f.fill([](const std::array<double, 3>& p) {
    return std::complex<double>(std::exp(-2 * (p[0] * p[0] + p[1] * p[1] + p[2] * p[2])), 0.2 * p[0]);
  });
  const GridFunction out = convolution_output_grid(f, f);
  const GridFunction s = heis3_convolution(f, f, out, Execution::Serial);
  const GridFunction p = heis3_convolution(f, f, out, Execution::Parallel);
  for (std::size_t n = 0; n < s.size(); ++n) CHECK(s[n] == p[n]);

  // At the identity the sum is ||f||^2 exactly: every g lookup lands on a node.
  double want = 0.0;
  for (const auto& v : f.values()) want += std::norm(v);
  want *= f.cell_volume();
  // Node 0 of this output grid is the identity.
  const GridFunction origin({0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, {2, 2, 2});
  const GridFunction at0 = heis3_convolution(f, f, origin);
  CHECK(at0[0].real() == doctest::Approx(want).epsilon(1e-12));
  CHECK(std::abs(at0[0].imag()) < 1e-14);

  CHECK_THROWS_AS(heis3_convolution(GridFunction::centered(3, 25, 1.0), f), ResourceError);
  CHECK_THROWS_AS(heis3_convolution(GridFunction::centered(2, 5, 1.0), f), DomainError);
}
