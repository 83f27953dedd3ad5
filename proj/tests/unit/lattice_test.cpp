#include <cmath>
#include <complex>

#include <doctest.h>

#include "cbm/errors.hpp"
#include "cbm/lattice/lattice.hpp"
#include "cbm/multiplier/fourier_algebra.hpp"
#include "../support/oracles.hpp"

using namespace cbm;

namespace {

LatticeFunction random_lattice(oracle::Rng& rng, int dim, int size) {
  LatticeFunction phi;
  phi.dim = dim;
  for (int k = 0; k < size; ++k) {
    const LatticePoint n{rng.integer(-4, 4), dim == 2 ? rng.integer(-4, 4) : 0};
    phi.push(n, rng.gaussian_complex());
  }
  return phi;
}

}  // namespace

TEST_CASE("decompose: x = omega + gamma with omega in [0, 1)") {
  oracle::Rng rng(61);
  for (int k = 0; k < 500; ++k) {
    const RealPoint x{rng.uniform(-50, 50), rng.uniform(-50, 50)};
    const Decomposition d = decompose(x, 2);
    for (int a = 0; a < 2; ++a) {
      CHECK(d.omega[a] >= 0.0);
      CHECK(d.omega[a] < 1.0);
      CHECK(d.omega[a] + static_cast<double>(d.gamma[a]) == doctest::Approx(x[a]).epsilon(1e-14));
    }
  }
  const Decomposition neg = decompose({-0.25, 0.0}, 1);
  CHECK(neg.gamma[0] == -1);
  CHECK(neg.omega[0] == 0.75);
  CHECK_THROWS_AS(decompose({std::nan(""), 0.0}, 1), DomainError);
  CHECK_THROWS_AS(decompose({0.0, 0.0}, 3), DomainError);
}

TEST_CASE("induced function interpolates the lattice values") {
  oracle::Rng rng(62);
  const LatticeFunction phi = random_lattice(rng, 2, 6);
  for (long i = -5; i <= 5; ++i)
    for (long j = -5; j <= 5; ++j) {
      CHECK(std::abs(induced_value(phi, {double(i), double(j)}) - phi({i, j})) < 1e-14);
    }
  CHECK(tent(0.25) == 0.75);
  CHECK(tent(-2.0) == 0.0);
}

TEST_CASE("induction formula on random cases") {
  oracle::Rng rng(63);
  for (int k = 0; k < 60; ++k) {
    const int dim = 1 + k % 2;
    const LatticeFunction phi = random_lattice(rng, dim, 5);
    const RealPoint x{rng.uniform(-6, 6), dim == 2 ? rng.uniform(-6, 6) : 0.0};
    const RealPoint y{rng.uniform(-6, 6), dim == 2 ? rng.uniform(-6, 6) : 0.0};
    const Report r = check_induction_formula(phi, x, y);
    CHECK(r.pass());
    CHECK(r.claim_id == "formula-p20");
  }
}

TEST_CASE("breakpoint integral of a step function") {
  // floor(x + w) jumps once on [0, 1): the integral is the weighted mean.
  const auto f = [](const RealPoint& w) { return std::complex<double>(std::floor(0.3 + w[0])); };
  CHECK(breakpoint_integral(f, {0.3, 0.0}, {0.0, 0.0}, 1).real() == doctest::Approx(0.3));
}

TEST_CASE("induced norm against the lattice norm") {
  oracle::Rng rng(64);
  for (int k = 0; k < 5; ++k) {
    LatticeFunction phi = random_lattice(rng, 1, 4);
    // Unit l1 mass keeps the truncation tail below the slack.
    double mass = 0.0;
    for (const auto& v : phi.values) mass += std::abs(v);
    for (auto& v : phi.values) v /= mass;
    const Report r = check_induced_norm(phi);
    CHECK(r.pass());
    CHECK(r.value("induced_norm") <= r.value("lattice_norm") + 1e-3);
  }
  // Positive definite input: both norms are phi(0).
  LatticeFunction fejer;
  for (long n = -3; n <= 3; ++n) fejer.push(n, 1.0 - std::abs(n) / 4.0);
  const Report r = check_induced_norm(fejer);
  CHECK(r.value("lattice_norm") == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.value("induced_norm") == doctest::Approx(1.0).epsilon(1e-3));

  InducedNormOptions coarse;
  coarse.periods = 4;
  CHECK(check_induced_norm(fejer, coarse).verdict == Verdict::Inconclusive);
  LatticeFunction plane;
  plane.dim = 2;
  plane.push({0, 0}, 1.0);
  CHECK_THROWS_AS(check_induced_norm(plane), DomainError);
}

TEST_CASE("Gram lift reproduces the induced function") {
  // xi supported at 0, eta at {0, 1, 2}: phi(n) = <xi(0), eta(n)>. With x on
  // the lattice every floor(x + w) is 0, where the factorization holds.
  oracle::Rng rng(65);
  LatticeField xi, eta;
  Eigen::VectorXcd u(2);
  u << rng.gaussian_complex(), rng.gaussian_complex();
  xi[{0, 0}] = u;
  LatticeFunction phi;
  for (long n = 0; n <= 2; ++n) {
    Eigen::VectorXcd v(2);
    v << rng.gaussian_complex(), rng.gaussian_complex();
    eta[{n, 0}] = v;
    phi.push(n, v.dot(u));
  }
  for (int k = 0; k < 20; ++k) {
    const RealPoint x{0.0, 0.0}, y{rng.uniform(-2, 4), 0.0};
    const GramLift g = gram_lift(phi, xi, eta, x, y, 1);
    CHECK(std::abs(g.inner - g.induced) < 1e-12);
  }
  LatticeFunction wrong = phi;
  wrong.values[1] += 0.5;
  CHECK_THROWS_AS(gram_lift(wrong, xi, eta, {0.0, 0.0}, {0.5, 0.0}, 1), DomainError);
}
