#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "cbm/errors.hpp"
#include "cbm/numerics/bessel.hpp"
#include "cbm/numerics/grid_function.hpp"
#include "cbm/numerics/hilbert.hpp"
#include "cbm/numerics/linalg.hpp"
#include "cbm/numerics/quadrature.hpp"
#include "../support/oracles.hpp"

using namespace cbm;
constexpr double pi = std::numbers::pi;

TEST_CASE("gauss16 integrates monomials up to degree 31 exactly") {
  for (int k = 0; k <= 31; ++k) {
    const double got = quad::integrate([k](double t) { return std::pow(t, k); }, 0.0, 1.0, 1.0);
    CHECK(got == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
  }
  const auto& rule = quad::gauss16();
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("graded breaks cover the interval and respect max_panel") {
  const std::vector<quad::Feature> f{{0.3, 1e-3}, {-1.2, 0.05}};
  const auto b = quad::graded_breaks(-2.0, 3.0, f, 0.25);
  REQUIRE(b.size() > 2);
  CHECK(b.front() == -2.0);
  CHECK(b.back() == 3.0);
  for (std::size_t i = 1; i < b.size(); ++i) {
    CHECK(b[i] > b[i - 1]);
    CHECK(b[i] - b[i - 1] <= 0.25 + 1e-12);
  }
  const auto u = quad::uniform_breaks(0.0, 1.0, 0.3);
  CHECK(u.size() == 5);
}

TEST_CASE("principal value of e^t / t against a subtracted-singularity oracle") {
  // PV int_{-1}^{2} e^t / t dt = int (e^t - 1)/t dt + log 2; the smooth part
  // by composite Simpson.
  const int n = 20000;
  const double a = -1.0, b = 2.0, h = (b - a) / n;
  auto smooth = [](double t) { return t == 0.0 ? 1.0 : std::expm1(t) / t; };
  double s = smooth(a) + smooth(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * smooth(a + i * h);
  const double want = s * h / 3.0 + std::log(2.0);

  const std::vector<double> poles{0.0};
  auto f = [](double t) { return std::exp(t) / t; };
  const double ladder = quad::pv_integral_richardson(f, a, b, poles, 0.05);
  const double shared = quad::pv_integral_richardson_shared(f, a, b, poles, 0.05);
  CHECK(ladder == doctest::Approx(want).epsilon(1e-9));
  CHECK(shared == doctest::Approx(want).epsilon(1e-9));
  // A single window leaves an O(h) error that the ladder removes.
  const double single = quad::pv_integral_1d(f, a, b, poles, 0.05);
  CHECK(std::abs(single - want) > 1e-3);
}

TEST_CASE("pv preconditions") {
  auto f = [](double t) { return 1.0 / t; };
  const std::vector<double> outside{3.0};
  CHECK_THROWS_AS(quad::pv_integral_1d(f, -1.0, 1.0, outside, 0.1), DomainError);
  const std::vector<double> close{0.0, 0.1};
  CHECK_THROWS_AS(quad::pv_integral_1d(f, -1.0, 1.0, close, 0.1), ConfigurationError);
  const std::vector<double> zero{0.0};
  CHECK_THROWS_AS(quad::pv_integral_1d(f, -1.0, 1.0, zero, 0.0), ConfigurationError);
  CHECK_THROWS_AS(quad::pv_integral_1d(f, -1.0, 1.0, zero, 1.5), ConfigurationError);
}

TEST_CASE("sqrt endpoint rule handles an inverse square root") {
  // int_0^1 t^{-1/2} cos t dt
  const double got =
      quad::integrate_sqrt_endpoint([](double t) { return std::cos(t) / std::sqrt(t); }, 0.0, 1.0, true, 8);
  double want = 0.0;
  for (int k = 0, sign = 1; k < 20; ++k, sign = -sign) {
    double fact = 1.0;
    for (int j = 2; j <= 2 * k; ++j) fact *= j;
    want += sign / (fact * (2 * k + 0.5));
  }
  CHECK(got == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("integrate_nodes: serial and parallel agree bitwise") {
  const auto breaks = quad::uniform_breaks(-3.0, 5.0, 0.1);
  const auto nodes = quad::panel_nodes(breaks);
  auto f = [](double x) { return std::complex<double>(std::sin(3 * x) * std::exp(-x * x), std::cos(x)); };
  const auto s = quad::integrate_nodes(f, nodes, Execution::Serial);
  const auto p = quad::integrate_nodes(f, nodes, Execution::Parallel);
  CHECK(s.real() == p.real());
  CHECK(s.imag() == p.imag());
  CHECK(std::abs(s - quad::integrate_panels(f, breaks)) < 1e-13);
}

TEST_CASE("bessel J0 against the integral representation") {
  oracle::Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const double x = rng.uniform(-50.0, 50.0);
    CHECK(std::abs(bessel_j0(x) - oracle::bessel_j0_integral(x)) < 1e-10);
  }
  CHECK(bessel_j0(0.0) == 1.0);
  CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-12);
  CHECK(bessel_j0(-7.3) == bessel_j0(7.3));
  CHECK_THROWS_AS(bessel_j0(std::nan("")), DomainError);
}

TEST_CASE("bessel branches agree at the seam") {
  const double s = detail::kBesselSeam;
  for (double x : {s - 0.5, s, s + 0.5}) {
    CHECK(std::abs(detail::bessel_j0_series(x) - detail::bessel_j0_asymptotic(x)) < 1e-10);
  }
}

TEST_CASE("grid geometry and interpolation") {
  GridFunction g = GridFunction::centered(3, 9, 2.0);
  CHECK(g.size() == 729);
  CHECK(g.spacing()[0] == doctest::Approx(0.5));
  for (std::size_t n : {0ul, 17ul, 400ul, 728ul}) {
    const auto mi = g.multi_index(n);
    CHECK(g.index(mi[0], mi[1], mi[2]) == n);
  }
  g.fill([](const std::array<double, 3>& p) {
    return std::complex<double>(1.0 + 2 * p[0] - p[1] + 0.5 * p[2], p[2]);
  });
  oracle::Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const std::array<double, 3> p{rng.uniform(-1.4, 1.4), rng.uniform(-1.4, 1.4), rng.uniform(-1.4, 1.4)};
    const std::complex<double> want(1.0 + 2 * p[0] - p[1] + 0.5 * p[2], p[2]);
    CHECK(std::abs(g.linear(p) - want) < 1e-12);
    CHECK(std::abs(g.cubic(p) - want) < 1e-12);
  }
  CHECK(g.linear({3.0, 0.0, 0.0}) == std::complex<double>(0.0));

  GridFunction q = GridFunction::centered(1, 21, 1.0);
  q.fill([](const std::array<double, 3>& p) { return std::complex<double>(p[0] * p[0], 0.0); });
  CHECK(q.cubic({0.33, 0.0, 0.0}).real() == doctest::Approx(0.33 * 0.33).epsilon(1e-12));
  CHECK(q.vanishes_on_boundary() == false);
}

TEST_CASE("discrete Hilbert transform against the direct sum") {
  GridFunction f = GridFunction::centered(1, 200, 10.0);
  f.fill([](const std::array<double, 3>& p) { return std::complex<double>(std::exp(-p[0] * p[0]), p[0]); });
  const GridFunction s = discrete_hilbert(f, Execution::Serial);
  const GridFunction p = discrete_hilbert(f, Execution::Parallel);
  REQUIRE(s.size() == f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::complex<double> want{};
    for (std::size_t j = 0; j < f.size(); ++j) {
      want += f[j] / (static_cast<double>(i) - static_cast<double>(j) + 0.5);
    }
    want /= pi;
    CHECK(std::abs(s[i] - want) < 1e-12 * (1.0 + std::abs(want)));
    CHECK(s[i] == p[i]);
  }
  const Eigen::MatrixXd h = hilbert_matrix(128);
  CHECK(Eigen::JacobiSVD<Eigen::MatrixXd>(h).singularValues()(0) <= 1.0 + 1e-12);
  CHECK_THROWS(discrete_hilbert(GridFunction::centered(1, 10, 1.0)));
}

TEST_CASE("linear algebra helpers") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 9));
    const Eigen::MatrixXcd m = oracle::random_matrix(rng, n, n);
    const double svd = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
    CHECK(operator_norm(m) == doctest::Approx(svd).epsilon(1e-12));
    CHECK(operator_norm(m) == operator_norm(m.adjoint()));

    const Eigen::MatrixXcd h = m + m.adjoint();
    CHECK(is_hermitian(h));
    const Eigen::MatrixXcd proj = psd_project(h);
    CHECK(min_eigenvalue(proj) > -1e-10);

    const Eigen::MatrixXcd psd = oracle::random_psd(rng, n);
    const Eigen::MatrixXcd root = hermitian_sqrt(psd);
    CHECK((root * root - psd).norm() < 1e-9 * (1.0 + psd.norm()));

    const Eigen::MatrixXd r = h.real();
    const double want = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(r).eigenvalues().cwiseAbs().maxCoeff();
    CHECK(symmetric_spectral_radius(r) == doctest::Approx(want).epsilon(1e-9));
  }
  Eigen::MatrixXcd bad(2, 2);
  bad << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(psd_project(bad), DomainError);
}
