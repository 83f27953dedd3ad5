#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "cbm/distributions/blowup.hpp"
#include "cbm/distributions/fubini.hpp"
#include "cbm/distributions/kernels.hpp"
#include "cbm/distributions/pairing.hpp"
#include "cbm/errors.hpp"
#include "cbm/numerics/bessel.hpp"
#include "../support/oracles.hpp"

using namespace cbm;
constexpr double pi = std::numbers::pi;

TEST_CASE("SL3 kernel: support, majorant and commutator") {
  const KernelSpec spec{KernelCase::SL3, 1.0, 0.0};
  CHECK(kernel_sl3(spec, 1.0, 2.0) == 0.0);
  CHECK(kernel_sl3(spec, -1.0, 2.0) == doctest::Approx(2 * pi * pi / 3.0 * bessel_j0(std::sqrt(8.0))));
  CHECK_THROWS_AS(kernel_sl3({KernelCase::SL3, 0.0, 0.0}, -1.0, 1.0), DomainError);
  oracle::Rng rng(51);
  std::vector<KernelSample> samples;
  for (int k = 0; k < 2000; ++k) {
    const double s = rng.uniform(-5, 5), t = rng.uniform(-5, 5);
    samples.push_back({s, t});
    CHECK(std::abs(kernel_sl3(spec, s, t)) <= 2 * pi * pi * majorant_sl3(s, t) + 1e-12);
    CHECK(commutator_kernel_sl3(s, t) == doctest::Approx(majorant_sl3(s, t)).epsilon(1e-12));
  }
  CHECK(commutator_kernel_residual(KernelCase::SL3, 0.0, samples) < 1e-12);
}

TEST_CASE("SP2 kernel: vanishes when ab >= 0, majorant otherwise") {
  CHECK(kernel_sp2({KernelCase::SP2, 1.0, 1.0}, 0.3, 2.0) == 0.0);
  CHECK(kernel_sp2({KernelCase::SP2, -1.0, 0.0}, 0.3, 2.0) == 0.0);
  const KernelSpec spec{KernelCase::SP2, 1.0, -1.0};
  CHECK(kernel_sp2(spec, 0.0, 2.0) != 0.0);
  oracle::Rng rng(52);
  std::vector<KernelSample> samples;
  for (int k = 0; k < 2000; ++k) {
    const double s = rng.uniform(-3, 3), t = rng.uniform(-3, 3);
    samples.push_back({s, t});
    CHECK(std::abs(kernel_sp2(spec, s, t)) <= 2 * pi * pi * majorant_sp2(1.0, s, t) + 1e-12);
  }
  CHECK(commutator_kernel_residual(KernelCase::SP2, 1.0, samples) < 1e-12);
}

TEST_CASE("Nystroem grids and norms") {
  const NystromGrid g = graded_grid(10.0, 256, {0.0}, 1e-8);
  REQUIRE(g.nodes.size() == 256);
  double w = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    w += g.weights[i];
    CHECK(g.nodes[i] == doctest::Approx(-g.nodes[g.nodes.size() - 1 - i]));
  }
  // Cells cover the interval up to the excluded gap around the singular point.
  CHECK(std::abs(w - 20.0) <= 3e-8);
  const RealKernel k = majorant_sl3;
  const double s = kernel_operator_norm(k, g, Execution::Serial);
  const double p = kernel_operator_norm(k, g, Execution::Parallel);
  CHECK(s == p);
  CHECK(s <= pi * 1.02);
  CHECK(s > 2.0);
  CHECK_THROWS_AS(graded_grid(1.0, 64, {2.0}, 1e-6), ConfigurationError);
  const NystromGrid u = uniform_grid(4.0, 100);
  CHECK(u.nodes.size() == 100);
}

TEST_CASE("Fubini defect: even bump gives pi^2, odd bump gives 0") {
  FubiniOptions o;
  o.half_width = 8.0;
  o.grid = 512;
  o.exclusion = 0.16;
  const PlaneFunction even = [](double y, double z) { return std::complex<double>(std::exp(-(y * y + z * z) / 2)); };
  const FubiniResult r = fubini_defect(even, o);
  CHECK(r.defect == doctest::Approx(pi * pi).epsilon(0.02));
  CHECK(r.i_value == doctest::Approx(-r.j_value).epsilon(0.02));
  const PlaneFunction odd = [](double y, double z) { return std::complex<double>(y * std::exp(-(y * y + z * z))); };
  CHECK(std::abs(fubini_defect(odd, o).defect) < 1e-6);

  o.exec = Execution::Parallel;
  const FubiniResult rp = fubini_defect(even, o);
  CHECK(rp.i_value == r.i_value);
  CHECK(rp.j_value == r.j_value);

  o.exclusion = 0.01;
  CHECK_THROWS_AS(fubini_defect(even, o), ConfigurationError);
}

TEST_CASE("Bessel transform closed form and normalization fit") {
  CHECK(bessel_transform(0.0, 2.0) == doctest::Approx(kBesselTransformFactor * bessel_j0(2.0)));
  CHECK(bessel_transform(3.0, 1.0) == 0.0);
  CHECK_THROWS_AS(bessel_transform(1.0, 1.0), BoundaryError);
  const std::vector<double> u{0.5, 1.0, 2.0};
  std::vector<double> numeric;
  for (double x : u) numeric.push_back(pi * pi * bessel_j0(x));
  const NormalizationFit fit = bessel_transform_fit(u, numeric, {pi, pi * pi, 1.0});
  CHECK(fit.winner == pi * pi);
  CHECK(kBesselTransformFactor == doctest::Approx(pi * pi));
}

TEST_CASE("pairing: order swap and serial/parallel agreement") {
  PairingOptions o;
  o.half_width = {3.0, 3.0, 3.0};
  o.max_panel = 1.5;
  const SpaceFunction phi = [](double x, double y, double z) {
    return std::complex<double>(std::exp(-(x * x + 2 * y * y + z * z)), 0.1 * x);
  };
  const std::complex<double> xy = d_pairing(phi, o);
  o.exec = Execution::Parallel;
  const std::complex<double> par = d_pairing(phi, o);
  CHECK(xy == par);
  o.order = OuterOrder::YX;
  const std::complex<double> yx = d_pairing(phi, o);
  CHECK(std::abs(xy - yx) < 1e-10 * std::abs(xy));
}

TEST_CASE("invariant identity rejects a non-invariant function") {
  PairingOptions o;
  o.half_width = {2.0, 2.0, 2.0};
  const SpaceFunction phi = [](double x, double y, double z) {
    return std::complex<double>(std::exp(-(x * x + y * y + z * z)));
  };
  // exp(-r^2) is not gamma-invariant: gamma scales y and z by c.
  CHECK_THROWS_AS(lemma_e_pair(phi, o, 200), DomainError);
}

TEST_CASE("blowup curve") {
  const auto c = blowup_curve({10.0, 100.0, 1000.0});
  REQUIRE(c.size() == 3);
  for (std::size_t k = 0; k < c.size(); ++k) {
    CHECK(c[k].bound == doctest::Approx(blowup_reference(c[k].r)).epsilon(0.02));
    if (k > 0) CHECK(c[k].bound > c[k - 1].bound);
  }
  // Sharp indicator: (1/2pi) int_0^R dx / sqrt(1 + x^2/4) = asinh(R/2)/pi.
  const auto sharp = blowup_curve({5.0}, false);
  CHECK(sharp[0].bound == doctest::Approx(std::asinh(2.5) / pi).epsilon(1e-10));
  CHECK(plateau_shoulder(0.0) == 1.0);
  CHECK(plateau_shoulder(1.0) == 0.0);
  CHECK(plateau_shoulder(0.5) == doctest::Approx(0.5));
  CHECK_THROWS_AS(blowup_curve({-1.0}), DomainError);
}
