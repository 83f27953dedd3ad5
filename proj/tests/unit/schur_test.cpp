#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "cbm/errors.hpp"
#include "cbm/schur/schur.hpp"
#include "../support/oracles.hpp"

using namespace cbm;

TEST_CASE("PSD matrices: the norm is the largest diagonal entry") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 10));
    const ComplexMatrix a = oracle::random_psd(rng, n);
    const SchurResult r = schur_norm(a);
    CHECK(std::abs(r.norm - a.diagonal().real().maxCoeff()) <= 1e-6);
    CHECK(r.lower <= r.norm + 1e-12);
    CHECK(verify_certificate(a, r.certificate).pass());
  }
}

TEST_CASE("2x2 and 3x3: engine against the brute-force dual oracle") {
  oracle::Rng rng(22);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = trial < 8 ? 2 : 3;
    const ComplexMatrix a = oracle::random_matrix(rng, n, n);
    const SchurResult r = schur_norm(a);
    const double want = oracle::schur_norm_dual(a);
    CHECK(std::abs(r.norm - want) <= 1e-3);
    CHECK(verify_certificate(a, r.certificate).pass());
  }
}

TEST_CASE("closed-form instances") {
  ComplexMatrix upper(2, 2);
  upper << 1.0, 1.0, 0.0, 1.0;
  CHECK(schur_norm(upper).norm == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-6));
  CHECK(schur_norm(ComplexMatrix::Ones(5, 5)).norm == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(schur_norm(ComplexMatrix::Identity(4, 4)).norm == doctest::Approx(1.0).epsilon(1e-6));
  ComplexMatrix rank_one(3, 3);
  rank_one << 1.0, 2.0, 3.0, 2.0, 4.0, 6.0, 3.0, 6.0, 9.0;
  // u v^*: ||u||_inf ||v||_inf
  CHECK(schur_norm(rank_one * std::complex<double>(0.0, 1.0)).norm == doctest::Approx(9.0).epsilon(1e-6));
}

TEST_CASE("invariance under diagonal unitaries, transpose and adjoint") {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 5));
    const ComplexMatrix a = oracle::random_matrix(rng, n, n);
    Eigen::VectorXcd du(n), dv(n);
    for (int i = 0; i < n; ++i) {
      du(i) = std::polar(1.0, rng.uniform(0.0, 6.3));
      dv(i) = std::polar(1.0, rng.uniform(0.0, 6.3));
    }
    const double base = schur_norm(a).norm;
    CHECK(schur_norm(du.asDiagonal() * a * dv.asDiagonal()).norm == doctest::Approx(base).epsilon(1e-5));
    CHECK(schur_norm(a.transpose()).norm == doctest::Approx(base).epsilon(1e-5));
    CHECK(schur_norm(a.adjoint()).norm == doctest::Approx(base).epsilon(1e-5));
    // Sandwich: max |a_ij| <= ||a||_S <= ||a||.
    CHECK(a.cwiseAbs().maxCoeff() <= base + 1e-6);
    CHECK(base <= operator_norm(a) + 1e-6);
  }
}

TEST_CASE("lower bounds stay below the norm") {
  oracle::Rng rng(24);
  const ComplexMatrix a = oracle::random_matrix(rng, 4, 4);
  const double norm = schur_norm(a).norm;
  CHECK(schur_norm_lower(a, 200, 9) <= norm + 1e-9);
  Eigen::VectorXd p = Eigen::VectorXd::Constant(4, 0.5);
  CHECK(trace_norm_bound(a, p, p) <= norm + 1e-9);
  CHECK(schur_norm_lower(a, 50, 1) == schur_norm_lower(a, 50, 1));
}

TEST_CASE("projection-only method and completion helpers") {
  oracle::Rng rng(25);
  const ComplexMatrix a2 = oracle::random_matrix(rng, 2, 2);
  SchurOptions po;
  po.method = SchurMethod::ProjectionOnly;
  po.tol = 1e-4;
  const SchurResult proj = schur_norm(a2, po);
  CHECK(std::abs(proj.norm - schur_norm(a2).norm) <= 2e-4);

  const ComplexMatrix a = oracle::random_matrix(rng, 3, 3);

  const Eigen::VectorXd w = Eigen::VectorXd::Ones(3) / std::sqrt(3.0);
  const ComplexMatrix d = scaled_polar_completion(a, w, w);
  CHECK(min_eigenvalue(d) > -1e-9);
  CHECK((d.bottomLeftCorner(3, 3) - a).norm() < 1e-12);

  const SchurCertificate cert = make_certificate(a, d, d.diagonal().real().maxCoeff());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(cert.eta[j].dot(cert.xi[i]) - a(i, j)) < 1e-8);
  CHECK(verify_certificate(a, cert).pass());

  SchurCertificate broken = cert;
  broken.t *= 0.5;
  CHECK_FALSE(verify_certificate(a, broken).pass());
}

TEST_CASE("schur_norm domain errors") {
  CHECK_THROWS_AS(schur_norm(ComplexMatrix::Ones(2, 3)), DomainError);
  CHECK_THROWS_AS(schur_norm(ComplexMatrix::Ones(65, 65)), DomainError);
  CHECK(schur_product(ComplexMatrix::Ones(2, 2), ComplexMatrix::Identity(2, 2)) == ComplexMatrix::Identity(2, 2));
}
