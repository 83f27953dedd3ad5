#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace cbm {

using complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Max-abs entrywise distance between m and its conjugate transpose.
double hermitian_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);

// Largest singular value. Symmetric in m and m^* bit for bit.
double operator_norm(const ComplexMatrix& m);

double min_eigenvalue(const ComplexMatrix& hermitian);

// Nearest PSD matrix in Frobenius norm. Throws DomainError when m is not
// hermitian within herm_tol.
ComplexMatrix psd_project(const ComplexMatrix& m, double herm_tol = 1e-10);

// Hermitian square root of a PSD matrix; eigenvalues in [-neg_tol, 0) are
// treated as 0. Throws DomainError below -neg_tol.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m, double neg_tol = 1e-8);

struct LanczosOptions {
  int max_steps = 400;
  double rel_tol = 1e-10;
  std::uint64_t seed = 0x5eed;
};

// max |lambda| of a real symmetric matrix by Lanczos with full
// reorthogonalization.
double symmetric_spectral_radius(const Eigen::MatrixXd& a, const LanczosOptions& options = {});

}  // namespace cbm
