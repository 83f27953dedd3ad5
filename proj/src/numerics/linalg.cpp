#include "cbm/numerics/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "cbm/errors.hpp"

namespace cbm {

namespace {

void require_finite(const ComplexMatrix& m, const char* who) {
  if (m.size() == 0) throw DomainError(std::string(who) + ": empty matrix");
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const complex v = m.data()[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError(std::string(who) + ": non-finite entry");
    }
  }
}

double top_singular_value_gram(const ComplexMatrix& m) {
  const ComplexMatrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace

double hermitian_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermitian_defect(m) <= tol; }

double operator_norm(const ComplexMatrix& m) {
  require_finite(m, "operator_norm");
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  // Work on m / scale so the Gram matrix cannot overflow, and evaluate both
  // m^* m and m m^* so that the result does not depend on which of m, m^*
  // was passed.
  const ComplexMatrix unit = m / scale;
  const double a = top_singular_value_gram(unit);
  const double b = top_singular_value_gram(unit.adjoint());
  return scale * std::max(a, b);
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

ComplexMatrix psd_project(const ComplexMatrix& m, double herm_tol) {
  require_finite(m, "psd_project");
  if (m.rows() != m.cols()) throw DomainError("psd_project: matrix is not square");
  if (hermitian_defect(m) > herm_tol) throw DomainError("psd_project: matrix is not hermitian");
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  const ComplexMatrix& v = es.eigenvectors();
  ComplexMatrix out = v * clipped.asDiagonal() * v.adjoint();
  return 0.5 * (out + out.adjoint());
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m, double neg_tol) {
  require_finite(m, "hermitian_sqrt");
  if (m.rows() != m.cols()) throw DomainError("hermitian_sqrt: matrix is not square");
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  if (es.eigenvalues().minCoeff() < -neg_tol) {
    throw DomainError("hermitian_sqrt: matrix is indefinite beyond tolerance");
  }
  const Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix& v = es.eigenvectors();
  ComplexMatrix out = v * roots.asDiagonal() * v.adjoint();
  return 0.5 * (out + out.adjoint());
}

double symmetric_spectral_radius(const Eigen::MatrixXd& a, const LanczosOptions& options) {
  const Eigen::Index n = a.rows();
  if (n == 0 || a.cols() != n) throw DomainError("symmetric_spectral_radius: need a square matrix");
  if (!a.allFinite()) throw DomainError("symmetric_spectral_radius: non-finite entry");
  if (n <= 64) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }

  const int steps = static_cast<int>(std::min<Eigen::Index>(options.max_steps, n));
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::VectorXd q(n);
  for (Eigen::Index i = 0; i < n; ++i) q[i] = unif(rng);
  q.normalize();

  Eigen::MatrixXd basis(n, steps);
  std::vector<double> alpha;
  std::vector<double> beta;
  double previous = 0.0;
  double estimate = 0.0;
  for (int k = 0; k < steps; ++k) {
    basis.col(k) = q;
    Eigen::VectorXd w = a * q;
    alpha.push_back(q.dot(w));
    // Full reorthogonalization, twice for stability.
    for (int pass = 0; pass < 2; ++pass) {
      const Eigen::VectorXd coef = basis.leftCols(k + 1).transpose() * w;
      w -= basis.leftCols(k + 1) * coef;
    }
    const double b = w.norm();

    if (k % 10 == 9 || k + 1 == steps || b < 1e-14) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k + 1, k + 1);
      for (int i = 0; i <= k; ++i) {
        t(i, i) = alpha[i];
        if (i < k) t(i, i + 1) = t(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
      estimate = es.eigenvalues().cwiseAbs().maxCoeff();
      if (std::fabs(estimate - previous) <= options.rel_tol * estimate) break;
      previous = estimate;
    }
    if (b < 1e-14) break;
    beta.push_back(b);
    q = w / b;
  }
  return estimate;
}

}  // namespace cbm
