#pragma once

#include <cstdint>
#include <vector>

#include "cbm/io/report.hpp"
#include "cbm/numerics/linalg.hpp"

namespace cbm {

ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Witness for ||a||_S <= t: a PSD block matrix d = [[b, a^*], [a, c]] with
// diag(d) <= t, and vectors with a_ij = <xi_i, eta_j>.
struct SchurCertificate {
  double t = 0.0;
  ComplexMatrix d;
  std::vector<ComplexVector> xi;
  std::vector<ComplexVector> eta;
};

struct SchurResult {
  double norm = 0.0;
  // Certified lower bound; norm - lower is the remaining bracket width.
  double lower = 0.0;
  SchurCertificate certificate;
  int bracket_iterations = 0;
  int projection_iterations = 0;
};

enum class SchurMethod {
  Auto,            // bracket first, projections only if the bracket stays open
  ProjectionOnly,  // bisection with alternating projections over [max|a_ij|, ||a||]
};

struct SchurOptions {
  double tol = 1e-6;
  SchurMethod method = SchurMethod::Auto;
  int bracket_max_iterations = 20000;
  // Alternating projections.
  long iteration_cap = 200000;
  double stall_residual = 1e-7;
  int stall_window = 500;
  double stall_improvement = 1e-3;
};

// Schur multiplier norm of a square matrix (n <= 64) within tol, with a
// certificate at the returned value. Throws DomainError for non-square or
// oversized input and ConvergenceError when the bracket cannot be closed.
SchurResult schur_norm(const ComplexMatrix& a, const SchurOptions& options = {});

// Outcome of one alternating-projection feasibility test at threshold t.
struct FeasibilityResult {
  enum class Status { Feasible, Infeasible, Undecided } status = Status::Undecided;
  double residual = 0.0;
  long iterations = 0;
  // Last iterate of the affine set; PSD up to -residual_eig when feasible.
  ComplexMatrix x;
  double min_eig = 0.0;
};

// Alternating projections between the PSD cone and
// {[[b, a^*], [a, c]] : diag <= t}. `warm` may be empty.
FeasibilityResult completion_feasible(const ComplexMatrix& a, double t, const ComplexMatrix& warm,
                                      const SchurOptions& options, double eig_tol);

// The 2n x 2n PSD completion [[D_p^-1 |M| D_p^-1, a^*], [a, D_q^-1 |M^*| D_q^-1]]
// with M = D_q a D_p, for positive weight vectors p (columns) and q (rows).
ComplexMatrix scaled_polar_completion(const ComplexMatrix& a, const Eigen::VectorXd& p,
                                      const Eigen::VectorXd& q);

// ||D_q a D_p||_1 (trace norm): a lower bound on ||a||_S for unit p, q >= 0.
double trace_norm_bound(const ComplexMatrix& a, const Eigen::VectorXd& p, const Eigen::VectorXd& q);

// Splits a PSD 2n x 2n matrix through its hermitian square root f:
// eta_i = row i of f, xi_i = row n + i. Throws DomainError if d is
// indefinite beyond 1e-8.
void certificate_to_gram(const ComplexMatrix& d, std::vector<ComplexVector>& xi,
                         std::vector<ComplexVector>& eta);

// Certificate with d, xi, eta filled in from a completion at level t.
SchurCertificate make_certificate(const ComplexMatrix& a, const ComplexMatrix& d, double t);

Report verify_certificate(const ComplexMatrix& a, const SchurCertificate& cert, double tol = 1e-8);

// max over `trials` contractions b of ||a * b||; the first trial is the
// identity, then Gaussian matrices scaled to norm 1 alternate with Haar
// unitaries. Deterministic in seed.
double schur_norm_lower(const ComplexMatrix& a, int trials, std::uint64_t seed);

}  // namespace cbm
