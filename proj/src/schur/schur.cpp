#include "cbm/schur/schur.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "cbm/errors.hpp"

namespace cbm {

ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("schur_product: shape mismatch");
  }
  return a.cwiseProduct(b);
}

namespace {

struct Svd {
  ComplexMatrix u;
  Eigen::VectorXd s;
  ComplexMatrix v;
};

Svd thin_svd(const ComplexMatrix& m) {
  Eigen::BDCSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

// Row-wise sum_k |w_ik|^2 s_k, i.e. the diagonal of w diag(s) w^*.
Eigen::VectorXd weighted_row_norms(const ComplexMatrix& w, const Eigen::VectorXd& s) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(w.rows());
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index k = 0; k < w.cols(); ++k) out[i] += std::norm(w(i, k)) * s[k];
  }
  return out;
}

ComplexMatrix scaled(const ComplexMatrix& a, const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  return q.asDiagonal() * a * p.asDiagonal();
}

// Places the off-diagonal blocks a, a^* into x exactly.
void overwrite_blocks(ComplexMatrix& x, const ComplexMatrix& a) {
  const Eigen::Index n = a.rows();
  x.bottomLeftCorner(n, n) = a;
  x.topRightCorner(n, n) = a.adjoint();
}

double max_diagonal(const ComplexMatrix& d) { return d.diagonal().real().maxCoeff(); }

// Raises the diagonal by the negative part of the smallest eigenvalue so the
// completion is PSD up to rounding.
void shift_to_psd(ComplexMatrix& d) {
  const double lam = min_eigenvalue(d);
  if (lam < 0.0) d.diagonal().array() += -lam;
}

struct Bracket {
  double lower = 0.0;
  double upper = INFINITY;
  Eigen::VectorXd p;
  Eigen::VectorXd q;
  int iterations = 0;
};

// Alternates the dual weights toward a fixed point of
//   p_j^2 ∝ diag(V S V^*)_j,  q_i^2 ∝ diag(U S U^*)_i,  M = D_q a D_p = U S V^*,
// tracking the best trace-norm lower bound and the best scaled-polar upper
// bound. At the fixed point both agree and equal ||a||_S.
Bracket primal_dual_bracket(const ComplexMatrix& a, double target_gap, int max_iterations) {
  const Eigen::Index m = a.rows();
  const Eigen::Index k = a.cols();
  Eigen::VectorXd y = Eigen::VectorXd::Constant(k, 1.0 / k);
  Eigen::VectorXd z = Eigen::VectorXd::Constant(m, 1.0 / m);
  const double floor_y = 1e-14 / k;
  const double floor_z = 1e-14 / m;
  Bracket best;
  for (int it = 0; it < max_iterations; ++it) {
    const Eigen::VectorXd p = y.cwiseSqrt();
    const Eigen::VectorXd q = z.cwiseSqrt();
    const Svd svd = thin_svd(scaled(a, p, q));
    const double trace = svd.s.sum();
    const Eigen::VectorXd bd = weighted_row_norms(svd.v, svd.s);
    const Eigen::VectorXd cd = weighted_row_norms(svd.u, svd.s);
    const double upper = std::max(bd.cwiseQuotient(y).maxCoeff(), cd.cwiseQuotient(z).maxCoeff());
    best.iterations = it + 1;
    if (trace > best.lower) best.lower = trace;
    if (upper < best.upper) {
      best.upper = upper;
      best.p = p;
      best.q = q;
    }
    if (best.upper - best.lower <= target_gap) break;
    y = (0.5 * y + (0.5 / trace) * bd).cwiseMax(floor_y);
    z = (0.5 * z + (0.5 / trace) * cd).cwiseMax(floor_z);
    y /= y.sum();
    z /= z.sum();
  }
  return best;
}

void validate(const ComplexMatrix& a, const SchurOptions& options) {
  if (a.rows() != a.cols()) throw DomainError("schur_norm: matrix is not square");
  if (a.rows() == 0) throw DomainError("schur_norm: empty matrix");
  if (a.rows() > 64) throw DomainError("schur_norm: n > 64 is beyond desk scale");
  if (!a.allFinite()) throw DomainError("schur_norm: non-finite entry");
  if (!(options.tol >= 1e-6)) throw DomainError("schur_norm: tol must be >= 1e-6");
}

// Completion from the bracket weights, embedded back into the full index set
// (zero rows and columns of a get a zero row in d).
ComplexMatrix completion_from_bracket(const ComplexMatrix& a, const std::vector<Eigen::Index>& rows,
                                      const std::vector<Eigen::Index>& cols, const Eigen::VectorXd& p,
                                      const Eigen::VectorXd& q) {
  const Eigen::Index n = a.rows();
  ComplexMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = a(rows[i], cols[j]);
  }
  const ComplexMatrix local = scaled_polar_completion(sub, p, q);
  ComplexMatrix d = ComplexMatrix::Zero(2 * n, 2 * n);
  std::vector<Eigen::Index> map;
  for (Eigen::Index j : cols) map.push_back(j);
  for (Eigen::Index i : rows) map.push_back(n + i);
  for (Eigen::Index r = 0; r < local.rows(); ++r) {
    for (Eigen::Index c = 0; c < local.cols(); ++c) d(map[r], map[c]) = local(r, c);
  }
  overwrite_blocks(d, a);
  d = 0.5 * (d + d.adjoint());
  overwrite_blocks(d, a);
  shift_to_psd(d);
  return d;
}

SchurResult bisect_with_projections(const ComplexMatrix& a, double lo, double hi, ComplexMatrix best_d,
                                    const SchurOptions& options, SchurResult result) {
  const double eig_tol = options.tol / 8.0;
  while (hi - lo > options.tol) {
    const double mid = 0.5 * (lo + hi);
    FeasibilityResult r = completion_feasible(a, mid, best_d, options, eig_tol);
    result.projection_iterations += static_cast<int>(r.iterations);
    if (r.status == FeasibilityResult::Status::Feasible) {
      ComplexMatrix d = r.x;
      overwrite_blocks(d, a);
      shift_to_psd(d);
      best_d = d;
      hi = std::min(hi, max_diagonal(d));
    } else if (r.status == FeasibilityResult::Status::Infeasible) {
      lo = mid;
    } else {
      throw ConvergenceError("schur_norm: alternating projections hit the iteration cap at t = " +
                                 std::to_string(mid),
                             r.residual);
    }
  }
  result.norm = hi;
  result.lower = std::max(result.lower, lo);
  result.certificate = make_certificate(a, best_d, hi);
  return result;
}

}  // namespace

ComplexMatrix scaled_polar_completion(const ComplexMatrix& a, const Eigen::VectorXd& p,
                                      const Eigen::VectorXd& q) {
  const Eigen::Index m = a.rows();
  const Eigen::Index k = a.cols();
  if (p.size() != k || q.size() != m) throw DomainError("scaled_polar_completion: weight size mismatch");
  if (p.minCoeff() <= 0.0 || q.minCoeff() <= 0.0) {
    throw DomainError("scaled_polar_completion: weights must be positive");
  }
  const Svd svd = thin_svd(scaled(a, p, q));
  const Eigen::VectorXd root = svd.s.cwiseSqrt();
  // d = g g^* with g = [D_p^-1 V S^1/2; D_q^-1 U S^1/2].
  ComplexMatrix g(k + m, svd.s.size());
  g.topRows(k) = p.cwiseInverse().asDiagonal() * svd.v * root.asDiagonal();
  g.bottomRows(m) = q.cwiseInverse().asDiagonal() * svd.u * root.asDiagonal();
  ComplexMatrix d = g * g.adjoint();
  d.bottomLeftCorner(m, k) = a;
  d.topRightCorner(k, m) = a.adjoint();
  return d;
}

double trace_norm_bound(const ComplexMatrix& a, const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  return thin_svd(scaled(a, p, q)).s.sum();
}

FeasibilityResult completion_feasible(const ComplexMatrix& a, double t, const ComplexMatrix& warm,
                                      const SchurOptions& options, double eig_tol) {
  const Eigen::Index n = a.rows();
  FeasibilityResult out;
  ComplexMatrix x;
  if (warm.rows() == 2 * n && warm.cols() == 2 * n) {
    x = warm;
  } else {
    x = ComplexMatrix::Zero(2 * n, 2 * n);
    x.diagonal().setConstant(t);
  }
  auto project_affine = [&](ComplexMatrix& m) {
    overwrite_blocks(m, a);
    for (Eigen::Index i = 0; i < 2 * n; ++i) m(i, i) = std::min(m(i, i).real(), t);
  };
  project_affine(x);

  std::vector<double> history;
  history.reserve(options.iteration_cap / std::max(1, options.stall_window) + 2);
  for (long it = 0; it < options.iteration_cap; ++it) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (x + x.adjoint()));
    const Eigen::VectorXd lam = es.eigenvalues();
    out.iterations = it + 1;
    out.min_eig = lam.minCoeff();
    if (out.min_eig >= -eig_tol) {
      out.status = FeasibilityResult::Status::Feasible;
      out.x = x;
      out.residual = 0.0;
      return out;
    }
    const ComplexMatrix& v = es.eigenvectors();
    ComplexMatrix psd = v * lam.cwiseMax(0.0).asDiagonal() * v.adjoint();
    out.residual = (psd - x).norm();
    x = psd;
    project_affine(x);

    if (it % options.stall_window == 0) {
      history.push_back(out.residual);
      if (history.size() >= 2) {
        const double before = history[history.size() - 2];
        if (out.residual > options.stall_residual &&
            before - out.residual < options.stall_improvement * before) {
          out.status = FeasibilityResult::Status::Infeasible;
          out.x = x;
          return out;
        }
      }
    }
  }
  out.x = x;
  return out;
}

void certificate_to_gram(const ComplexMatrix& d, std::vector<ComplexVector>& xi,
                         std::vector<ComplexVector>& eta) {
  if (d.rows() != d.cols() || d.rows() % 2 != 0) {
    throw DomainError("certificate_to_gram: need a square matrix of even size");
  }
  if (hermitian_defect(d) > 1e-8) throw DomainError("certificate_to_gram: matrix is not hermitian");
  const ComplexMatrix f = hermitian_sqrt(d, 1e-8);
  const Eigen::Index n = d.rows() / 2;
  xi.clear();
  eta.clear();
  for (Eigen::Index i = 0; i < n; ++i) {
    eta.push_back(f.row(i).transpose());
    xi.push_back(f.row(n + i).transpose());
  }
}

SchurCertificate make_certificate(const ComplexMatrix& a, const ComplexMatrix& d, double t) {
  SchurCertificate cert;
  cert.t = t;
  cert.d = d;
  overwrite_blocks(cert.d, a);
  certificate_to_gram(cert.d, cert.xi, cert.eta);
  return cert;
}

SchurResult schur_norm(const ComplexMatrix& a, const SchurOptions& options) {
  validate(a, options);
  const Eigen::Index n = a.rows();
  SchurResult result;

  std::vector<Eigen::Index> rows;
  std::vector<Eigen::Index> cols;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a.row(i).cwiseAbs().maxCoeff() > 0.0) rows.push_back(i);
    if (a.col(i).cwiseAbs().maxCoeff() > 0.0) cols.push_back(i);
  }
  if (rows.empty()) {
    result.certificate = make_certificate(a, ComplexMatrix::Zero(2 * n, 2 * n), 0.0);
    return result;
  }

  const double entry_max = a.cwiseAbs().maxCoeff();
  if (options.method == SchurMethod::ProjectionOnly) {
    const double top = operator_norm(a);
    ComplexMatrix d = ComplexMatrix::Zero(2 * n, 2 * n);
    d.diagonal().setConstant(top);
    overwrite_blocks(d, a);
    shift_to_psd(d);
    result.lower = entry_max;
    return bisect_with_projections(a, entry_max, max_diagonal(d), d, options, result);
  }

  ComplexMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = a(rows[i], cols[j]);
  }
  const Bracket br = primal_dual_bracket(sub, options.tol / 10.0, options.bracket_max_iterations);
  result.bracket_iterations = br.iterations;
  ComplexMatrix d = completion_from_bracket(a, rows, cols, br.p, br.q);
  const double upper = max_diagonal(d);
  const double lower = std::max(br.lower, entry_max);
  result.lower = lower;
  if (upper - lower <= options.tol) {
    result.norm = upper;
    result.certificate = make_certificate(a, d, upper);
    return result;
  }
  return bisect_with_projections(a, lower, upper, d, options, result);
}

Report verify_certificate(const ComplexMatrix& a, const SchurCertificate& cert, double tol) {
  Report r;
  r.claim_id = "schur-certificate";
  r.tolerance = tol;
  r.tolerance_kind = "absolute";
  r.verdict = Verdict::Pass;
  r.inputs["n"] = a.rows();
  r.inputs["t"] = cert.t;
  const Eigen::Index n = a.rows();
  if (a.rows() != a.cols() || cert.d.rows() != 2 * n || cert.d.cols() != 2 * n ||
      static_cast<Eigen::Index>(cert.xi.size()) != n || static_cast<Eigen::Index>(cert.eta.size()) != n) {
    r.require(false, "shapes");
    return r;
  }

  const double herm = hermitian_defect(cert.d);
  const double lam = min_eigenvalue(0.5 * (cert.d + cert.d.adjoint()));
  r.add("hermitian_defect", herm);
  r.add("min_eigenvalue", lam);
  r.require(herm <= tol && lam >= -tol, "d is hermitian PSD");

  double excess = -INFINITY;
  for (Eigen::Index i = 0; i < 2 * n; ++i) excess = std::max(excess, cert.d(i, i).real() - cert.t);
  r.add("diagonal_excess", excess);
  r.require(excess <= tol, "diag(d) <= t");

  bool exact = true;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (cert.d(n + i, j) != a(i, j)) exact = false;
    }
  }
  r.add("block_exact", exact ? 1.0 : 0.0);
  r.require(exact, "lower-left block equals a");

  double gram = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (cert.xi[i].size() != cert.eta[j].size()) {
        r.require(false, "gram vector sizes");
        return r;
      }
      // <xi_i, eta_j> = sum_k xi_ik conj(eta_jk)
      gram = std::max(gram, std::abs(a(i, j) - cert.eta[j].dot(cert.xi[i])));
    }
  }
  r.add("gram_residual", gram);
  r.require(gram <= tol, "a_ij = <xi_i, eta_j>");
  return r;
}

double schur_norm_lower(const ComplexMatrix& a, int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("schur_norm_lower: trials must be >= 1");
  const Eigen::Index n = a.rows();
  const Eigen::Index m = a.cols();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto gaussian = [&](Eigen::Index r, Eigen::Index c) {
    ComplexMatrix g(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index j = 0; j < c; ++j) g(i, j) = complex(normal(rng), normal(rng));
    }
    return g;
  };

  ComplexMatrix id = ComplexMatrix::Identity(n, m);
  double best = operator_norm(schur_product(a, id));
  for (int trial = 1; trial < trials; ++trial) {
    ComplexMatrix b;
    if (trial % 2 == 1) {
      b = gaussian(n, m);
      b /= operator_norm(b);
    } else {
      const Eigen::Index k = std::max(n, m);
      Eigen::HouseholderQR<ComplexMatrix> qr(gaussian(k, k));
      ComplexMatrix q = qr.householderQ();
      const ComplexMatrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
      for (Eigen::Index j = 0; j < k; ++j) {
        const double mag = std::abs(rr(j, j));
        if (mag > 0.0) q.col(j) *= rr(j, j) / mag;
      }
      b = q.topLeftCorner(n, m);
    }
    best = std::max(best, operator_norm(schur_product(a, b)));
  }
  return best;
}

}  // namespace cbm
