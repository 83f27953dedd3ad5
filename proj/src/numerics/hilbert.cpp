#include "cbm/numerics/hilbert.hpp"

#include <numbers>

#include "cbm/errors.hpp"

namespace cbm {

namespace {

GridFunction::value_type hilbert_row(const GridFunction& f, std::size_t i) {
  const std::size_t n = f.size();
  GridFunction::value_type acc{};
  for (std::size_t j = 0; j < n; ++j) {
    const double offset = static_cast<double>(i) - static_cast<double>(j) + 0.5;
    acc += f[j] / offset;
  }
  return acc / std::numbers::pi;
}

}  // namespace

GridFunction discrete_hilbert(const GridFunction& f, Execution exec) {
  if (f.dim() != 1) throw DomainError("discrete_hilbert: need a 1D grid");
  if (f.size() < 64) throw DomainError("discrete_hilbert: need at least 64 nodes");
  const double h = f.spacing()[0];
  GridFunction out({f.origin()[0] + 0.5 * h}, {h}, {f.size()});
  const long n = static_cast<long>(f.size());
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) out[i] = hilbert_row(f, static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < n; ++i) out[i] = hilbert_row(f, static_cast<std::size_t>(i));
  }
  return out;
}

Eigen::MatrixXd hilbert_matrix(std::size_t n) {
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = 1.0 / (std::numbers::pi * (static_cast<double>(i) - static_cast<double>(j) + 0.5));
    }
  }
  return m;
}

}  // namespace cbm
