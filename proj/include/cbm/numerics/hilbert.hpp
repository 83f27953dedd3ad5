#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "cbm/numerics/execution.hpp"
#include "cbm/numerics/grid_function.hpp"

namespace cbm {

// H f(s) = (1/pi) int f(t) / (s - t) dt sampled at s_i = t_i + spacing/2, so
// s - t never vanishes:
//   (H f)(s_i) = (1/pi) sum_j f(t_j) / (i - j + 1/2).
// The result lives on the input grid shifted by half a spacing. Needs at
// least 64 nodes.
GridFunction discrete_hilbert(const GridFunction& f, Execution exec = Execution::Serial);

// The n x n matrix (1/pi) / (i - j + 1/2) applied by discrete_hilbert.
Eigen::MatrixXd hilbert_matrix(std::size_t n);

}  // namespace cbm
