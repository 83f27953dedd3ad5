#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cbm/numerics/execution.hpp"

namespace cbm {

enum class KernelCase { SL3, SP2 };

struct KernelSpec {
  KernelCase kernel_case = KernelCase::SL3;
  double a = 1.0;
  double b = 0.0;  // SP2 only
};

// 2 pi^2 / |s - t| J0(a sqrt(-4 s t)) for s t < 0, else 0. Throws
// DomainError when a == 0.
double kernel_sl3(const KernelSpec& spec, double s, double t);

// 2 pi^2 / |s - t| J0(sqrt(-(a s^2 + b)(a t^2 + b))) where
// (a s^2 + b)(a t^2 + b) < 0, else 0. Vanishes identically when a b >= 0.
double kernel_sp2(const KernelSpec& spec, double s, double t);

// K(s, t) = 1 / |s - t| for s t < 0, else 0.
double majorant_sl3(double s, double t);
// K_c(s, t) = 1 / |s - t| where (s^2 - c^2)(t^2 - c^2) < 0, else 0.
double majorant_sp2(double c, double s, double t);

// Kernels of (pi/2)(U H - H U) with U = sign(s), and of
// (pi/2)(U2 H U1 - U1 H U2) with U1 = sign(t + c), U2 = sign(t - c), for
// H f(s) = (1/pi) int f(t) / (s - t) dt.
double commutator_kernel_sl3(double s, double t);
double commutator_kernel_sp2(double c, double s, double t);

struct KernelSample {
  double s;
  double t;
};

// max |majorant - commutator kernel| over the samples (c ignored for SL3).
double commutator_kernel_residual(KernelCase kernel_case, double c, const std::vector<KernelSample>& samples);

// Symmetric Nystroem grid on [-half_width, half_width]: midpoint cells
// graded geometrically toward each singular point (0 for the SL3 kernels,
// +-c for SP2), the smallest cell having size `cutoff`.
struct NystromGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> singular_points;
  double half_width = 0.0;
  double cutoff = 0.0;
};

// `points` nodes in total; singular_points are the non-negative loci (the
// grid is mirrored). Throws ConfigurationError when the loci do not fit.
NystromGrid graded_grid(double half_width, std::size_t points, const std::vector<double>& singular_points,
                        double cutoff);

// Uniform midpoint grid, kept for comparison.
NystromGrid uniform_grid(double half_width, std::size_t points);

using RealKernel = std::function<double(double, double)>;

// Operator norm of sqrt(w_i) k(s_i, s_j) sqrt(w_j) for a symmetric kernel.
// Throws ConfigurationError when a node lies within cutoff/2 of a singular
// point.
double kernel_operator_norm(const RealKernel& kernel, const NystromGrid& grid,
                            Execution exec = Execution::Serial);

}  // namespace cbm
