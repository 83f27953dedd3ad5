#include "cbm/distributions/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "cbm/errors.hpp"
#include "cbm/numerics/bessel.hpp"
#include "cbm/numerics/linalg.hpp"

namespace cbm {

namespace {

constexpr double kTwoPiSq = 2.0 * std::numbers::pi * std::numbers::pi;

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

double kernel_sl3(const KernelSpec& spec, double s, double t) {
  if (spec.a == 0.0) throw DomainError("kernel_sl3: a must be nonzero");
  const double st = s * t;
  if (!(st < 0.0)) return 0.0;
  return kTwoPiSq / std::fabs(s - t) * bessel_j0(spec.a * std::sqrt(-4.0 * st));
}

double kernel_sp2(const KernelSpec& spec, double s, double t) {
  if (spec.a == 0.0) throw DomainError("kernel_sp2: a must be nonzero");
  const double ps = spec.a * s * s + spec.b;
  const double pt = spec.a * t * t + spec.b;
  const double prod = ps * pt;
  if (!(prod < 0.0)) return 0.0;
  return kTwoPiSq / std::fabs(s - t) * bessel_j0(std::sqrt(-prod));
}

double majorant_sl3(double s, double t) { return s * t < 0.0 ? 1.0 / std::fabs(s - t) : 0.0; }

double majorant_sp2(double c, double s, double t) {
  return (s * s - c * c) * (t * t - c * c) < 0.0 ? 1.0 / std::fabs(s - t) : 0.0;
}

double commutator_kernel_sl3(double s, double t) {
  if (s == t) return 0.0;
  return 0.5 * (sign(s) - sign(t)) / (s - t);
}

double commutator_kernel_sp2(double c, double s, double t) {
  if (s == t) return 0.0;
  return 0.5 * (sign(s - c) * sign(t + c) - sign(s + c) * sign(t - c)) / (s - t);
}

double commutator_kernel_residual(KernelCase kernel_case, double c, const std::vector<KernelSample>& samples) {
  double worst = 0.0;
  for (const auto& [s, t] : samples) {
    const double diff = kernel_case == KernelCase::SL3
                            ? majorant_sl3(s, t) - commutator_kernel_sl3(s, t)
                            : majorant_sp2(c, s, t) - commutator_kernel_sp2(c, s, t);
    worst = std::max(worst, std::fabs(diff));
  }
  return worst;
}

namespace {

// Cells of [lo, hi] graded toward `toward` (lo or hi): geometric edges at
// distances cutoff, ..., hi - lo from the singular end; the sliver of width
// cutoff next to it is left out.
void graded_segment(double lo, double hi, bool toward_lo, std::size_t cells, double cutoff,
                    std::vector<double>& nodes, std::vector<double>& weights) {
  const double len = hi - lo;
  const double ratio = std::pow(len / cutoff, 1.0 / static_cast<double>(cells));
  double inner = cutoff;
  for (std::size_t k = 0; k < cells; ++k) {
    const double outer = (k + 1 == cells) ? len : inner * ratio;
    const double mid = std::sqrt(inner * outer);
    nodes.push_back(toward_lo ? lo + mid : hi - mid);
    weights.push_back(outer - inner);
    inner = outer;
  }
}

}  // namespace

NystromGrid graded_grid(double half_width, std::size_t points, const std::vector<double>& singular_points,
                        double cutoff) {
  if (!(half_width > 0.0) || !(cutoff > 0.0) || points < 4) {
    throw ConfigurationError("graded_grid: need half_width > 0, cutoff > 0 and at least 4 points");
  }
  std::vector<double> loci = singular_points;
  std::sort(loci.begin(), loci.end());
  for (double p : loci) {
    if (p < 0.0 || p >= half_width) throw ConfigurationError("graded_grid: singular point outside [0, half_width)");
  }
  // Segments of [0, L] bounded by the loci; each end is either singular or
  // not. 0 counts as singular only when it is listed.
  struct Segment {
    double lo, hi;
    bool lo_singular, hi_singular;
  };
  std::vector<double> edges{0.0};
  for (double p : loci) {
    if (p > 0.0) edges.push_back(p);
  }
  edges.push_back(half_width);
  const bool zero_singular = !loci.empty() && loci.front() == 0.0;
  std::vector<Segment> segments;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const bool lo_s = i == 0 ? zero_singular : true;
    const bool hi_s = i + 2 < edges.size();
    const double lo = edges[i];
    const double hi = edges[i + 1];
    if (lo_s && hi_s) {
      const double mid = 0.5 * (lo + hi);
      segments.push_back({lo, mid, true, false});
      segments.push_back({mid, hi, false, true});
    } else {
      segments.push_back({lo, hi, lo_s, hi_s});
    }
  }
  // Cells per segment in proportion to the number of octaves it spans.
  const std::size_t half = points / 2;
  std::vector<double> octaves;
  double total = 0.0;
  for (const auto& seg : segments) {
    const double len = seg.hi - seg.lo;
    if (len <= 2.0 * cutoff) throw ConfigurationError("graded_grid: cutoff too large for the segment");
    const double oct = (seg.lo_singular || seg.hi_singular) ? std::log2(len / cutoff) : 1.0;
    octaves.push_back(oct);
    total += oct;
  }
  std::vector<std::size_t> cells(segments.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    cells[i] = std::max<std::size_t>(2, static_cast<std::size_t>(std::floor(half * octaves[i] / total)));
    assigned += cells[i];
  }
  if (assigned > half) throw ConfigurationError("graded_grid: too few points for the segments");
  cells.back() += half - assigned;

  std::vector<double> pos;
  std::vector<double> w;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& seg = segments[i];
    if (seg.lo_singular) {
      graded_segment(seg.lo, seg.hi, true, cells[i], cutoff, pos, w);
    } else if (seg.hi_singular) {
      graded_segment(seg.lo, seg.hi, false, cells[i], cutoff, pos, w);
    } else {
      const double h = (seg.hi - seg.lo) / static_cast<double>(cells[i]);
      for (std::size_t k = 0; k < cells[i]; ++k) {
        pos.push_back(seg.lo + (k + 0.5) * h);
        w.push_back(h);
      }
    }
  }
  std::vector<std::size_t> order(pos.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return pos[i] < pos[j]; });

  NystromGrid grid;
  grid.half_width = half_width;
  grid.cutoff = cutoff;
  grid.singular_points = loci;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    grid.nodes.push_back(-pos[*it]);
    grid.weights.push_back(w[*it]);
  }
  for (std::size_t i : order) {
    grid.nodes.push_back(pos[i]);
    grid.weights.push_back(w[i]);
  }
  return grid;
}

NystromGrid uniform_grid(double half_width, std::size_t points) {
  if (!(half_width > 0.0) || points < 2 || points % 2 != 0) {
    throw ConfigurationError("uniform_grid: need half_width > 0 and an even number of points");
  }
  NystromGrid grid;
  grid.half_width = half_width;
  const double h = 2.0 * half_width / static_cast<double>(points);
  grid.cutoff = h;
  for (std::size_t i = 0; i < points; ++i) {
    grid.nodes.push_back(-half_width + (i + 0.5) * h);
    grid.weights.push_back(h);
  }
  return grid;
}

double kernel_operator_norm(const RealKernel& kernel, const NystromGrid& grid, Execution exec) {
  const std::size_t n = grid.nodes.size();
  if (n == 0 || grid.weights.size() != n) throw ConfigurationError("kernel_operator_norm: empty grid");
  for (double node : grid.nodes) {
    for (double p : grid.singular_points) {
      if (std::fabs(std::fabs(node) - p) < 0.5 * grid.cutoff) {
        throw ConfigurationError("kernel_operator_norm: node collides with a singular locus");
      }
    }
  }
  Eigen::VectorXd root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = std::sqrt(grid.weights[i]);
  Eigen::MatrixXd m(n, n);
  const long rows = static_cast<long>(n);
  auto fill_row = [&](long i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = root[i] * kernel(grid.nodes[i], grid.nodes[j]) * root[j];
    }
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) fill_row(i);
  } else {
    for (long i = 0; i < rows; ++i) fill_row(i);
  }
  if (m.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  return symmetric_spectral_radius(0.5 * (m + m.transpose()));
}

}  // namespace cbm
