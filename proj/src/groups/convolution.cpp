#include "cbm/groups/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cbm/errors.hpp"
#include "cbm/groups/nilpotent.hpp"

namespace cbm {

namespace {

void check_input(const GridFunction& f, const char* name) {
  if (f.dim() != 3) throw DomainError(std::string("heis3_convolution: ") + name + " is not 3D");
  if (f.size() > kMaxConvolutionNodes) {
    throw ResourceError(std::string("heis3_convolution: ") + name + " exceeds 24^3 nodes");
  }
}

struct Box {
  double lo[3];
  double hi[3];
};

Box box_of(const GridFunction& f) {
  Box b{};
  for (int a = 0; a < 3; ++a) {
    b.lo[a] = f.origin()[a];
    b.hi[a] = f.upper(a);
  }
  return b;
}

struct Node {
  Heis3Element m;
  GridFunction::value_type value;
};

}  // namespace

GridFunction convolution_output_grid(const GridFunction& f, const GridFunction& g) {
  check_input(f, "f");
  check_input(g, "g");
  const Box bf = box_of(f);
  const Box bg = box_of(g);
  // n = m k^{-1} with m in box f, k in box g: x and y are differences, z
  // picks up the cross term -(x_m y_k - x_k y_m)/2 whose extremes lie at
  // corners.
  double lo[3] = {bf.lo[0] - bg.hi[0], bf.lo[1] - bg.hi[1], INFINITY};
  double hi[3] = {bf.hi[0] - bg.lo[0], bf.hi[1] - bg.lo[1], -INFINITY};
  for (double xm : {bf.lo[0], bf.hi[0]}) {
    for (double ym : {bf.lo[1], bf.hi[1]}) {
      for (double xk : {bg.lo[0], bg.hi[0]}) {
        for (double yk : {bg.lo[1], bg.hi[1]}) {
          const double cross = -0.5 * (xm * yk - xk * ym);
          lo[2] = std::min(lo[2], bf.lo[2] - bg.hi[2] + cross);
          hi[2] = std::max(hi[2], bf.hi[2] - bg.lo[2] + cross);
        }
      }
    }
  }
  std::vector<double> origin(3);
  std::vector<double> spacing(3);
  std::vector<std::size_t> shape(3);
  for (int a = 0; a < 3; ++a) {
    const double h = f.spacing()[a];
    // Keep the nodes on f's lattice, offset by g's origin.
    const double anchor = f.origin()[a] - g.upper(a);
    const double start = anchor + std::floor((lo[a] - anchor) / h + 1e-9) * h;
    const auto count = static_cast<std::size_t>(std::ceil((hi[a] - start) / h - 1e-9)) + 1;
    origin[a] = start;
    spacing[a] = h;
    shape[a] = std::max<std::size_t>(count, 2);
  }
  return GridFunction(origin, spacing, shape);
}

GridFunction heis3_convolution(const GridFunction& f, const GridFunction& g, const GridFunction& out_like,
                               Execution exec) {
  check_input(f, "f");
  check_input(g, "g");
  if (out_like.dim() != 3) throw DomainError("heis3_convolution: output grid is not 3D");
  std::vector<Node> nodes;
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (f[n] == GridFunction::value_type{}) continue;
    const auto p = f.point(n);
    nodes.push_back({{p[0], p[1], p[2]}, f[n]});
  }
  const double vol = f.cell_volume();
  GridFunction out = out_like;
  auto cell = [&](std::size_t idx) {
    const auto q = out.point(idx);
    const Heis3Element inv = heis3_inv({q[0], q[1], q[2]});
    GridFunction::value_type acc{};
    for (const Node& node : nodes) {
      const Heis3Element k = heis3_mul(inv, node.m);
      acc += node.value * std::conj(g.linear({k.x, k.y, k.z}));
    }
    return acc * vol;
  };
  const long total = static_cast<long>(out.size());
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < total; ++i) out[i] = cell(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < total; ++i) out[i] = cell(static_cast<std::size_t>(i));
  }
  return out;
}

GridFunction heis3_convolution(const GridFunction& f, const GridFunction& g, Execution exec) {
  return heis3_convolution(f, g, convolution_output_grid(f, g), exec);
}

}  // namespace cbm
