#include "cbm/numerics/grid_function.hpp"

#include <algorithm>
#include <cmath>

#include "cbm/errors.hpp"

namespace cbm {

GridFunction::GridFunction(std::vector<double> origin, std::vector<double> spacing,
                           std::vector<std::size_t> shape) {
  const std::size_t d = shape.size();
  if (d < 1 || d > 3) throw DomainError("GridFunction: dimension must be 1, 2 or 3");
  if (origin.size() != d || spacing.size() != d) {
    throw DomainError("GridFunction: origin/spacing/shape rank mismatch");
  }
  dim_ = static_cast<int>(d);
  std::size_t total = 1;
  for (std::size_t a = 0; a < d; ++a) {
    if (!(spacing[a] > 0.0) || !std::isfinite(spacing[a])) {
      throw DomainError("GridFunction: spacing must be positive and finite");
    }
    if (!std::isfinite(origin[a])) throw DomainError("GridFunction: non-finite origin");
    if (shape[a] < 2) throw DomainError("GridFunction: need at least 2 nodes per axis");
    origin_[a] = origin[a];
    spacing_[a] = spacing[a];
    shape_[a] = shape[a];
    total *= shape[a];
  }
  values_.assign(total, value_type{});
}

GridFunction GridFunction::centered(int dim, std::size_t points, double half_width) {
  if (points < 2) throw DomainError("GridFunction::centered: need at least 2 nodes");
  const double h = 2.0 * half_width / static_cast<double>(points - 1);
  return GridFunction(std::vector<double>(dim, -half_width), std::vector<double>(dim, h),
                      std::vector<std::size_t>(dim, points));
}

std::array<std::size_t, 3> GridFunction::multi_index(std::size_t n) const {
  const std::size_t k = n % shape_[2];
  const std::size_t rest = n / shape_[2];
  return {rest / shape_[1], rest % shape_[1], k};
}

std::array<double, 3> GridFunction::point(std::size_t n) const {
  const auto idx = multi_index(n);
  std::array<double, 3> p{0.0, 0.0, 0.0};
  for (int a = 0; a < dim_; ++a) p[a] = coord(a, idx[a]);
  return p;
}

double GridFunction::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim_; ++a) v *= spacing_[a];
  return v;
}

bool GridFunction::same_geometry(const GridFunction& other) const {
  return dim_ == other.dim_ && origin_ == other.origin_ && spacing_ == other.spacing_ &&
         shape_ == other.shape_;
}

namespace {

// Catmull-Rom weights for the four nodes around fractional offset u in [0,1).
std::array<double, 4> catmull_rom(double u) {
  const double u2 = u * u;
  const double u3 = u2 * u;
  return {0.5 * (-u3 + 2.0 * u2 - u), 0.5 * (3.0 * u3 - 5.0 * u2 + 2.0), 0.5 * (-3.0 * u3 + 4.0 * u2 + u),
          0.5 * (u3 - u2)};
}

}  // namespace

GridFunction::value_type GridFunction::linear(const std::array<double, 3>& p) const {
  std::array<std::size_t, 3> base{0, 0, 0};
  std::array<double, 3> frac{0.0, 0.0, 0.0};
  for (int a = 0; a < dim_; ++a) {
    const double s = (p[a] - origin_[a]) / spacing_[a];
    if (!(s >= 0.0) || s > static_cast<double>(shape_[a] - 1)) return {};
    std::size_t i = static_cast<std::size_t>(s);
    if (i >= shape_[a] - 1) i = shape_[a] - 2;
    base[a] = i;
    frac[a] = s - static_cast<double>(i);
  }
  value_type sum{};
  const int corners = 1 << dim_;
  for (int c = 0; c < corners; ++c) {
    double w = 1.0;
    std::array<std::size_t, 3> idx{0, 0, 0};
    for (int a = 0; a < dim_; ++a) {
      const int bit = (c >> a) & 1;
      idx[a] = base[a] + bit;
      w *= bit ? frac[a] : 1.0 - frac[a];
    }
    if (w != 0.0) sum += w * values_[index(idx[0], idx[1], idx[2])];
  }
  return sum;
}

GridFunction::value_type GridFunction::cubic(const std::array<double, 3>& p) const {
  std::array<long, 3> base{0, 0, 0};
  std::array<std::array<double, 4>, 3> weights{};
  for (int a = 0; a < 3; ++a) weights[a] = {0.0, 1.0, 0.0, 0.0};
  for (int a = 0; a < dim_; ++a) {
    const double s = (p[a] - origin_[a]) / spacing_[a];
    if (!(s >= 0.0) || s > static_cast<double>(shape_[a] - 1)) return {};
    long i = static_cast<long>(s);
    if (i >= static_cast<long>(shape_[a]) - 1) i = static_cast<long>(shape_[a]) - 2;
    base[a] = i;
    weights[a] = catmull_rom(s - static_cast<double>(i));
  }
  auto node = [&](int a, long i) -> bool { return i >= 0 && i < static_cast<long>(shape_[a]); };
  value_type sum{};
  const int span0 = 4;
  const int span1 = dim_ >= 2 ? 4 : 1;
  const int span2 = dim_ >= 3 ? 4 : 1;
  for (int a = 0; a < span0; ++a) {
    const long i = base[0] - 1 + a;
    if (!node(0, i) || weights[0][a] == 0.0) continue;
    for (int b = 0; b < span1; ++b) {
      const long j = dim_ >= 2 ? base[1] - 1 + b : 0;
      const double wb = dim_ >= 2 ? weights[1][b] : 1.0;
      if ((dim_ >= 2 && !node(1, j)) || wb == 0.0) continue;
      for (int c = 0; c < span2; ++c) {
        const long k = dim_ >= 3 ? base[2] - 1 + c : 0;
        const double wc = dim_ >= 3 ? weights[2][c] : 1.0;
        if ((dim_ >= 3 && !node(2, k)) || wc == 0.0) continue;
        sum += weights[0][a] * wb * wc * values_[index(i, j, k)];
      }
    }
  }
  return sum;
}

double GridFunction::l2_norm() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return std::sqrt(s * cell_volume());
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool GridFunction::vanishes_on_boundary(double tol) const {
  for (std::size_t n = 0; n < values_.size(); ++n) {
    const auto idx = multi_index(n);
    bool outer = false;
    for (int a = 0; a < dim_; ++a) {
      if (idx[a] == 0 || idx[a] + 1 == shape_[a]) outer = true;
    }
    if (outer && std::abs(values_[n]) > tol) return false;
  }
  return true;
}

std::array<double, 3> GridFunction::support_radius(double tol) const {
  std::array<double, 3> r{0.0, 0.0, 0.0};
  for (std::size_t n = 0; n < values_.size(); ++n) {
    if (std::abs(values_[n]) <= tol) continue;
    const auto p = point(n);
    for (int a = 0; a < dim_; ++a) r[a] = std::max(r[a], std::fabs(p[a]));
  }
  return r;
}

}  // namespace cbm
