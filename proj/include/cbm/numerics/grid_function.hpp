#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace cbm {

// Uniformly sampled complex function on a closed, endpoint-inclusive box in
// R^dim (dim 1..3). Node (i, j, k) sits at origin + (i, j, k) * spacing.
// Values are row-major: the last axis varies fastest.
class GridFunction {
 public:
  using value_type = std::complex<double>;

  GridFunction() = default;
  GridFunction(std::vector<double> origin, std::vector<double> spacing,
               std::vector<std::size_t> shape);

  // Grid with `points` nodes per axis spanning [-half_width, half_width].
  static GridFunction centered(int dim, std::size_t points, double half_width);

  // Grid with the geometry of `like`, sampled from f.
  template <class F>
  static GridFunction sample(const GridFunction& like, F&& f) {
    GridFunction out = like;
    out.fill(std::forward<F>(f));
    return out;
  }

  // values[n] = f(point of node n); f takes a const std::array<double, 3>&
  // (unused axes are 0).
  template <class F>
  void fill(F&& f) {
    for (std::size_t n = 0; n < values_.size(); ++n) values_[n] = f(point(n));
  }

  int dim() const { return dim_; }
  std::size_t size() const { return values_.size(); }
  const std::array<double, 3>& origin() const { return origin_; }
  const std::array<double, 3>& spacing() const { return spacing_; }
  const std::array<std::size_t, 3>& shape() const { return shape_; }
  double coord(int axis, std::size_t i) const { return origin_[axis] + spacing_[axis] * i; }
  double upper(int axis) const { return coord(axis, shape_[axis] - 1); }

  std::size_t index(std::size_t i, std::size_t j = 0, std::size_t k = 0) const {
    return (i * shape_[1] + j) * shape_[2] + k;
  }
  std::array<std::size_t, 3> multi_index(std::size_t n) const;
  std::array<double, 3> point(std::size_t n) const;

  value_type& operator[](std::size_t n) { return values_[n]; }
  const value_type& operator[](std::size_t n) const { return values_[n]; }
  value_type& at(std::size_t i, std::size_t j = 0, std::size_t k = 0) { return values_[index(i, j, k)]; }
  const value_type& at(std::size_t i, std::size_t j = 0, std::size_t k = 0) const {
    return values_[index(i, j, k)];
  }
  std::vector<value_type>& values() { return values_; }
  const std::vector<value_type>& values() const { return values_; }

  double cell_volume() const;
  bool same_geometry(const GridFunction& other) const;

  // Multilinear interpolation; zero outside the box.
  value_type linear(const std::array<double, 3>& p) const;
  // Catmull-Rom cubic along each axis; zero outside the box.
  value_type cubic(const std::array<double, 3>& p) const;

  double l2_norm() const;
  double max_abs() const;
  // True when every node on the outermost layer has modulus <= tol.
  bool vanishes_on_boundary(double tol = 0.0) const;
  // Per axis, the largest |coordinate| of a node with modulus > tol.
  std::array<double, 3> support_radius(double tol = 0.0) const;

 private:
  int dim_ = 0;
  std::array<double, 3> origin_{0.0, 0.0, 0.0};
  std::array<double, 3> spacing_{1.0, 1.0, 1.0};
  std::array<std::size_t, 3> shape_{1, 1, 1};
  std::vector<value_type> values_;
};

}  // namespace cbm
