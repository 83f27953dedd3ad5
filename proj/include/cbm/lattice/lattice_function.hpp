#pragma once

#include <array>
#include <complex>
#include <vector>

namespace cbm {

// Finitely supported function on Z^d, d in {1, 2}. Unused coordinates of
// support points are 0.
struct LatticeFunction {
  int dim = 1;
  std::vector<std::array<long, 2>> support;
  std::vector<std::complex<double>> values;

  std::complex<double> operator()(const std::array<long, 2>& n) const {
    std::complex<double> acc{};
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (support[k] == n) acc += values[k];
    }
    return acc;
  }
  std::complex<double> operator()(long n) const { return (*this)({n, 0}); }
  void push(long n, std::complex<double> v) { push({n, 0}, v); }
  void push(std::array<long, 2> n, std::complex<double> v) {
    support.push_back(n);
    values.push_back(v);
  }
};

}  // namespace cbm
