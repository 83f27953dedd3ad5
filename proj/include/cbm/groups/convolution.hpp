#pragma once

#include <cstddef>

#include "cbm/numerics/execution.hpp"
#include "cbm/numerics/grid_function.hpp"

namespace cbm {

// Largest accepted input grid: the sum costs O(output * input).
inline constexpr std::size_t kMaxConvolutionNodes = 24 * 24 * 24;

// Grid with f's spacing whose box contains supp f . (supp g)^{-1}, the
// support of f * g~ under the Heisenberg law.
GridFunction convolution_output_grid(const GridFunction& f, const GridFunction& g);

// (f * g~)(n) = sum_m f(m) conj(g(n^{-1} m)) vol(f), with g evaluated by
// trilinear interpolation (zero outside its box), sampled on `out`'s nodes.
// Throws ResourceError for inputs above 24^3 nodes and DomainError for
// non-3D input.
GridFunction heis3_convolution(const GridFunction& f, const GridFunction& g, const GridFunction& out,
                               Execution exec = Execution::Serial);
GridFunction heis3_convolution(const GridFunction& f, const GridFunction& g,
                               Execution exec = Execution::Serial);

}  // namespace cbm
