#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cbm/errors.hpp"
#include "cbm/lattice/lattice_function.hpp"
#include "cbm/numerics/grid_function.hpp"
#include "cbm/numerics/linalg.hpp"
#include "cbm/schur/schur.hpp"

namespace cbm {

enum class GroupTag { Z, R, Heis3, Dix4 };

// Coordinates of an element of any supported group; unused slots are 0.
// Z uses integer values in slot 0, R slot 0, Heis3 (x, y, z), Dix4 (x, y, z, w).
using GroupPoint = std::array<double, 4>;

GroupPoint group_mul(GroupTag g, const GroupPoint& p, const GroupPoint& q);
GroupPoint group_inv(GroupTag g, const GroupPoint& p);
const char* to_string(GroupTag g);
GroupTag group_from_string(const std::string& name);

using GroupFunction = std::function<std::complex<double>(const GroupPoint&)>;

// M_ij = phi(x_j^{-1} x_i). Throws DomainError naming (i, j) when phi throws
// or returns a non-finite value.
ComplexMatrix herz_schur_matrix(GroupTag g, const std::vector<GroupPoint>& elements,
                                const GroupFunction& phi);

struct SampledMultiplier {
  GroupTag group = GroupTag::Z;
  GroupFunction phi;
  std::vector<std::vector<GroupPoint>> sets;
};

// Distinct elements formed by random words of length <= max_word_length in
// the fixed generators of the group (and their inverses). Deterministic in
// seed.
std::vector<std::vector<GroupPoint>> random_word_sets(GroupTag g, int count, int set_size,
                                                      int max_word_length, std::uint64_t seed);

struct MultiplierBound {
  // max over sample sets of the Schur norm: a lower bound for the
  // completely bounded multiplier norm, not the norm itself.
  double lower_bound = 0.0;
  std::vector<double> per_set;
};

MultiplierBound m0a_lower_bound(const SampledMultiplier& sm, double tol = 1e-6);

// Multiplier described by {"group": "Z", "kind": "gaussian", "sigma": 1.0}.
// kinds: "gaussian" exp(-|p|^2 / sigma^2), "delta" (indicator of the
// identity), "constant" (1), "fejer" max(0, 1 - |p| / sigma) on Z and R.
struct MultiplierSpec {
  GroupTag group = GroupTag::Z;
  std::string kind = "gaussian";
  double sigma = 1.0;
};
GroupFunction make_multiplier(const MultiplierSpec& spec);

// (2 pi)^{-d} int_{[0, 2pi)^d} |sum_n phi(n) e^{i n.theta}| dtheta by the
// trapezoid rule with `points` nodes per axis. d must be 1 or 2.
double a_norm_abelian(const LatticeFunction& phi, int points = 1 << 14);

// ||f||_2 ||g||_2 with cell-volume weights; bounds ||f * g~||_A.
double a_norm_upper_conv(const GridFunction& f, const GridFunction& g);

}  // namespace cbm
