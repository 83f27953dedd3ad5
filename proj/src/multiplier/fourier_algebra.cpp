#include "cbm/multiplier/fourier_algebra.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <string>

#include "cbm/groups/nilpotent.hpp"

namespace cbm {

GroupPoint group_mul(GroupTag g, const GroupPoint& p, const GroupPoint& q) {
  switch (g) {
    case GroupTag::Z:
    case GroupTag::R:
      return {p[0] + q[0], 0.0, 0.0, 0.0};
    case GroupTag::Heis3: {
      const Heis3Element r = heis3_mul({p[0], p[1], p[2]}, {q[0], q[1], q[2]});
      return {r.x, r.y, r.z, 0.0};
    }
    case GroupTag::Dix4: {
      const Dix4Element r = dix4_mul({p[0], p[1], p[2], p[3]}, {q[0], q[1], q[2], q[3]});
      return {r.x, r.y, r.z, r.w};
    }
  }
  throw DomainError("group_mul: unknown group");
}

GroupPoint group_inv(GroupTag g, const GroupPoint& p) {
  switch (g) {
    case GroupTag::Z:
    case GroupTag::R:
      return {-p[0], 0.0, 0.0, 0.0};
    case GroupTag::Heis3:
      return {-p[0], -p[1], -p[2], 0.0};
    case GroupTag::Dix4:
      return {-p[0], -p[1], -p[2], -p[3]};
  }
  throw DomainError("group_inv: unknown group");
}

const char* to_string(GroupTag g) {
  switch (g) {
    case GroupTag::Z:
      return "Z";
    case GroupTag::R:
      return "R";
    case GroupTag::Heis3:
      return "Heis3";
    case GroupTag::Dix4:
      return "Dix4";
  }
  return "?";
}

GroupTag group_from_string(const std::string& name) {
  if (name == "Z" || name == "Zd") return GroupTag::Z;
  if (name == "R" || name == "Rd") return GroupTag::R;
  if (name == "Heis3") return GroupTag::Heis3;
  if (name == "Dix4") return GroupTag::Dix4;
  throw DomainError("unknown group '" + name + "'");
}

ComplexMatrix herz_schur_matrix(GroupTag g, const std::vector<GroupPoint>& elements,
                                const GroupFunction& phi) {
  const std::size_t n = elements.size();
  if (n == 0) throw DomainError("herz_schur_matrix: empty element list");
  if (n > 64) throw DomainError("herz_schur_matrix: more than 64 elements");
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where = " at pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      std::complex<double> v;
      try {
        v = phi(group_mul(g, group_inv(g, elements[j]), elements[i]));
      } catch (const std::exception& e) {
        throw DomainError(std::string("herz_schur_matrix: evaluation failed") + where + ": " + e.what());
      }
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw DomainError("herz_schur_matrix: non-finite value" + where);
      }
      m(i, j) = v;
    }
  }
  return m;
}

namespace {

std::vector<GroupPoint> generators(GroupTag g) {
  switch (g) {
    case GroupTag::Z:
      return {{1, 0, 0, 0}};
    case GroupTag::R:
      return {{1, 0, 0, 0}, {std::numbers::sqrt2, 0, 0, 0}};
    case GroupTag::Heis3:
    case GroupTag::Dix4:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}};
  }
  return {};
}

}  // namespace

std::vector<std::vector<GroupPoint>> random_word_sets(GroupTag g, int count, int set_size,
                                                      int max_word_length, std::uint64_t seed) {
  if (count < 1 || set_size < 1 || max_word_length < 0) {
    throw ConfigurationError("random_word_sets: counts must be positive");
  }
  std::mt19937_64 rng(seed);
  const std::vector<GroupPoint> gens = generators(g);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(2 * gens.size()) - 1);
  std::uniform_int_distribution<int> length(0, max_word_length);
  std::vector<std::vector<GroupPoint>> sets;
  for (int s = 0; s < count; ++s) {
    std::vector<GroupPoint> set;
    for (int attempt = 0; attempt < 100 * set_size && static_cast<int>(set.size()) < set_size; ++attempt) {
      GroupPoint p{0, 0, 0, 0};
      const int len = length(rng);
      for (int k = 0; k < len; ++k) {
        const int letter = pick(rng);
        const GroupPoint& gen = gens[letter / 2];
        p = group_mul(g, p, letter % 2 == 0 ? gen : group_inv(g, gen));
      }
      if (std::find(set.begin(), set.end(), p) == set.end()) set.push_back(p);
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

MultiplierBound m0a_lower_bound(const SampledMultiplier& sm, double tol) {
  if (sm.sets.empty()) throw DomainError("m0a_lower_bound: no sample sets");
  MultiplierBound out;
  SchurOptions options;
  options.tol = tol;
  for (const auto& set : sm.sets) {
    const ComplexMatrix m = herz_schur_matrix(sm.group, set, sm.phi);
    const double v = schur_norm(m, options).norm;
    out.per_set.push_back(v);
    out.lower_bound = std::max(out.lower_bound, v);
  }
  return out;
}

GroupFunction make_multiplier(const MultiplierSpec& spec) {
  if (!(spec.sigma > 0.0)) throw DomainError("multiplier spec: sigma must be positive");
  const double sigma = spec.sigma;
  auto norm2 = [](const GroupPoint& p) { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]; };
  if (spec.kind == "gaussian") {
    return [=](const GroupPoint& p) { return std::complex<double>(std::exp(-norm2(p) / (sigma * sigma))); };
  }
  if (spec.kind == "delta") {
    return [=](const GroupPoint& p) { return std::complex<double>(norm2(p) == 0.0 ? 1.0 : 0.0); };
  }
  if (spec.kind == "constant") {
    return [](const GroupPoint&) { return std::complex<double>(1.0); };
  }
  if (spec.kind == "fejer") {
    if (spec.group != GroupTag::Z && spec.group != GroupTag::R) {
      throw DomainError("multiplier spec: fejer is defined on Z and R only");
    }
    return [=](const GroupPoint& p) {
      return std::complex<double>(std::max(0.0, 1.0 - std::fabs(p[0]) / sigma));
    };
  }
  throw DomainError("multiplier spec: unknown kind '" + spec.kind + "'");
}

double a_norm_abelian(const LatticeFunction& phi, int points) {
  if (phi.dim != 1 && phi.dim != 2) throw DomainError("a_norm_abelian: dimension must be 1 or 2");
  if (phi.support.size() != phi.values.size()) throw DomainError("a_norm_abelian: malformed function");
  if (phi.support.size() > 1000) throw DomainError("a_norm_abelian: support above 10^3 points");
  if (points < 2) throw ConfigurationError("a_norm_abelian: need at least 2 quadrature points");
  const double step = 2.0 * std::numbers::pi / points;
  auto modulus = [&](double t0, double t1) {
    std::complex<double> acc{};
    for (std::size_t k = 0; k < phi.support.size(); ++k) {
      const auto& n = phi.support[k];
      acc += phi.values[k] * std::polar(1.0, n[0] * t0 + n[1] * t1);
    }
    return std::abs(acc);
  };
  double sum = 0.0;
  if (phi.dim == 1) {
    for (int i = 0; i < points; ++i) sum += modulus(i * step, 0.0);
    return sum / points;
  }
  for (int i = 0; i < points; ++i) {
    for (int j = 0; j < points; ++j) sum += modulus(i * step, j * step);
  }
  return sum / (static_cast<double>(points) * points);
}

double a_norm_upper_conv(const GridFunction& f, const GridFunction& g) {
  if (!f.same_geometry(g)) throw DomainError("a_norm_upper_conv: grid geometry mismatch");
  return f.l2_norm() * g.l2_norm();
}

}  // namespace cbm
