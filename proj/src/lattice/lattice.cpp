#include "cbm/lattice/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <vector>

#include "cbm/errors.hpp"
#include "cbm/multiplier/fourier_algebra.hpp"

namespace cbm {

namespace {

void check_dim(int dim, const char* who) {
  if (dim != 1 && dim != 2) throw DomainError(std::string(who) + ": dimension must be 1 or 2");
}

LatticePoint floor_point(const RealPoint& p, int dim) {
  return {static_cast<long>(std::floor(p[0])), dim == 2 ? static_cast<long>(std::floor(p[1])) : 0L};
}

// Cells of [0, 1) on which floor(a + w) and floor(b + w) are constant.
std::vector<double> axis_partition(double a, double b) {
  std::vector<double> cuts{0.0, 1.0};
  for (double v : {a, b}) {
    const double f = v - std::floor(v);
    if (f > 0.0) cuts.push_back(1.0 - f);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

}  // namespace

Decomposition decompose(const RealPoint& x, int dim) {
  check_dim(dim, "decompose");
  Decomposition d{{0.0, 0.0}, {0, 0}};
  for (int a = 0; a < dim; ++a) {
    if (!std::isfinite(x[a])) throw DomainError("decompose: non-finite point");
    const double g = std::floor(x[a]);
    d.gamma[a] = static_cast<long>(g);
    d.omega[a] = x[a] - g;
  }
  return d;
}

double tent(double t) { return std::max(0.0, 1.0 - std::fabs(t)); }

std::complex<double> induced_value(const LatticeFunction& phi, const RealPoint& t) {
  check_dim(phi.dim, "induce");
  std::complex<double> acc{};
  for (std::size_t k = 0; k < phi.support.size(); ++k) {
    const auto& n = phi.support[k];
    double w = tent(t[0] - n[0]);
    if (phi.dim == 2) w *= tent(t[1] - n[1]);
    if (w != 0.0) acc += w * phi.values[k];
  }
  return acc;
}

std::function<std::complex<double>(const RealPoint&)> induce(LatticeFunction phi) {
  check_dim(phi.dim, "induce");
  return [phi = std::move(phi)](const RealPoint& t) { return induced_value(phi, t); };
}

std::complex<double> breakpoint_integral(const std::function<std::complex<double>(const RealPoint&)>& f,
                                         const RealPoint& x, const RealPoint& y, int dim) {
  check_dim(dim, "breakpoint_integral");
  const std::vector<double> c0 = axis_partition(x[0], y[0]);
  const std::vector<double> c1 = dim == 2 ? axis_partition(x[1], y[1]) : std::vector<double>{0.0, 1.0};
  std::complex<double> acc{};
  for (std::size_t i = 0; i + 1 < c0.size(); ++i) {
    for (std::size_t j = 0; j + 1 < c1.size(); ++j) {
      const RealPoint mid{0.5 * (c0[i] + c0[i + 1]), dim == 2 ? 0.5 * (c1[j] + c1[j + 1]) : 0.0};
      acc += (c0[i + 1] - c0[i]) * (c1[j + 1] - c1[j]) * f(mid);
    }
  }
  return acc;
}

Report check_induction_formula(const LatticeFunction& phi, const RealPoint& x, const RealPoint& y) {
  check_dim(phi.dim, "check_induction_formula");
  const int d = phi.dim;
  Report r;
  r.claim_id = "formula-p20";
  r.inputs["dim"] = d;
  r.inputs["x"] = d == 2 ? nlohmann::ordered_json{x[0], x[1]} : nlohmann::ordered_json{x[0]};
  r.inputs["y"] = d == 2 ? nlohmann::ordered_json{y[0], y[1]} : nlohmann::ordered_json{y[0]};
  r.inputs["support_size"] = phi.support.size();
  const std::complex<double> lhs = induced_value(phi, {y[0] - x[0], y[1] - x[1]});
  const std::complex<double> rhs = breakpoint_integral(
      [&](const RealPoint& w) {
        const LatticePoint gy = floor_point({y[0] + w[0], y[1] + w[1]}, d);
        const LatticePoint gx = floor_point({x[0] + w[0], x[1] + w[1]}, d);
        return phi({gy[0] - gx[0], gy[1] - gx[1]});
      },
      x, y, d);
  r.add("induced_re", lhs.real());
  r.add("induced_im", lhs.imag());
  r.add("integral_re", rhs.real());
  r.add("integral_im", rhs.imag());
  r.add("difference", std::abs(lhs - rhs));
  r.ref("difference", 0.0, "identity");
  r.tolerance = 1e-8;
  r.tolerance_kind = "absolute";
  r.verdict = std::abs(lhs - rhs) <= r.tolerance ? Verdict::Pass : Verdict::Fail;
  return r;
}

Report check_induced_norm(const LatticeFunction& phi, const InducedNormOptions& o) {
  if (phi.dim != 1) throw DomainError("check_induced_norm: only d = 1");
  if (o.points < 2 || o.periods < 1 || !(o.slack > 0.0)) throw ConfigurationError("check_induced_norm: bad options");
  Report r;
  r.claim_id = "lemma-2-1";
  r.inputs["support_size"] = phi.support.size();
  r.inputs["points"] = o.points;
  r.inputs["periods"] = o.periods;

  const double lattice_norm = a_norm_abelian(phi, o.points);
  const double two_pi = 2.0 * std::numbers::pi;
  const double step = two_pi / o.points;
  double induced_norm = 0.0;
  for (int i = 0; i < o.points; ++i) {
    const double theta = i * step;
    std::complex<double> p{};
    for (std::size_t k = 0; k < phi.support.size(); ++k) p += phi.values[k] * std::polar(1.0, phi.support[k][0] * theta);
    // sinc^2((theta + 2 pi k)/2) = 4 sin^2(theta/2) / (theta + 2 pi k)^2
    const double s2 = 4.0 * std::pow(std::sin(0.5 * theta), 2);
    double weight = 0.0;
    for (int k = -o.periods; k <= o.periods; ++k) {
      const double xi = theta + two_pi * k;
      weight += xi == 0.0 ? 1.0 : s2 / (xi * xi);
    }
    induced_norm += std::abs(p) * weight;
  }
  induced_norm /= o.points;
  double l1 = 0.0;
  for (const auto& v : phi.values) l1 += std::abs(v);
  const double tail = 2.0 * l1 / (std::numbers::pi * std::numbers::pi * o.periods);

  r.add("induced_norm", induced_norm);
  r.add("lattice_norm", lattice_norm);
  r.add("tail_bound", tail);
  r.ref("lattice_norm", lattice_norm, "bound");
  r.tolerance = o.slack;
  r.tolerance_kind = "upper-bound";
  if (tail > o.slack) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back("truncation tail bound exceeds the slack");
    return r;
  }
  r.verdict = induced_norm <= lattice_norm + o.slack ? Verdict::Pass : Verdict::Fail;
  return r;
}

GramLift gram_lift(const LatticeFunction& phi, const LatticeField& xi, const LatticeField& eta, const RealPoint& x,
                   const RealPoint& y, int dim) {
  check_dim(dim, "gram_lift");
  Eigen::Index h = -1;
  for (const LatticeField* field : {&xi, &eta}) {
    for (const auto& [g, v] : *field) {
      if (h >= 0 && v.size() != h) throw DomainError("gram_lift: vectors of different dimension");
      h = v.size();
    }
  }
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(std::max<Eigen::Index>(h, 0));
  auto at = [&](const LatticeField& f, const LatticePoint& g) -> const Eigen::VectorXcd& {
    const auto it = f.find(g);
    return it == f.end() ? zero : it->second;
  };
  // <u, v> = sum u_i conj(v_i) = v^* u
  auto inner = [](const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) { return v.dot(u); };

  for (const auto& [g1, v1] : xi) {
    std::set<LatticePoint> partners;
    for (const auto& [g2, v2] : eta) partners.insert(g2);
    for (const auto& n : phi.support) partners.insert({g1[0] + n[0], g1[1] + n[1]});
    for (const LatticePoint& g2 : partners) {
      const std::complex<double> want = phi({g2[0] - g1[0], g2[1] - g1[1]});
      const std::complex<double> got = inner(v1, at(eta, g2));
      if (std::abs(want - got) > 1e-10 * std::max(1.0, std::abs(want))) {
        std::ostringstream msg;
        msg << "gram_lift: phi(g2 - g1) != <xi(g1), eta(g2)> at g1 = (" << g1[0] << ", " << g1[1] << "), g2 = ("
            << g2[0] << ", " << g2[1] << ")";
        throw DomainError(msg.str());
      }
    }
  }
  GramLift out;
  out.inner = breakpoint_integral(
      [&](const RealPoint& w) {
        const LatticePoint gx = floor_point({x[0] + w[0], x[1] + w[1]}, dim);
        const LatticePoint gy = floor_point({y[0] + w[0], y[1] + w[1]}, dim);
        return inner(at(xi, gx), at(eta, gy));
      },
      x, y, dim);
  LatticeFunction shaped = phi;
  shaped.dim = dim;
  out.induced = induced_value(shaped, {y[0] - x[0], y[1] - x[1]});
  return out;
}

}  // namespace cbm
