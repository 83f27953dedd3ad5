#include "cbm/distributions/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cbm/errors.hpp"
#include "cbm/groups/nilpotent.hpp"
#include "cbm/numerics/quadrature.hpp"

namespace cbm {

namespace {

using cplx = std::complex<double>;

void check_options(const PairingOptions& o) {
  for (double w : o.half_width) {
    if (!(w > 0.0) || !std::isfinite(w)) throw ConfigurationError("d_pairing: half widths must be positive");
  }
  if (!(o.exclusion > 0.0)) throw ConfigurationError("d_pairing: exclusion must be positive");
  if (!(o.max_panel > 0.0)) throw ConfigurationError("d_pairing: max_panel must be positive");
}

// PV int phi(x, y, z) / (b^2 - z^2) dz, b = c |y|.
cplx inner_z(const SpaceFunction& phi, double x, double y, const PairingOptions& o) {
  const double hz = o.z_extent ? std::min(o.z_extent(x), o.half_width[2]) : o.half_width[2];
  const double b = std::sqrt(1.0 + 0.25 * x * x) * std::fabs(y);
  const double h = std::min(o.exclusion, b / 8.0);
  auto integrand = [&](double z) { return phi(x, y, z) / ((b - z) * (b + z)); };
  if (b - h >= hz) {
    // Poles and their windows lie outside the support.
    const std::array<quad::Feature, 2> poles{quad::Feature{-b, h}, quad::Feature{b, h}};
    return quad::integrate_panels(integrand, quad::graded_breaks(-hz, hz, poles, o.max_panel));
  }
  const double edge = std::max(hz, b + 3.0 * h);
  const std::array<double, 2> poles{-b, b};
  quad::PvOptions pv;
  pv.max_panel = o.max_panel;
  return quad::pv_integral_richardson_shared(integrand, -edge, edge, poles, h, pv);
}

}  // namespace

std::complex<double> d_pairing(const SpaceFunction& phi, const PairingOptions& o) {
  check_options(o);
  const auto [hx, hy, hz] = o.half_width;
  (void)hz;
  const std::vector<quad::Node> xs = quad::panel_nodes(quad::uniform_breaks(-hx, hx, o.max_panel));
  // The inner integral varies on the scale |y| near y = 0.
  const std::array<quad::Feature, 1> origin{quad::Feature{0.0, o.exclusion / 64.0}};
  const std::vector<quad::Node> ys = quad::panel_nodes(quad::graded_breaks(-hy, hy, origin, o.max_panel));

  if (o.order == OuterOrder::XY) {
    auto row = [&](double x) {
      cplx s{};
      for (const quad::Node& n : ys) s += n.w * inner_z(phi, x, n.x, o);
      return s;
    };
    return quad::integrate_nodes(row, xs, o.exec);
  }
  auto column = [&](double y) {
    cplx s{};
    for (const quad::Node& n : xs) s += n.w * inner_z(phi, n.x, y, o);
    return s;
  };
  return quad::integrate_nodes(column, ys, o.exec);
}

std::complex<double> d_pairing(const GridFunction& phi, const PairingOptions& options) {
  if (phi.dim() != 3) throw DomainError("d_pairing: need a 3D grid");
  for (int a = 0; a < 3; ++a) {
    if (phi.spacing()[a] > options.exclusion / 4.0) {
      throw ConfigurationError("d_pairing: grid spacing exceeds exclusion/4; pole lines unresolved");
    }
  }
  PairingOptions o = options;
  for (int a = 0; a < 3; ++a) {
    o.half_width[a] = std::max(std::fabs(phi.origin()[a]), std::fabs(phi.upper(a)));
  }
  const SpaceFunction f = [&phi](double x, double y, double z) { return phi.cubic({x, y, z}); };
  return d_pairing(f, o);
}

IdentityCheck lemma_e_pair(const SpaceFunction& phi, const PairingOptions& options, int samples,
                           std::uint64_t seed) {
  check_options(options);
  IdentityCheck r;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int k = 0; k < samples; ++k) {
    const Heis3Element p{options.half_width[0] * unit(rng), options.half_width[1] * unit(rng),
                         options.half_width[2] * unit(rng)};
    const Heis3Element q = gamma(p);
    r.invariance_defect = std::max(r.invariance_defect, std::abs(phi(q.x, q.y, q.z) - phi(p.x, p.y, p.z)));
  }
  if (!(r.invariance_defect < 1e-8)) {
    std::ostringstream msg;
    msg << "lemma_e_pair: phi must satisfy phi o gamma = phi (sampled defect " << r.invariance_defect << ")";
    throw DomainError(msg.str());
  }
  const double hx = options.half_width[0];
  r.lhs = quad::integrate([&](double x) { return phi(x, 0.0, 0.0).real() / std::sqrt(1.0 + 0.25 * x * x); },
                          -hx, hx, options.max_panel);
  r.dval = d_pairing(phi, options);
  r.residual = std::abs(2.0 * r.dval - std::numbers::pi * std::numbers::pi * r.lhs);
  return r;
}

std::complex<double> representation_pairing_heis3(double a, const LineFunction& f, const LineFunction& g,
                                                  const RepresentationPairingOptions& o) {
  if (a == 0.0 || !std::isfinite(a)) throw DomainError("representation_pairing_heis3: need a != 0");
  if (!(o.x_half_width > 0.0) || !(o.y_half_width > 0.0) || !(o.t_hi > o.t_lo) || !(o.max_panel > 0.0)) {
    throw ConfigurationError("representation_pairing_heis3: invalid window");
  }
  const std::vector<quad::Node> xs =
      quad::panel_nodes(quad::uniform_breaks(-o.x_half_width, o.x_half_width, o.max_panel));
  // The y integrand has a kink at 0 through |y|.
  std::vector<double> ybreaks = quad::uniform_breaks(-o.y_half_width, 0.0, o.max_panel);
  const std::vector<double> right = quad::uniform_breaks(0.0, o.y_half_width, o.max_panel);
  ybreaks.insert(ybreaks.end(), right.begin() + 1, right.end());
  const std::vector<quad::Node> ys = quad::panel_nodes(ybreaks);
  const std::vector<quad::Node> ts = quad::panel_nodes(quad::uniform_breaks(o.t_lo, o.t_hi, o.max_panel));

  // fg[i][k] = w_k f(t_k - y_i) conj(g(t_k))
  std::vector<cplx> gbar(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) gbar[k] = ts[k].w * std::conj(g(ts[k].x));
  std::vector<cplx> fg(ys.size() * ts.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t k = 0; k < ts.size(); ++k) fg[i * ts.size() + k] = f(ts[k].x - ys[i].x) * gbar[k];
  }
  const double pi = std::numbers::pi;
  auto row = [&](double x) {
    const double c = std::sqrt(1.0 + 0.25 * x * x);
    std::vector<cplx> phase(ts.size());
    for (std::size_t k = 0; k < ts.size(); ++k) phase[k] = std::polar(1.0, a * x * ts[k].x);
    cplx s{};
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const double y = ys[i].x;
      cplx fxy{};
      for (std::size_t k = 0; k < ts.size(); ++k) fxy += phase[k] * fg[i * ts.size() + k];
      const double b = c * std::fabs(y);
      const double zpart = pi * std::sin(std::fabs(a) * b) / b;
      s += ys[i].w * zpart * std::polar(1.0, -0.5 * a * x * y) * fxy;
    }
    return s;
  };
  return quad::integrate_nodes(row, xs, o.exec);
}

std::complex<double> kernel_quadratic_form(const RealKernel& k, const LineFunction& f, const LineFunction& g,
                                           double half_width, const std::vector<double>& loci, double max_panel,
                                           Execution exec) {
  if (!(half_width > 0.0) || !(max_panel > 0.0)) throw ConfigurationError("kernel_quadratic_form: bad window");
  std::vector<quad::Feature> features;
  for (double p : loci) {
    features.push_back({p, 1e-4});
    if (p != 0.0) features.push_back({-p, 1e-4});
  }
  const std::vector<quad::Node> nodes =
      quad::panel_nodes(quad::graded_breaks(-half_width, half_width, features, max_panel));
  std::vector<cplx> fw(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) fw[j] = nodes[j].w * f(nodes[j].x);
  auto row = [&](double s) {
    cplx acc{};
    for (std::size_t j = 0; j < nodes.size(); ++j) acc += k(s, nodes[j].x) * fw[j];
    return std::conj(g(s)) * acc;
  };
  return quad::integrate_nodes(row, nodes, exec);
}

}  // namespace cbm
