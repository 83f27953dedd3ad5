#include "cbm/distributions/fubini.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cbm/errors.hpp"
#include "cbm/numerics/bessel.hpp"
#include "cbm/numerics/quadrature.hpp"

namespace cbm {

namespace {

using cplx = std::complex<double>;

// int dv PV int dw phi(v, w) / (v^2 - w^2), the inner exclusion at v being
// min(h, |v|/8).
double iterated_pv(const PlaneFunction& phi, const FubiniOptions& o) {
  const double width = o.half_width;
  const double max_panel = 16.0 * 2.0 * width / o.grid;
  const double inner_edge = width + 2.0 * o.exclusion;
  auto inner = [&](double v) -> cplx {
    const double av = std::fabs(v);
    const double h = std::min(o.exclusion, av / 8.0);
    const std::array<double, 2> poles{-av, av};
    quad::PvOptions pv;
    pv.max_panel = max_panel;
    auto integrand = [&](double w) { return phi(v, w) / ((v - w) * (v + w)); };
    return quad::pv_integral_richardson(integrand, -inner_edge, inner_edge, poles, h, pv);
  };
  const std::array<quad::Feature, 1> center{quad::Feature{0.0, o.exclusion}};
  const std::vector<double> breaks = quad::graded_breaks(-width, width, center, max_panel);
  return quad::integrate_nodes(inner, quad::panel_nodes(breaks), o.exec).real();
}

void check_options(const FubiniOptions& o) {
  if (!(o.half_width > 0.0)) throw ConfigurationError("fubini_defect: half_width must be positive");
  if (!(o.exclusion > 0.0)) throw ConfigurationError("fubini_defect: exclusion must be positive");
  if (o.grid < 16) throw ConfigurationError("fubini_defect: grid must be at least 16");
  const double spacing = 2.0 * o.half_width / o.grid;
  if (spacing > o.exclusion / 4.0) {
    throw ConfigurationError("fubini_defect: grid spacing exceeds exclusion/4; pole lines unresolved");
  }
}

}  // namespace

FubiniResult fubini_defect(const PlaneFunction& phi, const FubiniOptions& options) {
  check_options(options);
  FubiniResult r;
  r.i_value = iterated_pv(phi, options);
  // J(phi) = int dz PV int dy phi / (y^2 - z^2) = -I(phi^T).
  const PlaneFunction swapped = [&](double v, double w) { return phi(w, v); };
  r.j_value = -iterated_pv(swapped, options);
  r.defect = r.i_value - r.j_value;
  return r;
}

FubiniResult fubini_defect(const GridFunction& phi, const FubiniOptions& options) {
  if (phi.dim() != 2) throw DomainError("fubini_defect: need a 2D grid");
  for (int a = 0; a < 2; ++a) {
    if (phi.spacing()[a] > options.exclusion / 4.0) {
      throw ConfigurationError("fubini_defect: grid spacing exceeds exclusion/4; pole lines unresolved");
    }
  }
  FubiniOptions o = options;
  o.half_width = 0.0;
  for (int a = 0; a < 2; ++a) {
    o.half_width = std::max({o.half_width, std::fabs(phi.origin()[a]), std::fabs(phi.upper(a))});
  }
  const PlaneFunction f = [&phi](double y, double z) { return phi.cubic({y, z, 0.0}); };
  return fubini_defect(f, o);
}

const double kBesselTransformFactor = std::numbers::pi * std::numbers::pi;

double bessel_transform(double t, double u) {
  const double gap = u * u - t * t;
  if (std::fabs(gap) < 1e-12) throw BoundaryError("bessel_transform: u^2 = t^2 is the singular cone");
  if (gap < 0.0) return 0.0;
  return kBesselTransformFactor * bessel_j0(std::sqrt(gap));
}

std::complex<double> bessel_transform_numeric(double t, double u, IntegrationOrder order,
                                              const BesselTransformOptions& o) {
  if (!(o.window > 0.0) || !(o.truncation > 0.0) || !(o.exclusion > 0.0) || !(o.max_panel > 0.0)) {
    throw ConfigurationError("bessel_transform_numeric: options must be positive");
  }
  const double reach = o.truncation * o.window;
  const double inv2w2 = 1.0 / (2.0 * o.window * o.window);
  auto integrand = [&](double y, double z) {
    const double damp = std::exp(-(y * y + z * z) * inv2w2);
    return std::polar(damp, t * y + u * z) / (1.0 + y * y - z * z);
  };

  if (order == IntegrationOrder::ZInner) {
    const double edge = std::sqrt(1.0 + reach * reach) + 1.0;
    auto inner = [&](double y) -> cplx {
      const double b = std::sqrt(1.0 + y * y);
      const std::array<double, 2> poles{-b, b};
      quad::PvOptions pv;
      pv.max_panel = o.max_panel;
      return quad::pv_integral_richardson([&](double z) { return integrand(y, z); }, -edge, edge, poles,
                                         o.exclusion, pv);
    };
    const std::vector<double> breaks = quad::uniform_breaks(-reach, reach, o.max_panel);
    return quad::integrate_nodes(inner, quad::panel_nodes(breaks), o.exec);
  }

  const double edge = reach + 1.0;
  auto inner = [&](double z) -> cplx {
    const double gap = z * z - 1.0;
    quad::PvOptions pv;
    pv.max_panel = o.max_panel;
    auto f = [&](double y) { return integrand(y, z); };
    if (gap <= 0.0) {
      // Lorentzian peak of width sqrt(1 - z^2) at y = 0.
      const std::array<quad::Feature, 1> peak{quad::Feature{0.0, std::max(std::sqrt(-gap), 1e-300)}};
      const std::vector<double> breaks = quad::graded_breaks(-edge, edge, peak, o.max_panel);
      return quad::integrate_panels(f, breaks);
    }
    const double c = std::sqrt(gap);
    const std::array<double, 2> poles{-c, c};
    return quad::pv_integral_richardson(f, -edge, edge, poles, std::min(o.exclusion, c / 8.0), pv);
  };
  // The outer integrand has square-root behavior at |z| = 1.
  auto panels = [&](double len) { return std::max(8, static_cast<int>(std::ceil(2.0 * len / o.max_panel))); };
  struct Piece {
    double lo, hi;
    bool at_lo;
  };
  const std::array<Piece, 4> pieces{Piece{-reach, -1.0, false}, Piece{-1.0, 0.0, true}, Piece{0.0, 1.0, false},
                                    Piece{1.0, reach, true}};
  cplx total{};
  for (const Piece& p : pieces) {
    // Nodes of the mapped rule, evaluated through integrate_nodes.
    const double len = p.hi - p.lo;
    const std::vector<double> sbreaks = quad::uniform_breaks(0.0, 1.0, 1.0 / panels(len));
    std::vector<quad::Node> nodes = quad::panel_nodes(sbreaks);
    for (auto& n : nodes) {
      const double s = n.x;
      n.x = p.at_lo ? p.lo + len * s * s : p.hi - len * s * s;
      n.w *= 2.0 * len * s;
    }
    total += quad::integrate_nodes(inner, nodes, o.exec);
  }
  return total;
}

NormalizationFit bessel_transform_fit(const std::vector<double>& u_values, const std::vector<double>& numeric,
                                      const std::vector<double>& candidates) {
  if (u_values.size() != numeric.size() || u_values.empty() || candidates.empty()) {
    throw DomainError("bessel_transform_fit: mismatched inputs");
  }
  NormalizationFit fit;
  fit.candidates = candidates;
  double best = INFINITY;
  for (double c : candidates) {
    double worst = 0.0;
    for (std::size_t k = 0; k < u_values.size(); ++k) {
      const double model = c * bessel_j0(u_values[k]);
      worst = std::max(worst, std::fabs(numeric[k] - model) / std::fabs(model));
    }
    fit.max_relative_error.push_back(worst);
    if (worst < best) {
      best = worst;
      fit.winner = c;
    }
  }
  return fit;
}

}  // namespace cbm
