#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

#include "cbm/numerics/execution.hpp"

namespace cbm::quad {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int order);
const GaussRule& gauss16();

// A point near which the integrand varies on length `scale`: a pole, an
// exclusion window edge or a narrow peak.
struct Feature {
  double center;
  double scale;
};

struct Window {
  double lo;
  double hi;
};

// Panel breakpoints for [a, b]: geometric sequences center +- scale * 2^k
// around every feature, merged, then uniform subdivision of any panel longer
// than max_panel. Every panel is then no wider than its distance to the
// nearest feature (up to a factor 2), which keeps 16-point Gauss accurate
// for integrands like 1/(t - p) outside the exclusion windows.
std::vector<double> graded_breaks(double a, double b, std::span<const Feature> features,
                                  double max_panel = std::numeric_limits<double>::infinity());

// Uniform breakpoints for [a, b] with panels no wider than max_panel.
std::vector<double> uniform_breaks(double a, double b, double max_panel);

template <class F>
using value_of = std::invoke_result_t<F&, double>;

// Composite 16-point Gauss over consecutive breakpoints, skipping every panel
// whose midpoint lies inside one of `skip`.
template <class F>
value_of<F> integrate_panels(F&& f, std::span<const double> breaks,
                             std::span<const Window> skip = {}) {
  using T = value_of<F>;
  const GaussRule& rule = gauss16();
  T total{};
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double lo = breaks[p];
    const double hi = breaks[p + 1];
    const double mid = 0.5 * (lo + hi);
    bool skipped = false;
    for (const Window& w : skip) {
      if (mid > w.lo && mid < w.hi) {
        skipped = true;
        break;
      }
    }
    if (skipped) continue;
    const double half = 0.5 * (hi - lo);
    T panel{};
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      panel += rule.weights[k] * f(mid + half * rule.nodes[k]);
    }
    total += half * panel;
  }
  return total;
}

struct Node {
  double x;
  double w;
};

// The Gauss nodes and weights integrate_panels would use, for callers that
// evaluate the integrand themselves (in parallel, say) and sum in order.
std::vector<Node> panel_nodes(std::span<const double> breaks, std::span<const Window> skip = {});

// sum_k w_k f(x_k). The parallel path evaluates f concurrently into a
// buffer and reduces it in node order, so both paths agree bit for bit.
template <class F>
value_of<F> integrate_nodes(F&& f, const std::vector<Node>& nodes, Execution exec) {
  using T = value_of<F>;
  std::vector<T> values(nodes.size());
  const long count = static_cast<long>(nodes.size());
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) values[i] = f(nodes[i].x);
  } else {
    for (long i = 0; i < count; ++i) values[i] = f(nodes[i].x);
  }
  T total{};
  for (long i = 0; i < count; ++i) total += nodes[i].w * values[i];
  return total;
}

template <class F>
value_of<F> integrate(F&& f, double a, double b, double max_panel) {
  const std::vector<double> breaks = uniform_breaks(a, b, max_panel);
  return integrate_panels(f, breaks);
}

// Integral over [a, b] of an integrand that behaves like a smooth function of
// sqrt(|t - e|) at the endpoint e (e = a when singular_at_a, else e = b),
// including (t - e)^(-1/2) singularities. Uses t = e +- (b - a) s^2.
template <class F>
value_of<F> integrate_sqrt_endpoint(F&& f, double a, double b, bool singular_at_a, int panels) {
  using T = value_of<F>;
  const double len = b - a;
  auto mapped = [&](double s) -> T {
    const double t = singular_at_a ? a + len * s * s : b - len * s * s;
    return (2.0 * len * s) * f(t);
  };
  return integrate(mapped, 0.0, 1.0, 1.0 / panels);
}

struct PvOptions {
  double max_panel = std::numeric_limits<double>::infinity();
  // Additional features (narrow peaks, nearby singularities outside the
  // interval) that should grade the panels.
  std::vector<Feature> extra_features;
};

// Checks the symmetric-exclusion preconditions. Throws DomainError when a pole
// is not strictly inside (a, b) and ConfigurationError when the exclusion is
// non-positive, when windows overlap, or when a window leaves (a, b).
void validate_pv(double a, double b, std::span<const double> poles, double exclusion);

// Integral of f over (a, b) minus the symmetric windows (p - h, p + h) around
// each pole p, h = exclusion.
template <class F>
value_of<F> pv_integral_1d(F&& f, double a, double b, std::span<const double> poles,
                           double exclusion, const PvOptions& options = {}) {
  validate_pv(a, b, poles, exclusion);
  std::vector<Feature> features = options.extra_features;
  std::vector<Window> windows;
  for (double p : poles) {
    features.push_back({p, exclusion});
    windows.push_back({p - exclusion, p + exclusion});
  }
  const std::vector<double> breaks = graded_breaks(a, b, features, options.max_panel);
  return integrate_panels(f, breaks, windows);
}

// Richardson weights for the exclusion ladder {h, h/2, h/4}. For an integrand
// g(t)/(t - p) with smooth g the truncation error of a symmetric window is an
// odd series c1 h + c3 h^3 + ..., so these weights cancel the h and h^3 terms.
inline constexpr std::array<double, 3> kRichardsonWeights{1.0 / 7.0, -10.0 / 7.0, 16.0 / 7.0};

template <class T>
T richardson(const std::array<T, 3>& ladder) {
  return kRichardsonWeights[0] * ladder[0] + kRichardsonWeights[1] * ladder[1] +
         kRichardsonWeights[2] * ladder[2];
}

template <class F>
value_of<F> pv_integral_richardson(F&& f, double a, double b, std::span<const double> poles,
                                   double exclusion, const PvOptions& options = {}) {
  std::array<value_of<F>, 3> ladder{};
  double h = exclusion;
  for (auto& value : ladder) {
    value = pv_integral_1d(f, a, b, poles, h, options);
    h *= 0.5;
  }
  return richardson(ladder);
}

// Same extrapolated value as pv_integral_richardson, computed with one far
// field: outside (p - 2h, p + 2h) every ladder member integrates the same
// function and the weights sum to 1, so only the shells
// h / 2^k <= |t - p| <= 2h are integrated per member.
template <class F>
value_of<F> pv_integral_richardson_shared(F&& f, double a, double b, std::span<const double> poles,
                                          double exclusion, const PvOptions& options = {}) {
  using T = value_of<F>;
  const double outer = 2.0 * exclusion;
  validate_pv(a, b, poles, outer);
  std::vector<Feature> features = options.extra_features;
  std::vector<Window> windows;
  for (double p : poles) {
    features.push_back({p, outer});
    windows.push_back({p - outer, p + outer});
  }
  T total = integrate_panels(f, graded_breaks(a, b, features, options.max_panel), windows);
  double h = exclusion;
  for (double weight : kRichardsonWeights) {
    for (double p : poles) {
      const std::array<Feature, 1> pole{Feature{p, h}};
      const std::array<Window, 1> window{Window{p - h, p + h}};
      total += weight * integrate_panels(f, graded_breaks(p - outer, p + outer, pole, options.max_panel), window);
    }
    h *= 0.5;
  }
  return total;
}

}  // namespace cbm::quad
