#include "cbm/numerics/quadrature.hpp"

#include <algorithm>
#include <numbers>

#include "cbm/errors.hpp"

namespace cbm::quad {

GaussRule gauss_legendre(int order) {
  if (order < 1) throw ConfigurationError("gauss_legendre: order must be positive");
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n starting from the Chebyshev-like guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

const GaussRule& gauss16() {
  static const GaussRule rule = gauss_legendre(16);
  return rule;
}

std::vector<double> uniform_breaks(double a, double b, double max_panel) {
  std::size_t panels = 1;
  if (std::isfinite(max_panel) && max_panel > 0.0) {
    panels = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((b - a) / max_panel)));
  }
  std::vector<double> breaks(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) {
    breaks[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(panels);
  }
  breaks.back() = b;
  return breaks;
}

std::vector<double> graded_breaks(double a, double b, std::span<const Feature> features,
                                  double max_panel) {
  std::vector<double> points{a, b};
  for (const Feature& f : features) {
    if (f.center > a && f.center < b) points.push_back(f.center);
    if (!(f.scale > 0.0)) continue;
    for (double s = f.scale;; s *= 2.0) {
      const double left = f.center - s;
      const double right = f.center + s;
      if (left > a && left < b) points.push_back(left);
      if (right > a && right < b) points.push_back(right);
      if (left <= a && right >= b) break;
    }
  }
  std::sort(points.begin(), points.end());
  std::vector<double> merged;
  merged.reserve(points.size());
  for (double p : points) {
    if (!merged.empty()) {
      const double tiny = 8.0 * std::numeric_limits<double>::epsilon() *
                          std::max({std::fabs(p), std::fabs(merged.back()), 1e-300});
      if (p - merged.back() <= tiny) continue;
    }
    merged.push_back(p);
  }
  merged.front() = a;
  merged.back() = b;

  if (!std::isfinite(max_panel)) return merged;
  std::vector<double> out;
  out.reserve(merged.size());
  out.push_back(merged.front());
  for (std::size_t i = 1; i < merged.size(); ++i) {
    const double lo = merged[i - 1];
    const double hi = merged[i];
    const auto pieces =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / max_panel)));
    for (std::size_t k = 1; k < pieces; ++k) {
      out.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(pieces));
    }
    out.push_back(hi);
  }
  return out;
}

std::vector<Node> panel_nodes(std::span<const double> breaks, std::span<const Window> skip) {
  const GaussRule& rule = gauss16();
  std::vector<Node> out;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double lo = breaks[p];
    const double hi = breaks[p + 1];
    const double mid = 0.5 * (lo + hi);
    bool skipped = false;
    for (const Window& w : skip) {
      if (mid > w.lo && mid < w.hi) skipped = true;
    }
    if (skipped) continue;
    const double half = 0.5 * (hi - lo);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      out.push_back({mid + half * rule.nodes[k], half * rule.weights[k]});
    }
  }
  return out;
}

void validate_pv(double a, double b, std::span<const double> poles, double exclusion) {
  if (!(b > a)) throw ConfigurationError("pv_integral_1d: empty interval");
  if (!(exclusion > 0.0)) throw ConfigurationError("pv_integral_1d: exclusion must be positive");
  std::vector<double> sorted(poles.begin(), poles.end());
  std::sort(sorted.begin(), sorted.end());
  for (double p : sorted) {
    if (!std::isfinite(p) || p <= a || p >= b) {
      throw DomainError("pv_integral_1d: pole not strictly inside the interval");
    }
    if (p - exclusion <= a || p + exclusion >= b) {
      throw ConfigurationError("pv_integral_1d: exclusion window leaves the interval");
    }
  }
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!(2.0 * exclusion < sorted[i] - sorted[i - 1])) {
      throw ConfigurationError("pv_integral_1d: exclusion windows overlap");
    }
  }
}

}  // namespace cbm::quad
