#ifndef HARDY_QUADRATURE_HPP
#define HARDY_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

namespace hardy::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton on P_n).
inline Rule gauss_legendre(std::size_t n) {
  Rule rule{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 - (static_cast<double>(k) - 1.0) * p0) /
                          static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

/// Nodes/weights on [lo, hi] for integrands with algebraic endpoint
/// singularities: Gauss-Legendre panels in x pushed through the sigmoidal map
///   theta = lo + (hi - lo) x^k / (x^k + (1 - x)^k),
/// whose derivative vanishes to order k - 1 at both ends.
inline Rule graded_interval(double lo, double hi, std::size_t panels, std::size_t order = 16, int grading = 6) {
  const Rule base = gauss_legendre(order);
  Rule out;
  out.nodes.reserve(panels * order);
  out.weights.reserve(panels * order);
  const double k = grading;
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = static_cast<double>(p) / static_cast<double>(panels);
    const double b = static_cast<double>(p + 1) / static_cast<double>(panels);
    for (std::size_t i = 0; i < order; ++i) {
      const double x = 0.5 * (a + b) + 0.5 * (b - a) * base.nodes[i];
      const double wx = 0.5 * (b - a) * base.weights[i];
      const double u = std::pow(x, k), v = std::pow(1.0 - x, k);
      const double g = u / (u + v);
      const double dg = k * std::pow(x, k - 1.0) * std::pow(1.0 - x, k - 1.0) / ((u + v) * (u + v));
      out.nodes.push_back(lo + (hi - lo) * g);
      out.weights.push_back((hi - lo) * dg * wx);
    }
  }
  return out;
}

}  // namespace hardy::quadrature

#endif  // HARDY_QUADRATURE_HPP
