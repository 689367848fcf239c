#ifndef HARDY_CURVE_HPP
#define HARDY_CURVE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hardy/error.hpp"
#include "hardy/fourier.hpp"

namespace hardy {

enum class CurveKind {
  unit_circle,  ///< equispaced unit circle; enables the exact Fourier backend
  parametric,
};

/// Discretized rectifiable Jordan curve, positively (counter-clockwise)
/// oriented, so that the bounded component D+ lies on the left.
///
/// Nodes are images of the equispaced parameters s_j = j/n. Each node carries
/// the trapezoid weight w_j ~ |dtau| and the complex line element
/// dtau_j = e^{i theta_j} w_j used by every quadrature in the library.
class JordanCurve {
 public:
  JordanCurve(std::string name, CurveKind kind, Eigen::VectorXcd nodes, Eigen::VectorXd arc_weights,
              Eigen::VectorXd tangent_angles)
      : name_(std::move(name)),
        kind_(kind),
        nodes_(std::move(nodes)),
        weights_(std::move(arc_weights)),
        angles_(std::move(tangent_angles)) {
    const auto n = nodes_.size();
    detail::require(n >= 3, "JordanCurve: need at least three nodes");
    detail::require(weights_.size() == n && angles_.size() == n, "JordanCurve: field sizes differ");
    for (Eigen::Index j = 0; j < n; ++j) {
      detail::require(std::isfinite(weights_[j]) && weights_[j] > 0.0,
                      "JordanCurve: arc weights must be positive");
      detail::require(std::isfinite(angles_[j]), "JordanCurve: tangent angle is not finite");
    }
    total_length_ = weights_.sum();
    dtau_.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) dtau_[j] = std::polar(weights_[j], angles_[j]);
    spacing_ = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) spacing_ = std::max(spacing_, std::abs(nodes_[(j + 1) % n] - nodes_[j]));
  }

  const std::string& name() const { return name_; }
  CurveKind kind() const { return kind_; }
  std::size_t size() const { return static_cast<std::size_t>(nodes_.size()); }
  bool closed() const { return true; }

  const Eigen::VectorXcd& nodes() const { return nodes_; }
  const Eigen::VectorXd& arc_weights() const { return weights_; }
  const Eigen::VectorXd& tangent_angles() const { return angles_; }
  const Eigen::VectorXcd& dtau() const { return dtau_; }

  cplx node(std::size_t j) const { return nodes_[static_cast<Eigen::Index>(j)]; }
  double total_length() const { return total_length_; }

  /// Largest chord between consecutive nodes.
  double node_spacing() const { return spacing_; }

  cplx unit_tangent(std::size_t j) const { return std::polar(1.0, angles_[static_cast<Eigen::Index>(j)]); }

  /// Unit normal pointing into D+.
  cplx inward_normal(std::size_t j) const { return cplx(0.0, 1.0) * unit_tangent(j); }

  /// Parameter angle 2 pi j / n of node j.
  double parameter_angle(std::size_t j) const {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(size());
  }

  /// Point-in-polygon test for the bounded component D+.
  bool contains(cplx z) const {
    bool inside = false;
    const auto n = nodes_.size();
    for (Eigen::Index j = 0, k = n - 1; j < n; k = j++) {
      const cplx a = nodes_[j], b = nodes_[k];
      if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
        double x = (b.real() - a.real()) * (z.imag() - a.imag()) / (b.imag() - a.imag()) + a.real();
        if (z.real() < x) inside = !inside;
      }
    }
    return inside;
  }

  /// Distance from z to the polyline through the nodes.
  double distance_to(cplx z) const {
    double best = std::numeric_limits<double>::infinity();
    const auto n = nodes_.size();
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx a = nodes_[j], b = nodes_[(j + 1) % n];
      const cplx ab = b - a;
      double s = std::clamp(((z - a) * std::conj(ab)).real() / std::norm(ab), 0.0, 1.0);
      best = std::min(best, std::abs(z - (a + s * ab)));
    }
    return best;
  }

  double diameter() const {
    double d = 0.0;
    for (Eigen::Index j = 0; j < nodes_.size(); ++j)
      for (Eigen::Index k = j + 1; k < nodes_.size(); ++k) d = std::max(d, std::abs(nodes_[j] - nodes_[k]));
    return d;
  }

 private:
  std::string name_;
  CurveKind kind_;
  Eigen::VectorXcd nodes_;
  Eigen::VectorXd weights_;
  Eigen::VectorXd angles_;
  Eigen::VectorXcd dtau_;
  double total_length_ = 0.0;
  double spacing_ = 0.0;
};

namespace detail {

inline double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

inline bool segments_intersect(cplx p1, cplx p2, cplx q1, cplx q2) {
  const double d1 = cross(q2 - q1, p1 - q1), d2 = cross(q2 - q1, p2 - q1);
  const double d3 = cross(p2 - p1, q1 - p1), d4 = cross(p2 - p1, q2 - p1);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

inline double signed_area(const Eigen::VectorXcd& nodes) {
  double area = 0.0;
  for (Eigen::Index j = 0; j < nodes.size(); ++j) area += cross(nodes[j], nodes[(j + 1) % nodes.size()]);
  return 0.5 * area;
}

}  // namespace detail

/// True when the closed polyline has no proper crossings between
/// non-adjacent edges. Sweep-and-prune over the x-extent of edges.
inline bool is_simple_polyline(const Eigen::VectorXcd& nodes) {
  const auto n = static_cast<std::size_t>(nodes.size());
  struct Edge {
    double lo, hi;
    std::size_t index;
  };
  std::vector<Edge> edges(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x0 = nodes[j].real(), x1 = nodes[(j + 1) % n].real();
    edges[j] = {std::min(x0, x1), std::max(x0, x1), j};
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.lo < b.lo; });
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n && edges[b].lo <= edges[a].hi; ++b) {
      const std::size_t i = edges[a].index, k = edges[b].index;
      const std::size_t gap = i > k ? i - k : k - i;
      if (gap <= 1 || gap == n - 1) continue;
      if (detail::segments_intersect(nodes[i], nodes[(i + 1) % n], nodes[k], nodes[(k + 1) % n])) return false;
    }
  }
  return true;
}

/// Equispaced unit circle e^{2 pi i j / n}.
inline JordanCurve make_unit_circle(std::size_t n_nodes) {
  detail::require(n_nodes >= 8, "make_unit_circle: need at least 8 nodes");
  const auto n = static_cast<Eigen::Index>(n_nodes);
  Eigen::VectorXcd nodes(n);
  Eigen::VectorXd weights = Eigen::VectorXd::Constant(n, 2.0 * std::numbers::pi / static_cast<double>(n));
  Eigen::VectorXd angles(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    nodes[j] = std::polar(1.0, phi);
    angles[j] = std::remainder(phi + std::numbers::pi / 2.0, 2.0 * std::numbers::pi);
  }
  return {"circle", CurveKind::unit_circle, std::move(nodes), std::move(weights), std::move(angles)};
}

using CurvePath = std::function<cplx(double)>;

struct ParametricOptions {
  bool check_simple = true;
};

/// Curve from a closed parametrization s in [0,1) -> tau(s) with derivative
/// d tau / ds. At corners the derivative callback must return the left limit.
inline JordanCurve make_parametric_curve(std::string name, const CurvePath& position, const CurvePath& derivative,
                                         std::size_t n_nodes, ParametricOptions options = {}) {
  detail::require(n_nodes >= 8, "make_parametric_curve: need at least 8 nodes");
  const cplx start = position(0.0), end = position(1.0);
  detail::require(std::abs(end - start) <= 1e-9 * (1.0 + std::abs(start)),
                  "make_parametric_curve: path is not closed");
  const auto n = static_cast<Eigen::Index>(n_nodes);
  Eigen::VectorXcd nodes(n);
  Eigen::VectorXd weights(n), angles(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double s = static_cast<double>(j) / static_cast<double>(n);
    nodes[j] = position(s);
    const cplx d = derivative(s);
    detail::require(std::isfinite(d.real()) && std::isfinite(d.imag()) && std::abs(d) > 1e-14,
                    "make_parametric_curve: derivative vanishes at node " + std::to_string(j));
    weights[j] = std::abs(d) / static_cast<double>(n);
    angles[j] = std::arg(d);
  }
  detail::require(detail::signed_area(nodes) > 0.0, "make_parametric_curve: curve must be counter-clockwise");
  if (options.check_simple)
    detail::require(is_simple_polyline(nodes), "make_parametric_curve: polyline self-intersects");
  return {std::move(name), CurveKind::parametric, std::move(nodes), std::move(weights), std::move(angles)};
}

inline JordanCurve make_ellipse(double a, double b, std::size_t n_nodes) {
  detail::require(a > 0.0 && b > 0.0, "ellipse: semi-axes must be positive");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return make_parametric_curve(
      "ellipse:" + std::to_string(a) + "," + std::to_string(b),
      [=](double s) { return cplx(a * std::cos(two_pi * s), b * std::sin(two_pi * s)); },
      [=](double s) { return cplx(-a * two_pi * std::sin(two_pi * s), b * two_pi * std::cos(two_pi * s)); },
      n_nodes);
}

/// r(s) = 1 + amp cos(2 pi freq s).
inline JordanCurve make_perturbed_circle(double amp, int freq, std::size_t n_nodes) {
  detail::require(std::abs(amp) < 1.0, "perturbed-circle: |amp| must be below 1");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto radius = [=](double s) { return 1.0 + amp * std::cos(two_pi * freq * s); };
  auto dradius = [=](double s) { return -amp * two_pi * freq * std::sin(two_pi * freq * s); };
  return make_parametric_curve(
      "perturbed-circle:" + std::to_string(amp) + "," + std::to_string(freq),
      [=](double s) { return std::polar(radius(s), two_pi * s); },
      [=](double s) {
        const cplx e = std::polar(1.0, two_pi * s);
        return dradius(s) * e + radius(s) * cplx(0.0, two_pi) * e;
      },
      n_nodes);
}

/// Axis-aligned square of side 1 centred at the origin, corners at s = k/4.
inline JordanCurve make_square(std::size_t n_nodes) {
  const std::array<cplx, 4> corners{cplx(0.5, -0.5), cplx(0.5, 0.5), cplx(-0.5, 0.5), cplx(-0.5, -0.5)};
  auto position = [corners](double s) {
    s -= std::floor(s);
    const double u = 4.0 * s;
    const auto side = std::min<std::size_t>(static_cast<std::size_t>(u), 3);
    const double frac = u - static_cast<double>(side);
    return corners[side] + frac * (corners[(side + 1) % 4] - corners[side]);
  };
  auto derivative = [corners](double s) {
    s -= std::floor(s);
    const double u = 4.0 * s;
    auto side = static_cast<long>(std::ceil(u)) - 1;  // left limit at corners
    if (side < 0) side = 3;
    const auto k = static_cast<std::size_t>(side);
    return 4.0 * (corners[(k + 1) % 4] - corners[k]);
  };
  return make_parametric_curve("square", position, derivative, n_nodes);
}

/// Max over nodes of |e^{i theta_j} - normalized central chord|.
inline double tangent_residual(const JordanCurve& curve) {
  const auto n = curve.size();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx chord = curve.node((j + 1) % n) - curve.node((j + n - 1) % n);
    worst = std::max(worst, std::abs(curve.unit_tangent(j) - chord / std::abs(chord)));
  }
  return worst;
}

struct PortionLength {
  double length = 0.0;
  bool under_resolved = false;  ///< epsilon below the local node spacing
};

/// Arc length of Gamma(t, eps) = {tau : |tau - t| < eps}, t a node index.
inline PortionLength portion_length(const JordanCurve& curve, std::size_t t, double epsilon) {
  detail::require(epsilon > 0.0, "portion_length: epsilon must be positive");
  detail::require(t < curve.size(), "portion_length: node index out of range");
  const cplx center = curve.node(t);
  PortionLength out;
  for (std::size_t j = 0; j < curve.size(); ++j)
    if (std::abs(curve.node(j) - center) < epsilon) out.length += curve.arc_weights()[static_cast<Eigen::Index>(j)];
  const auto n = curve.size();
  const double local = std::max(std::abs(curve.node((t + 1) % n) - center), std::abs(curve.node((t + n - 1) % n) - center));
  out.under_resolved = epsilon <= local;
  return out;
}

struct CarlesonReport {
  double constant_estimate = 0.0;
  std::size_t argmax_node = 0;
  cplx argmax_point{};
  double argmax_radius = 0.0;
  std::size_t epsilon_count = 0;
  double epsilon_min = 0.0;
  double epsilon_max = 0.0;
  std::size_t t_stride = 1;
  std::size_t t_count = 0;
};

/// count log-spaced radii on [2 * spacing, diameter]. Doubling via
/// 2 * count - 1 yields a superset of the coarser grid.
inline std::vector<double> log_epsilon_grid(const JordanCurve& curve, std::size_t count, double diameter = -1.0) {
  detail::require(count >= 2, "log_epsilon_grid: need at least two radii");
  const double lo = 2.0 * curve.node_spacing();
  const double hi = diameter > 0.0 ? diameter : curve.diameter();
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i)
    grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(count - 1));
  grid.back() = hi;
  return grid;
}

/// Sup of |Gamma(t, eps)| / eps over the sampled (t, eps) grid. A finite-grid
/// estimate of the Carleson constant, never the exact supremum.
inline CarlesonReport carleson_constant(const JordanCurve& curve, const std::vector<double>& epsilon_grid,
                                        std::size_t t_stride = 1) {
  detail::require(!epsilon_grid.empty(), "carleson_constant: empty epsilon grid");
  detail::require(t_stride >= 1, "carleson_constant: stride must be positive");
  for (double e : epsilon_grid) detail::require(e > 0.0, "carleson_constant: radii must be positive");

  const auto n = curve.size();
  CarlesonReport report;
  report.epsilon_count = epsilon_grid.size();
  report.epsilon_min = *std::min_element(epsilon_grid.begin(), epsilon_grid.end());
  report.epsilon_max = *std::max_element(epsilon_grid.begin(), epsilon_grid.end());
  report.t_stride = t_stride;

  std::vector<std::pair<double, double>> by_distance(n);
  std::vector<double> distances(n), prefix(n + 1);
  for (std::size_t t = 0; t < n; t += t_stride) {
    ++report.t_count;
    const cplx center = curve.node(t);
    for (std::size_t j = 0; j < n; ++j)
      by_distance[j] = {std::abs(curve.node(j) - center), curve.arc_weights()[static_cast<Eigen::Index>(j)]};
    std::sort(by_distance.begin(), by_distance.end());
    prefix[0] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      distances[j] = by_distance[j].first;
      prefix[j + 1] = prefix[j] + by_distance[j].second;
    }
    for (double eps : epsilon_grid) {
      const auto inside = static_cast<std::size_t>(std::lower_bound(distances.begin(), distances.end(), eps) - distances.begin());
      const double ratio = prefix[inside] / eps;
      if (ratio > report.constant_estimate) {
        report.constant_estimate = ratio;
        report.argmax_node = t;
        report.argmax_point = center;
        report.argmax_radius = eps;
      }
    }
  }
  return report;
}

}  // namespace hardy

#endif  // HARDY_CURVE_HPP
