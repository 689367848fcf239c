#ifndef HARDY_EXPONENT_HPP
#define HARDY_EXPONENT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardy/curve.hpp"
#include "hardy/error.hpp"

namespace hardy {

inline constexpr double infinite_exponent = std::numeric_limits<double>::infinity();

/// Variable exponent p : Gamma -> [1, inf], one value per curve node.
/// Infinity is stored as IEEE +inf, so the infinity set is exact.
class ExponentFunction {
 public:
  ExponentFunction() = default;

  explicit ExponentFunction(std::vector<double> values, std::string tag = {})
      : values_(std::move(values)), tag_(std::move(tag)) {
    for (std::size_t j = 0; j < values_.size(); ++j) {
      detail::require(!std::isnan(values_[j]) && values_[j] >= 1.0,
                      "ExponentFunction: value below 1 at node " + std::to_string(j));
    }
  }

  static ExponentFunction constant(std::size_t n, double value) {
    return ExponentFunction(std::vector<double>(n, value), "const:" + std::to_string(value));
  }

  /// Samples p(tau_j, polar angle of tau_j).
  static ExponentFunction sample(const JordanCurve& curve, const std::function<double(cplx, double)>& p,
                                 std::string tag = {}) {
    std::vector<double> values(curve.size());
    for (std::size_t j = 0; j < curve.size(); ++j) values[j] = p(curve.node(j), std::arg(curve.node(j)));
    return ExponentFunction(std::move(values), std::move(tag));
  }

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t j) const { return values_[j]; }
  const std::vector<double>& values() const { return values_; }
  const std::string& tag() const { return tag_; }

  bool is_infinite(std::size_t j) const { return std::isinf(values_[j]); }

  /// Node indices of the infinity set {p = inf}.
  std::vector<std::size_t> infinity_set() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < values_.size(); ++j)
      if (is_infinite(j)) out.push_back(j);
    return out;
  }

  bool is_constant() const {
    return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) == values_.end();
  }

 private:
  std::vector<double> values_;
  std::string tag_;
};

/// 1/p with 1/inf = 0.
inline double reciprocal(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

struct EssentialBounds {
  double p_minus = 0.0;
  double p_plus = 0.0;
};

/// Discrete stand-in for (ess inf, ess sup): min and max over nodes.
inline EssentialBounds essential_bounds(const ExponentFunction& p) {
  detail::require(p.size() > 0, "essential_bounds: empty exponent");
  const auto [lo, hi] = std::minmax_element(p.values().begin(), p.values().end());
  return {*lo, *hi};
}

struct DominanceReport {
  bool holds = true;
  std::vector<std::size_t> violations;  ///< nodes with q > p
};

/// q <= p at every node (the embedding L^p -> L^q on a finite-measure curve).
inline DominanceReport dominance_check(const ExponentFunction& p, const ExponentFunction& q) {
  detail::require(p.size() == q.size(), "dominance_check: exponent sizes differ");
  DominanceReport report;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (q[j] > p[j]) report.violations.push_back(j);
  report.holds = report.violations.empty();
  return report;
}

/// r with 1/q = 1/p + 1/r nodewise: r = inf where p = q, r = q where p = inf.
inline ExponentFunction conjugate_exponent_r(const ExponentFunction& p, const ExponentFunction& q) {
  const auto dominance = dominance_check(p, q);
  if (!dominance.holds) {
    std::string nodes;
    for (std::size_t k = 0; k < std::min<std::size_t>(dominance.violations.size(), 8); ++k)
      nodes += (k ? "," : "") + std::to_string(dominance.violations[k]);
    if (dominance.violations.size() > 8) nodes += ",...";
    throw ValidationError("conjugate_exponent_r: q > p at " + std::to_string(dominance.violations.size()) +
                          " nodes [" + nodes + "]");
  }
  std::vector<double> r(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] == q[j]) {
      r[j] = infinite_exponent;
    } else if (std::isinf(p[j])) {
      r[j] = q[j];
    } else {
      // p q / (p - q) avoids cancellation in 1/q - 1/p.
      r[j] = p[j] * q[j] / (p[j] - q[j]);
    }
  }
  return ExponentFunction(std::move(r), "conjugate(" + p.tag() + "," + q.tag() + ")");
}

/// |1/q - (1/p + 1/r)| at node j.
inline double holder_relation_defect(double p, double q, double r) {
  return std::abs(reciprocal(q) - reciprocal(p) - reciprocal(r));
}

struct LogHolderReport {
  bool holds = false;
  double constant_estimate = 0.0;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
  EssentialBounds bounds;
  double refinement_growth = 0.0;  ///< fine minus coarse estimate, when a refinement was compared
};

/// sup |p(t) - p(tau)| * (-log |t - tau|) over node pairs with 0 < |t - tau| < 1/2.
inline LogHolderReport log_holder_constant(const ExponentFunction& p, const JordanCurve& curve) {
  detail::require(p.size() == curve.size(), "log_holder_constant: exponent does not match curve");
  LogHolderReport report;
  report.bounds = essential_bounds(p);
  const auto n = curve.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::abs(curve.node(i) - curve.node(j));
      if (d <= 0.0 || d >= 0.5) continue;
      const double jump = std::abs(p[i] - p[j]);
      if (jump == 0.0) continue;
      const double value = std::isinf(jump) ? infinite_exponent : jump * (-std::log(d));
      if (value > report.constant_estimate) {
        report.constant_estimate = value;
        report.worst_pair = {i, j};
      }
    }
  }
  report.holds = std::isfinite(report.constant_estimate) && report.bounds.p_minus > 1.0 &&
                 std::isfinite(report.bounds.p_plus);
  return report;
}

/// A single grid always gives a finite estimate. Comparing with a refined
/// sampling of the same exponent separates the cases: a jump J adds about
/// J log 2 per halving of the node spacing, while a log-Hoelder exponent
/// adds an amount that tends to zero. Growth above a quarter of
/// (p_+ - p_-) log 2 marks the estimate as unbounded.
inline LogHolderReport log_holder_under_refinement(const ExponentFunction& coarse_p, const JordanCurve& coarse,
                                                   const ExponentFunction& fine_p, const JordanCurve& fine) {
  detail::require(fine.size() > coarse.size(), "log_holder_under_refinement: fine curve must have more nodes");
  const LogHolderReport a = log_holder_constant(coarse_p, coarse);
  LogHolderReport b = log_holder_constant(fine_p, fine);
  b.refinement_growth = b.constant_estimate - a.constant_estimate;
  const double doublings = std::log2(static_cast<double>(fine.size()) / static_cast<double>(coarse.size()));
  const double range = b.bounds.p_plus - b.bounds.p_minus;
  if (std::isfinite(range) && range > 0.0 && b.refinement_growth > 0.25 * range * std::log(2.0) * doublings)
    b.holds = false;
  return b;
}

struct InfinityPartition {
  std::vector<std::size_t> gamma1;  ///< p = inf (there q = r)
  std::vector<std::size_t> gamma2;  ///< r = inf, p finite (there p = q)
  std::vector<std::size_t> gamma3;  ///< all exponents finite
};

/// Splits the nodes by infinity sets of a triple satisfying 1/q = 1/p + 1/r.
inline InfinityPartition partition_infinity_sets(const ExponentFunction& p, const ExponentFunction& q,
                                                 const ExponentFunction& r) {
  detail::require(p.size() == q.size() && q.size() == r.size(), "partition_infinity_sets: sizes differ");
  InfinityPartition out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (holder_relation_defect(p[j], q[j], r[j]) > 1e-12)
      throw ValidationError("partition_infinity_sets: 1/q != 1/p + 1/r at node " + std::to_string(j));
    if (p.is_infinite(j)) {
      out.gamma1.push_back(j);
    } else if (q.is_infinite(j) || r.is_infinite(j)) {
      out.gamma2.push_back(j);
    } else {
      out.gamma3.push_back(j);
    }
  }
  return out;
}

}  // namespace hardy

#endif  // HARDY_EXPONENT_HPP
