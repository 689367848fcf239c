#ifndef HARDY_LEBESGUE_HPP
#define HARDY_LEBESGUE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hardy/curve.hpp"
#include "hardy/error.hpp"
#include "hardy/exponent.hpp"
#include "hardy/rng.hpp"

namespace hardy {

/// Subset gamma of the curve nodes, stored as a mask.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<bool> mask) : mask_(std::move(mask)) {}

  static NodeSet all(std::size_t n) { return NodeSet(std::vector<bool>(n, true)); }
  static NodeSet none(std::size_t n) { return NodeSet(std::vector<bool>(n, false)); }

  static NodeSet from_indices(std::size_t n, const std::vector<std::size_t>& indices) {
    std::vector<bool> mask(n, false);
    for (auto j : indices) {
      detail::require(j < n, "NodeSet: index out of range");
      mask[j] = true;
    }
    return NodeSet(std::move(mask));
  }

  std::size_t size() const { return mask_.size(); }
  bool contains(std::size_t j) const { return mask_[j]; }
  std::size_t count() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }
  bool empty() const { return count() == 0; }

  NodeSet intersect(const NodeSet& other) const {
    detail::require(size() == other.size(), "NodeSet: sizes differ");
    std::vector<bool> out(size());
    for (std::size_t j = 0; j < size(); ++j) out[j] = mask_[j] && other.mask_[j];
    return NodeSet(std::move(out));
  }

  NodeSet complement() const {
    std::vector<bool> out(size());
    for (std::size_t j = 0; j < size(); ++j) out[j] = !mask_[j];
    return NodeSet(std::move(out));
  }

  double measure(const JordanCurve& curve) const {
    double m = 0.0;
    for (std::size_t j = 0; j < size(); ++j)
      if (mask_[j]) m += curve.arc_weights()[static_cast<Eigen::Index>(j)];
    return m;
  }

 private:
  std::vector<bool> mask_;
};

/// Complex function sampled on the curve nodes; nodes outside the optional
/// support are treated as absent from every integral.
struct SampledFunction {
  Eigen::VectorXcd values;
  std::optional<NodeSet> support;

  SampledFunction() = default;
  SampledFunction(Eigen::VectorXcd v) : values(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  SampledFunction(Eigen::VectorXcd v, NodeSet s) : values(std::move(v)), support(std::move(s)) {}

  std::size_t size() const { return static_cast<std::size_t>(values.size()); }

  bool active(std::size_t j) const { return !support || support->contains(j); }

  static SampledFunction constant(std::size_t n, cplx value) {
    return SampledFunction(Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(n), value));
  }

  static SampledFunction indicator(const NodeSet& set) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(set.size()));
    for (std::size_t j = 0; j < set.size(); ++j) v[static_cast<Eigen::Index>(j)] = set.contains(j) ? 1.0 : 0.0;
    return SampledFunction(std::move(v));
  }
};

namespace detail {

inline NodeSet effective_domain(const JordanCurve& curve, const SampledFunction& f, const NodeSet& gamma) {
  require(f.size() == curve.size(), "function does not match curve node count");
  require(gamma.size() == curve.size(), "node set does not match curve node count");
  NodeSet domain = f.support ? gamma.intersect(*f.support) : gamma;
  return domain;
}

inline void require_positive_measure(const NodeSet& gamma) {
  require(!gamma.empty(), "node set gamma has zero measure");
}

/// rho(f / lambda) without materializing f / lambda.
inline double scaled_modular(const JordanCurve& curve, const Eigen::VectorXd& magnitude, const ExponentFunction& p,
                             const NodeSet& domain, double lambda) {
  double integral = 0.0, sup = 0.0;
  const auto& w = curve.arc_weights();
  for (std::size_t j = 0; j < domain.size(); ++j) {
    if (!domain.contains(j)) continue;
    const auto k = static_cast<Eigen::Index>(j);
    const double x = magnitude[k] / lambda;
    if (p.is_infinite(j)) {
      sup = std::max(sup, x);
    } else if (x != 0.0) {
      integral += std::pow(x, p[j]) * w[k];
    }
  }
  const double total = integral + sup;
  return std::isfinite(total) ? total : std::numeric_limits<double>::infinity();
}

}  // namespace detail

/// Variable-exponent modular: integral of |f|^p over gamma minus the
/// infinity set, plus the sup of |f| over the infinity set. May be +inf.
inline double modular(const JordanCurve& curve, const SampledFunction& f, const ExponentFunction& p,
                      const NodeSet& gamma) {
  detail::require(p.size() == curve.size(), "modular: exponent does not match curve");
  const NodeSet domain = detail::effective_domain(curve, f, gamma);
  detail::require_positive_measure(gamma);
  return detail::scaled_modular(curve, f.values.cwiseAbs(), p, domain, 1.0);
}

inline double modular(const JordanCurve& curve, const SampledFunction& f, const ExponentFunction& p) {
  return modular(curve, f, p, NodeSet::all(curve.size()));
}

struct NormOptions {
  double tolerance = 1e-10;  ///< |rho(f / norm) - 1|
  int max_iterations = 200;
};

struct NormResult {
  double value = 0.0;             ///< may be +inf
  double modular_at_value = 0.0;  ///< rho(f / value); 0 when value is 0
  int bisection_iterations = 0;
  std::pair<double, double> bracket{0.0, 0.0};
  bool closed_form = false;
  bool converged = true;
};

/// Luxemburg-Nakano norm inf{lambda > 0 : rho(f / lambda) <= 1}.
///
/// Constant exponents use the closed form. Otherwise lambda is bracketed by
/// doubling/halving from ||f||_1 / |gamma| and refined by geometric bisection
/// on the nonincreasing map lambda -> rho(f / lambda).
inline NormResult luxemburg_norm(const JordanCurve& curve, const SampledFunction& f, const ExponentFunction& p,
                                 const NodeSet& gamma, NormOptions options = {}) {
  detail::require(p.size() == curve.size(), "luxemburg_norm: exponent does not match curve");
  detail::require_positive_measure(gamma);
  const NodeSet domain = detail::effective_domain(curve, f, gamma);
  const Eigen::VectorXd magnitude = f.values.cwiseAbs();
  const auto& w = curve.arc_weights();

  NormResult result;
  double l1 = 0.0, sup = 0.0;
  bool all_infinite = true, any_nonzero = false;
  std::optional<double> common;
  bool constant = true;
  for (std::size_t j = 0; j < domain.size(); ++j) {
    if (!domain.contains(j)) continue;
    const auto k = static_cast<Eigen::Index>(j);
    if (!std::isfinite(magnitude[k])) {
      result.value = std::numeric_limits<double>::infinity();
      result.modular_at_value = std::numeric_limits<double>::infinity();
      return result;
    }
    any_nonzero = any_nonzero || magnitude[k] != 0.0;
    l1 += magnitude[k] * w[k];
    sup = std::max(sup, magnitude[k]);
    all_infinite = all_infinite && p.is_infinite(j);
    if (!common) common = p[j];
    constant = constant && p[j] == *common;
  }
  if (!any_nonzero) return result;

  if (constant && common) {
    result.closed_form = true;
    if (all_infinite) {
      result.value = sup;
    } else {
      // Scale by sup before powering to stay clear of overflow.
      double integral = 0.0;
      for (std::size_t j = 0; j < domain.size(); ++j) {
        if (!domain.contains(j)) continue;
        const auto k = static_cast<Eigen::Index>(j);
        if (magnitude[k] != 0.0) integral += std::pow(magnitude[k] / sup, *common) * w[k];
      }
      result.value = sup * std::pow(integral, 1.0 / *common);
    }
    result.modular_at_value = detail::scaled_modular(curve, magnitude, p, domain, result.value);
    result.bracket = {result.value, result.value};
    return result;
  }

  auto rho = [&](double lambda) { return detail::scaled_modular(curve, magnitude, p, domain, lambda); };
  const double measure = domain.measure(curve);
  double guess = l1 / measure;
  if (!(guess > 0.0)) guess = sup;
  double lo = guess, hi = guess;
  constexpr double max_lambda = 1e300, min_lambda = 1e-300;
  if (rho(guess) > 1.0) {
    while (rho(hi) > 1.0) {
      lo = hi;
      hi *= 2.0;
      if (hi > max_lambda) throw NumericalFault("luxemburg_norm: modular exceeds 1 for all representable lambda");
    }
  } else {
    while (rho(lo) <= 1.0) {
      hi = lo;
      lo *= 0.5;
      if (lo < min_lambda) throw NumericalFault("luxemburg_norm: bracket search underflowed");
    }
  }
  result.bracket = {lo, hi};

  // Invariant: rho(lo) > 1 >= rho(hi).
  double best = hi, best_rho = rho(hi);
  int it = 0;
  while (std::abs(best_rho - 1.0) > options.tolerance && it < options.max_iterations) {
    ++it;
    const double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;
    const double value = rho(mid);
    if (value > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (std::abs(value - 1.0) < std::abs(best_rho - 1.0)) {
      best = mid;
      best_rho = value;
    }
  }
  result.value = best;
  result.modular_at_value = best_rho;
  result.bisection_iterations = it;
  result.converged = std::abs(best_rho - 1.0) <= options.tolerance;
  return result;
}

inline NormResult luxemburg_norm(const JordanCurve& curve, const SampledFunction& f, const ExponentFunction& p,
                                 NormOptions options = {}) {
  return luxemburg_norm(curve, f, p, NodeSet::all(curve.size()), options);
}

inline double norm_value(const JordanCurve& curve, const SampledFunction& f, const ExponentFunction& p) {
  return luxemburg_norm(curve, f, p).value;
}

struct UnitBallCheck {
  bool modular_at_most_one = false;
  bool norm_at_most_one = false;
  bool consistent = true;  ///< false is a numerical-fault diagnostic
};

/// rho(f) <= 1 and ||f|| <= 1, evaluated independently; they must agree.
inline UnitBallCheck unit_ball_check(const JordanCurve& curve, const SampledFunction& f, const ExponentFunction& p,
                                     const NodeSet& gamma, double tolerance = 1e-10) {
  UnitBallCheck out;
  out.modular_at_most_one = modular(curve, f, p, gamma) <= 1.0 + tolerance;
  out.norm_at_most_one = luxemburg_norm(curve, f, p, gamma).value <= 1.0 + tolerance;
  out.consistent = out.modular_at_most_one == out.norm_at_most_one;
  return out;
}

struct HolderRecord {
  double lhs = 0.0;          ///< ||f g||_q
  double rhs_product = 0.0;  ///< ||f||_p ||g||_r
  double ratio = 0.0;
};

inline SampledFunction pointwise_product(const SampledFunction& f, const SampledFunction& g) {
  detail::require(f.size() == g.size(), "pointwise_product: sizes differ");
  SampledFunction out(f.values.cwiseProduct(g.values));
  if (f.support && g.support) {
    out.support = f.support->intersect(*g.support);
  } else if (f.support) {
    out.support = f.support;
  } else if (g.support) {
    out.support = g.support;
  }
  return out;
}

/// Generalized Hoelder inequality ||fg||_q <= C ||f||_p ||g||_r.
inline HolderRecord holder_check(const JordanCurve& curve, const SampledFunction& f, const SampledFunction& g,
                                 const ExponentFunction& p, const ExponentFunction& q, const ExponentFunction& r) {
  for (std::size_t j = 0; j < p.size(); ++j)
    detail::require(holder_relation_defect(p[j], q[j], r[j]) <= 1e-12,
                    "holder_check: exponents violate 1/q = 1/p + 1/r at node " + std::to_string(j));
  HolderRecord out;
  out.lhs = norm_value(curve, pointwise_product(f, g), q);
  out.rhs_product = norm_value(curve, f, p) * norm_value(curve, g, r);
  if (out.rhs_product == 0.0) {
    if (out.lhs > 0.0) throw NumericalFault("holder_check: ||fg|| > 0 with ||f|| ||g|| = 0");
    out.ratio = 0.0;
  } else {
    out.ratio = out.lhs / out.rhs_product;
  }
  return out;
}

/// ||a||_{L^{r(.)}} with 1/q = 1/p + 1/r; the theorem value of the
/// multiplier norm. Exact for constant exponents, equivalent otherwise.
inline double multiplier_norm_via_theorem(const JordanCurve& curve, const SampledFunction& a, const ExponentFunction& p,
                                          const ExponentFunction& q) {
  const ExponentFunction r = conjugate_exponent_r(p, q);
  return norm_value(curve, a, r);
}

/// Near-extremal test function for the multiplier bound with constant c:
///   f_eps = ((c + eps) / a) (|a| / (c + eps))^{r/q} where a != 0, else 0,
/// on the finite-exponent part gamma3, zero elsewhere.
inline SampledFunction multiplier_witness(const JordanCurve& curve, const SampledFunction& a, const ExponentFunction& p,
                                          const ExponentFunction& q, double c, double eps) {
  detail::require(c > 0.0, "multiplier_witness: c must be positive");
  detail::require(eps > 0.0, "multiplier_witness: eps must be positive");
  detail::require(a.size() == curve.size(), "multiplier_witness: symbol does not match curve");
  const ExponentFunction r = conjugate_exponent_r(p, q);
  const InfinityPartition parts = partition_infinity_sets(p, q, r);
  Eigen::VectorXcd values = Eigen::VectorXcd::Zero(a.values.size());
  const double scale = c + eps;
  for (std::size_t j : parts.gamma3) {
    const auto k = static_cast<Eigen::Index>(j);
    if (!a.active(j)) continue;
    const cplx aj = a.values[k];
    if (aj == cplx(0.0, 0.0)) continue;
    values[k] = (scale / aj) * std::pow(std::abs(aj) / scale, r[j] / q[j]);
  }
  return SampledFunction(std::move(values));
}

struct MultiplierLowerBound {
  double value = 0.0;  ///< max ||a g||_q over the trial corpus with ||g||_p = 1
  std::string best_trial;
  double witness_value = 0.0;  ///< ||a g||_q for the normalized witness (0 if vacuous)
  std::size_t trials = 0;
};

/// Certified lower bound for ||a||_{M(L^p, L^q)} from a finite trial corpus:
/// constants, arc indicators (including single nodes at the peak of |a|),
/// random trigonometric polynomials, and the theorem witness.
inline MultiplierLowerBound multiplier_norm_lower(const JordanCurve& curve, const SampledFunction& a,
                                                  const ExponentFunction& p, const ExponentFunction& q,
                                                  std::size_t random_trials = 16, std::uint64_t seed = 7) {
  detail::require(dominance_check(p, q).holds, "multiplier_norm_lower: requires q <= p");
  const auto n = curve.size();
  MultiplierLowerBound out;

  auto consider = [&](const SampledFunction& g, const std::string& label) -> double {
    const double gn = norm_value(curve, g, p);
    if (!(gn > 0.0) || !std::isfinite(gn)) return 0.0;
    SampledFunction normalized(g.values / gn, g.support.value_or(NodeSet::all(n)));
    const double value = norm_value(curve, pointwise_product(a, normalized), q);
    ++out.trials;
    if (value > out.value) {
      out.value = value;
      out.best_trial = label;
    }
    return value;
  };

  consider(SampledFunction::constant(n, 1.0), "constant");

  // Arcs of decreasing length centred at the peak of |a| and at spread nodes.
  const Eigen::VectorXd magnitude = a.values.cwiseAbs();
  Eigen::Index peak = 0;
  magnitude.maxCoeff(&peak);
  std::vector<std::size_t> centres{static_cast<std::size_t>(peak)};
  for (std::size_t k = 0; k < 8; ++k) centres.push_back(k * n / 8);
  for (std::size_t centre : centres) {
    for (std::size_t half = n / 4; half >= 1; half /= 4) {
      std::vector<std::size_t> arc;
      for (std::size_t d = 0; d <= 2 * half; ++d) arc.push_back((centre + n - half + d) % n);
      consider(SampledFunction::indicator(NodeSet::from_indices(n, arc)), "arc");
    }
    consider(SampledFunction::indicator(NodeSet::from_indices(n, {centre})), "node");
  }

  Rng rng(seed);
  for (std::size_t t = 0; t < random_trials; ++t) {
    const long degree = rng.integer(1, 6);
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    for (long m = -degree; m <= degree; ++m) {
      const cplx c = rng.complex_box();
      for (std::size_t j = 0; j < n; ++j)
        g[static_cast<Eigen::Index>(j)] += c * std::polar(1.0, static_cast<double>(m) * curve.parameter_angle(j));
    }
    consider(SampledFunction(std::move(g)), "trig");
  }

  const double c = multiplier_norm_via_theorem(curve, a, p, q);
  if (c > 0.0 && std::isfinite(c)) {
    const SampledFunction witness = multiplier_witness(curve, a, p, q, c, 1e-9 * c);
    out.witness_value = consider(witness, "witness");
  }
  return out;
}

}  // namespace hardy

#endif  // HARDY_LEBESGUE_HPP
