#ifndef HARDY_TOEPLITZ_HPP
#define HARDY_TOEPLITZ_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "hardy/cauchy.hpp"
#include "hardy/curve.hpp"
#include "hardy/error.hpp"
#include "hardy/exponent.hpp"
#include "hardy/fourier.hpp"
#include "hardy/lebesgue.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

/// Fourier coefficients a_k, |k| <= degree. An exact table belongs to a
/// trigonometric polynomial and is zero beyond its degree.
struct CoefficientTable {
  long degree = 0;
  std::vector<cplx> values{cplx{}};
  bool exact = false;

  cplx at(long k) const {
    if (k < -degree || k > degree) {
      if (exact) return {0.0, 0.0};
      throw ValidationError("CoefficientTable: coefficient " + std::to_string(k) + " beyond degree " +
                            std::to_string(degree));
    }
    return values[static_cast<std::size_t>(k + degree)];
  }
};

/// Symbol a(theta) on the unit circle, theta the polar angle of t = e^{i theta}.
class Symbol {
 public:
  using Function = std::function<cplx(double)>;

  Symbol(std::string name, Function function, std::vector<double> singular_points = {})
      : name_(std::move(name)), function_(std::move(function)), singular_points_(std::move(singular_points)) {
    std::sort(singular_points_.begin(), singular_points_.end());
  }

  /// sum_k c_k t^k from a finite coefficient map.
  static Symbol trig_polynomial(std::string name, std::map<long, cplx> coefficients) {
    auto coeffs = coefficients;
    Symbol s(std::move(name), [coeffs](double theta) {
      cplx sum = 0.0;
      for (const auto& [k, c] : coeffs) sum += c * std::polar(1.0, static_cast<double>(k) * theta);
      return sum;
    });
    s.trig_ = std::move(coefficients);
    return s;
  }

  /// t^k.
  static Symbol monomial(long k) { return trig_polynomial("t^" + std::to_string(k), {{k, 1.0}}); }

  static Symbol cosine() { return trig_polynomial("cos", {{-1, 0.5}, {1, 0.5}}); }

  /// 1 + cos^2 theta = 3/2 + (t^2 + t^-2) / 4.
  static Symbol one_plus_cos_squared() { return trig_polynomial("1+cos2", {{-2, 0.25}, {0, 1.5}, {2, 0.25}}); }

  /// |e^{i theta} - 1|^beta, integrable for beta > -1, singular at theta = 0.
  static Symbol abs_power(double beta) {
    detail::require(beta > -1.0, "abs_power: exponent must exceed -1");
    // smooth only for even integer powers; otherwise theta = 0 is a kink or a pole
    const bool even_integer = beta >= 0.0 && std::fmod(beta, 2.0) == 0.0;
    return Symbol("abs-pow:" + std::to_string(beta),
                  [beta](double theta) { return cplx(std::pow(2.0 * std::abs(std::sin(0.5 * theta)), beta), 0.0); },
                  even_integer ? std::vector<double>{} : std::vector<double>{0.0});
  }

  const std::string& name() const { return name_; }
  cplx operator()(double theta) const { return function_(theta); }
  const std::vector<double>& singular_points() const { return singular_points_; }
  bool is_trig_polynomial() const { return trig_.has_value(); }

  /// Largest |k| with a nonzero coefficient; -1 if not a trig polynomial.
  long bandwidth() const {
    if (!trig_) return -1;
    long b = 0;
    for (const auto& [k, c] : *trig_)
      if (c != cplx(0.0, 0.0)) b = std::max(b, std::abs(k));
    return b;
  }

  bool is_zero() const {
    if (!trig_) return false;
    return std::all_of(trig_->begin(), trig_->end(), [](const auto& kv) { return kv.second == cplx(0.0, 0.0); });
  }

  /// Closed-form coefficients of a trigonometric polynomial.
  std::optional<CoefficientTable> exact_coefficients(long degree) const {
    if (!trig_) return std::nullopt;
    CoefficientTable table{degree, std::vector<cplx>(static_cast<std::size_t>(2 * degree + 1)), true};
    for (const auto& [k, c] : *trig_)
      if (std::abs(k) <= degree) table.values[static_cast<std::size_t>(k + degree)] = c;
    return table;
  }

  /// a_k = (1/2pi) int a(theta) e^{-ik theta} d theta by quadrature: the
  /// FFT trapezoid rule for smooth symbols, graded Gauss panels between
  /// singular points otherwise.
  CoefficientTable coefficients(long degree) const {
    detail::require(degree >= 0, "Symbol::coefficients: negative degree");
    CoefficientTable table{degree, std::vector<cplx>(static_cast<std::size_t>(2 * degree + 1)), false};
    if (singular_points_.empty()) {
      std::size_t m = 256;
      const long needed = 4 * (degree + std::max(bandwidth(), 0L) + 1);
      while (static_cast<long>(m) < needed) m *= 2;
      Eigen::VectorXcd samples(static_cast<Eigen::Index>(m));
      for (std::size_t j = 0; j < m; ++j)
        samples[static_cast<Eigen::Index>(j)] = function_(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
      const Eigen::VectorXcd c = fourier::analyze(samples);
      for (long k = -degree; k <= degree; ++k) table.values[static_cast<std::size_t>(k + degree)] = c[fourier::bin_of_mode(k, m)];
      table.exact = is_trig_polynomial();
      return table;
    }
    const std::size_t panels = static_cast<std::size_t>(8 * degree + 64);
    for (std::size_t s = 0; s < singular_points_.size(); ++s) {
      const double lo = singular_points_[s];
      const double hi = s + 1 < singular_points_.size() ? singular_points_[s + 1] : singular_points_[0] + 2.0 * std::numbers::pi;
      const auto rule = quadrature::graded_interval(lo, hi, panels);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double theta = rule.nodes[i];
        const cplx value = function_(theta) * (rule.weights[i] / (2.0 * std::numbers::pi));
        const cplx step = std::polar(1.0, -theta);
        cplx phase = std::polar(1.0, static_cast<double>(degree) * theta);  // e^{-ik theta} at k = -degree
        for (long k = -degree; k <= degree; ++k) {
          table.values[static_cast<std::size_t>(k + degree)] += value * phase;
          phase *= step;
        }
      }
    }
    return table;
  }

  /// Values at the curve nodes, theta = parameter angle. A node sitting on a
  /// singular point where a is infinite receives the average of a over its cell.
  Eigen::VectorXcd sample(const JordanCurve& curve) const {
    const auto n = curve.size();
    const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
    Eigen::VectorXcd out(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
      const double theta = curve.parameter_angle(j);
      const bool singular = std::any_of(singular_points_.begin(), singular_points_.end(), [&](double s) {
        return std::abs(std::remainder(theta - s, 2.0 * std::numbers::pi)) < 1e-12;
      });
      const cplx value = function_(theta);
      const bool finite = std::isfinite(value.real()) && std::isfinite(value.imag());
      out[static_cast<Eigen::Index>(j)] = singular && !finite ? cell_average(theta, h) : value;
    }
    return out;
  }

 private:
  cplx cell_average(double theta, double h) const {
    cplx sum = 0.0;
    for (double side : {-1.0, 1.0}) {
      const auto rule = quadrature::graded_interval(0.0, 0.5 * h, 4);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += function_(theta + side * rule.nodes[i]) * rule.weights[i];
    }
    return sum / h;
  }

  std::string name_;
  Function function_;
  std::vector<double> singular_points_;
  std::optional<std::map<long, cplx>> trig_;
};

enum class SectionKind {
  toeplitz,   ///< T(a) on modes 0..n-1 -> 0..m-1, entries a_{j-k}
  companion,  ///< Q(a .) on modes -1..-n -> -1..-m, entries a_{k-j}
};

inline const char* to_string(SectionKind kind) { return kind == SectionKind::toeplitz ? "T" : "companion"; }

struct ToeplitzSection {
  Eigen::MatrixXcd matrix;
  SectionKind which = SectionKind::toeplitz;

  Eigen::Index rows() const { return matrix.rows(); }
  Eigen::Index cols() const { return matrix.cols(); }
};

/// m x n truncation of T(a) or of the companion operator on the Fourier basis.
inline ToeplitzSection finite_section(const CoefficientTable& table, std::size_t m, std::size_t n, SectionKind which) {
  detail::require(m > 0 && n > 0, "finite_section: empty section");
  if (!table.exact)
    detail::require(table.degree >= static_cast<long>(m + n),
                    "finite_section: coefficients needed to degree " + std::to_string(m + n));
  ToeplitzSection section{Eigen::MatrixXcd(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)), which};
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const long diff = static_cast<long>(j) - static_cast<long>(k);
      section.matrix(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          table.at(which == SectionKind::toeplitz ? diff : -diff);
    }
  }
  return section;
}

inline ToeplitzSection finite_section(const Symbol& symbol, std::size_t m, std::size_t n, SectionKind which) {
  const auto degree = static_cast<long>(m + n);
  const auto exact = symbol.exact_coefficients(degree);
  return finite_section(exact ? *exact : symbol.coefficients(degree), m, n, which);
}

struct KernelEstimate {
  std::size_t dim = 0;  ///< singular values below threshold * sigma_max, plus cols - rows if wide
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

inline KernelEstimate numerical_kernel(const Eigen::MatrixXcd& matrix, double threshold = 1e-8) {
  detail::require(matrix.rows() > 0 && matrix.cols() > 0, "numerical_kernel: empty matrix");
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(matrix);
  const Eigen::VectorXd sigma = svd.singularValues();
  KernelEstimate out;
  out.sigma_max = sigma.maxCoeff();
  const Eigen::Index rank_slots = sigma.size();
  out.sigma_min = matrix.cols() > matrix.rows() ? 0.0 : sigma.minCoeff();
  for (Eigen::Index i = 0; i < rank_slots; ++i)
    if (sigma[i] < threshold * out.sigma_max || out.sigma_max == 0.0) ++out.dim;
  if (matrix.cols() > matrix.rows()) out.dim += static_cast<std::size_t>(matrix.cols() - matrix.rows());
  return out;
}

inline KernelEstimate numerical_kernel(const ToeplitzSection& section, double threshold = 1e-8) {
  return numerical_kernel(section.matrix, threshold);
}

namespace detail {

inline void require_in_range(const JordanCurve& curve, const Eigen::VectorXcd& f, const Eigen::VectorXcd& projected,
                             double tolerance, const char* what) {
  const double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
  require((projected - f).cwiseAbs().maxCoeff() <= tolerance * scale, what);
  (void)curve;
}

}  // namespace detail

/// T(a) f = P(a f) for f in the analytic subspace (Pf = f).
inline Eigen::VectorXcd toeplitz_apply(const JordanCurve& curve, const Eigen::VectorXcd& a, const Eigen::VectorXcd& f,
                                       double tolerance = 1e-8, SioBackend backend = SioBackend::automatic) {
  detail::require(a.size() == f.size() && static_cast<std::size_t>(f.size()) == curve.size(),
                  "toeplitz_apply: sample count mismatch");
  detail::require_in_range(curve, f, apply_P(curve, f, backend).col(0), tolerance,
                           "toeplitz_apply: input is not in the analytic subspace (Pf != f)");
  return apply_P(curve, a.cwiseProduct(f), backend).col(0);
}

/// Companion operator g -> Q(a g) for g in the anti-analytic subspace (Qg = g).
inline Eigen::VectorXcd companion_apply(const JordanCurve& curve, const Eigen::VectorXcd& a, const Eigen::VectorXcd& g,
                                        double tolerance = 1e-8, SioBackend backend = SioBackend::automatic) {
  detail::require(a.size() == g.size() && static_cast<std::size_t>(g.size()) == curve.size(),
                  "companion_apply: sample count mismatch");
  detail::require_in_range(curve, g, apply_Q(curve, g, backend).col(0), tolerance,
                           "companion_apply: input is not in the anti-analytic subspace (Qg != g)");
  return apply_Q(curve, a.cwiseProduct(g), backend).col(0);
}

struct ToeplitzBound {
  double output_norm = 0.0;      ///< ||T(a) f||_q
  double multiplier_norm = 0.0;  ///< ||a||_{L^r}, the theorem value of ||a||_M
  double input_norm = 0.0;       ///< ||f||_p
  double bound = 0.0;            ///< projection_norm * multiplier_norm * input_norm
  double ratio = 0.0;            ///< output_norm / bound
};

/// Records ||T(a) f||_{Y} against ||P|| ||a||_{M(X,Y)} ||f||_X.
inline ToeplitzBound toeplitz_bound_check(const JordanCurve& curve, const Eigen::VectorXcd& a, const Eigen::VectorXcd& f,
                                          const ExponentFunction& p, const ExponentFunction& q,
                                          double projection_norm = 1.0) {
  ToeplitzBound out;
  out.output_norm = norm_value(curve, SampledFunction(toeplitz_apply(curve, a, f)), q);
  out.multiplier_norm = multiplier_norm_via_theorem(curve, SampledFunction(a), p, q);
  out.input_norm = norm_value(curve, SampledFunction(f), p);
  out.bound = projection_norm * out.multiplier_norm * out.input_norm;
  out.ratio = out.bound > 0.0 ? out.output_norm / out.bound : 0.0;
  return out;
}

struct BlockIdentityResidual {
  double off_diagonal_a = 0.0;      ///< max(|Q A P phi|, |P A Q phi|), A = PaP + Q
  double lower_block_a = 0.0;       ///< |Q A Q phi - Q phi|
  double off_diagonal_b = 0.0;      ///< max(|Q B P phi|, |P B Q phi|), B = P + QaQ
  double upper_block_b = 0.0;       ///< |P B P phi - P phi|
  double adjoint_identity = 0.0;    ///< |<A phi_l, phi_k> - <phi_l, H B H phi_k>|
  double multiplication_adjoint = 0.0;  ///< (aI)* = conj(a) I and H a H = conj(a)
  long degree = 0;

  double max() const {
    return std::max({off_diagonal_a, lower_block_a, off_diagonal_b, upper_block_b, adjoint_identity,
                     multiplication_adjoint});
  }
};

/// Matrix-level residuals of the block decompositions of PaP + Q and P + QaQ
/// and of (PaP + Q)* = H (P + QaQ) H on the parameter-mode basis.
inline BlockIdentityResidual block_identity_residual(const JordanCurve& curve, const Eigen::VectorXcd& a, long degree,
                                                     SioBackend backend = SioBackend::automatic) {
  detail::require(static_cast<std::size_t>(a.size()) == curve.size(), "block_identity_residual: symbol size mismatch");
  detail::require(curve.size() > static_cast<std::size_t>(2 * degree + 2), "block_identity_residual: degree too large");
  const Eigen::MatrixXcd phi = parameter_mode_basis(curve, degree);
  const auto c = phi.cols();
  auto S = [&](const Eigen::MatrixXcd& x) { return apply_S(curve, x, backend); };
  auto mul = [&](const Eigen::MatrixXcd& x) { return Eigen::MatrixXcd(a.asDiagonal() * x); };
  auto split = [](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& sx) {
    return std::make_pair(Eigen::MatrixXcd(0.5 * (x + sx)), Eigen::MatrixXcd(0.5 * (x - sx)));
  };
  auto apply_A = [&](const Eigen::MatrixXcd& x) {
    auto [px, qx] = split(x, S(x));
    const Eigen::MatrixXcd apx = mul(px);
    return Eigen::MatrixXcd(0.5 * (apx + S(apx)) + qx);
  };
  auto apply_B = [&](const Eigen::MatrixXcd& x) {
    auto [px, qx] = split(x, S(x));
    const Eigen::MatrixXcd aqx = mul(qx);
    return Eigen::MatrixXcd(px + 0.5 * (aqx - S(aqx)));
  };
  auto max_abs = [](const Eigen::MatrixXcd& x) { return x.size() ? x.cwiseAbs().maxCoeff() : 0.0; };

  const auto [p_phi, q_phi] = split(phi, S(phi));
  BlockIdentityResidual out;
  out.degree = degree;
  {
    Eigen::MatrixXcd images(phi.rows(), 2 * c);
    images << apply_A(p_phi), apply_A(q_phi);
    const auto [p_img, q_img] = split(images, S(images));
    out.off_diagonal_a = std::max(max_abs(q_img.leftCols(c)), max_abs(p_img.rightCols(c)));
    out.lower_block_a = max_abs(q_img.rightCols(c) - q_phi);
  }
  {
    Eigen::MatrixXcd images(phi.rows(), 2 * c);
    images << apply_B(p_phi), apply_B(q_phi);
    const auto [p_img, q_img] = split(images, S(images));
    out.off_diagonal_b = std::max(max_abs(q_img.leftCols(c)), max_abs(p_img.rightCols(c)));
    out.upper_block_b = max_abs(p_img.leftCols(c) - p_phi);
  }
  const Eigen::MatrixXcd hbh = conjugation_H(curve, apply_B(conjugation_H(curve, phi)));
  out.adjoint_identity = max_abs(weighted_pairing(curve, apply_A(phi), phi) - weighted_pairing(curve, phi, hbh));
  const Eigen::MatrixXcd a_bar_phi = a.conjugate().asDiagonal() * phi;
  out.multiplication_adjoint =
      std::max(max_abs(weighted_pairing(curve, mul(phi), phi) - weighted_pairing(curve, phi, a_bar_phi)),
               max_abs(conjugation_H(curve, mul(conjugation_H(curve, phi))) - a_bar_phi));
  return out;
}

enum class Verdict { t_injective, companion_injective, both, under_resolved };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::t_injective: return "T-injective";
    case Verdict::companion_injective: return "companion-injective";
    case Verdict::both: return "both";
    case Verdict::under_resolved: return "under-resolved";
  }
  return "under-resolved";
}

struct SectionRecord {
  std::size_t n = 0;
  double sigma_min_t = 0.0;
  double sigma_min_companion = 0.0;
  std::size_t kernel_dim_t = 0;
  std::size_t kernel_dim_companion = 0;
};

struct DichotomyOptions {
  double injectivity_floor = 1e-6;  ///< sigma_min below this counts as a kernel
  double kernel_threshold = 1e-8;   ///< relative threshold for numerical_kernel
  double trend_slack = 1e-6;        ///< relative growth tolerated in a "nonincreasing" trend
};

struct DichotomyVerdict {
  std::string symbol;
  std::size_t aspect = 0;
  std::vector<SectionRecord> records;
  bool t_bounded_below = false;          ///< sigma_min(T) >= floor at every size
  bool companion_bounded_below = false;
  bool t_trend_monotone = true;
  bool companion_trend_monotone = true;
  Verdict verdict = Verdict::under_resolved;
  bool contradiction = false;  ///< both sides persistently degenerate
  double fault_diagnostic = 0.0;  ///< max |a f+ g-| for the kernel pair, when contradiction
};

namespace detail {

inline bool nonincreasing(const std::vector<double>& v, double slack) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1] * (1.0 + slack) + 1e-14) return false;
  return true;
}

}  // namespace detail

/// Probes trivial-kernel-or-dense-image via tall (n + d) x n sections of
/// T(a) and of the companion operator. Density of the image of T(a) is read
/// off as injectivity of the companion.
inline DichotomyVerdict dichotomy_probe(const Symbol& symbol, const ExponentFunction& p, const ExponentFunction& q,
                                        const std::vector<std::size_t>& sizes, std::size_t aspect = 8,
                                        DichotomyOptions options = {}) {
  detail::require(!symbol.is_zero(), "dichotomy_probe: symbol must not vanish identically");
  detail::require(dominance_check(p, q).holds, "dichotomy_probe: requires q <= p");
  detail::require(!sizes.empty(), "dichotomy_probe: no section sizes");
  const std::size_t d = std::max<std::size_t>(aspect, static_cast<std::size_t>(std::max(symbol.bandwidth(), 0L)));
  const std::size_t largest = *std::max_element(sizes.begin(), sizes.end());
  const long degree = static_cast<long>(2 * largest + d);
  const auto exact = symbol.exact_coefficients(degree);
  const CoefficientTable table = exact ? *exact : symbol.coefficients(degree);
  if (!exact) {
    double biggest = 0.0;
    for (const auto& c : table.values) biggest = std::max(biggest, std::abs(c));
    detail::require(biggest > 1e-14, "dichotomy_probe: symbol must not vanish identically");
  }

  DichotomyVerdict out;
  out.symbol = symbol.name();
  out.aspect = d;
  std::vector<double> t_sig, c_sig;
  for (std::size_t n : sizes) {
    detail::require(n > 0, "dichotomy_probe: section size must be positive");
    const auto kt = numerical_kernel(finite_section(table, n + d, n, SectionKind::toeplitz), options.kernel_threshold);
    const auto kc = numerical_kernel(finite_section(table, n + d, n, SectionKind::companion), options.kernel_threshold);
    out.records.push_back({n, kt.sigma_min, kc.sigma_min, kt.dim, kc.dim});
    t_sig.push_back(kt.sigma_min);
    c_sig.push_back(kc.sigma_min);
  }
  auto all_above = [&](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double s) { return s >= options.injectivity_floor; });
  };
  auto all_below = [&](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double s) { return s < options.injectivity_floor; });
  };
  out.t_bounded_below = all_above(t_sig);
  out.companion_bounded_below = all_above(c_sig);
  out.t_trend_monotone = detail::nonincreasing(t_sig, options.trend_slack);
  out.companion_trend_monotone = detail::nonincreasing(c_sig, options.trend_slack);
  const bool t_ok = out.t_bounded_below && out.t_trend_monotone;
  const bool c_ok = out.companion_bounded_below && out.companion_trend_monotone;
  out.verdict = t_ok && c_ok ? Verdict::both
                : t_ok       ? Verdict::t_injective
                : c_ok       ? Verdict::companion_injective
                             : Verdict::under_resolved;
  out.contradiction = all_below(t_sig) && all_below(c_sig);

  if (out.contradiction) {
    // f+ in ker T(a), g- in ker of the companion; a f+ g- must vanish.
    const std::size_t n = sizes.back();
    Eigen::BDCSVD<Eigen::MatrixXcd> st(finite_section(table, n + d, n, SectionKind::toeplitz).matrix, Eigen::ComputeThinV);
    Eigen::BDCSVD<Eigen::MatrixXcd> sc(finite_section(table, n + d, n, SectionKind::companion).matrix, Eigen::ComputeThinV);
    const Eigen::VectorXcd fplus = st.matrixV().col(st.matrixV().cols() - 1);
    const Eigen::VectorXcd gminus = sc.matrixV().col(sc.matrixV().cols() - 1);
    std::size_t grid = 64;
    while (grid < 4 * (n + d + static_cast<std::size_t>(std::max(symbol.bandwidth(), 0L)))) grid *= 2;
    const auto g = static_cast<Eigen::Index>(grid);
    Eigen::VectorXcd fb = Eigen::VectorXcd::Zero(g), gb = Eigen::VectorXcd::Zero(g);
    for (std::size_t k = 0; k < n; ++k) {
      fb[fourier::bin_of_mode(static_cast<long>(k), grid)] = fplus[static_cast<Eigen::Index>(k)];
      gb[fourier::bin_of_mode(-static_cast<long>(k) - 1, grid)] = gminus[static_cast<Eigen::Index>(k)];
    }
    const Eigen::VectorXcd fv = fourier::synthesize(fb), gv = fourier::synthesize(gb);
    double worst = 0.0;
    for (Eigen::Index j = 0; j < g; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid);
      worst = std::max(worst, std::abs(symbol(theta) * fv[j] * gv[j]));
    }
    out.fault_diagnostic = worst;
  }
  return out;
}

}  // namespace hardy

#endif  // HARDY_TOEPLITZ_HPP
