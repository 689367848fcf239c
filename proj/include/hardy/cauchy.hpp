#ifndef HARDY_CAUCHY_HPP
#define HARDY_CAUCHY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "hardy/curve.hpp"
#include "hardy/error.hpp"
#include "hardy/fourier.hpp"
#include "hardy/lebesgue.hpp"

namespace hardy {

enum class SioBackend {
  automatic,   ///< Fourier on the unit circle, quadrature elsewhere
  fourier,     ///< exact sign multiplier, unit circle only
  quadrature,  ///< principal-value quadrature on any curve
};

inline constexpr std::size_t min_quadrature_nodes = 64;

namespace detail {

inline constexpr cplx imag_unit{0.0, 1.0};

/// Columnwise S on the equispaced unit circle: c_m -> sign(m) c_m with
/// sign(m) = +1 for m >= 0 and -1 for m < 0.
inline Eigen::MatrixXcd fourier_S(const Eigen::MatrixXcd& values) {
  const auto n = static_cast<std::size_t>(values.rows());
  Eigen::MatrixXcd out(values.rows(), values.cols());
  Eigen::FFT<double> fft;
  Eigen::VectorXcd spectrum(values.rows()), column(values.rows()), back(values.rows());
  for (Eigen::Index c = 0; c < values.cols(); ++c) {
    column = values.col(c);
    fft.fwd(spectrum, column);
    for (std::size_t k = 0; k < n; ++k)
      if (fourier::mode_of_bin(k, n) < 0) spectrum[static_cast<Eigen::Index>(k)] = -spectrum[static_cast<Eigen::Index>(k)];
    fft.inv(back, spectrum);
    out.col(c) = back;
  }
  return out;
}

/// Columnwise principal-value quadrature of
///   (Sf)(t_i) = f_i + (1/(pi i)) sum_{j != i} (f_j - f_i) dtau_j / (tau_j - t_i) + (1/(pi i)) d_i,
/// where subtracting f_i uses S1 = 1 and d_i is the excluded-arc midpoint
/// term (df/ds) ds from a fourth-order central difference.
inline Eigen::MatrixXcd quadrature_S(const JordanCurve& curve, const Eigen::MatrixXcd& values) {
  const auto n = static_cast<Eigen::Index>(curve.size());
  require(curve.size() >= min_quadrature_nodes, "apply_S: quadrature backend needs at least 64 nodes");
  const auto& tau = curve.nodes();
  const auto& dtau = curve.dtau();
  constexpr Eigen::Index block = 256;
  Eigen::MatrixXcd kernel(std::min(block, n), n);
  Eigen::MatrixXcd out(n, values.cols());
  for (Eigen::Index start = 0; start < n; start += block) {
    const Eigen::Index rows = std::min(block, n - start);
    Eigen::VectorXcd rowsum(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const Eigen::Index i = start + r;
      const cplx t = tau[i];
      cplx sum = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        const cplx k = j == i ? cplx(0.0) : dtau[j] / (tau[j] - t);
        kernel(r, j) = k;
        sum += k;
      }
      rowsum[r] = sum;
    }
    out.middleRows(start, rows).noalias() = kernel.topRows(rows) * values;
    for (Eigen::Index r = 0; r < rows; ++r) out.row(start + r) -= rowsum[r] * values.row(start + r);
  }
  const cplx inv_pi_i = 1.0 / (std::numbers::pi * imag_unit);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto m2 = (i + n - 2) % n, m1 = (i + n - 1) % n, p1 = (i + 1) % n, p2 = (i + 2) % n;
    out.row(i) += (-values.row(p2) + 8.0 * values.row(p1) - 8.0 * values.row(m1) + values.row(m2)) / 12.0;
  }
  return values + inv_pi_i * out;
}

inline SioBackend resolve_backend(const JordanCurve& curve, SioBackend backend) {
  if (backend == SioBackend::automatic)
    return curve.kind() == CurveKind::unit_circle ? SioBackend::fourier : SioBackend::quadrature;
  if (backend == SioBackend::fourier)
    require(curve.kind() == CurveKind::unit_circle, "apply_S: Fourier backend requires the unit circle");
  return backend;
}

}  // namespace detail

/// Cauchy singular integral applied to each column of values.
inline Eigen::MatrixXcd apply_S(const JordanCurve& curve, const Eigen::MatrixXcd& values,
                                SioBackend backend = SioBackend::automatic) {
  detail::require(static_cast<std::size_t>(values.rows()) == curve.size(), "apply_S: sample count mismatch");
  return detail::resolve_backend(curve, backend) == SioBackend::fourier ? detail::fourier_S(values)
                                                                         : detail::quadrature_S(curve, values);
}

inline Eigen::VectorXcd apply_S(const JordanCurve& curve, const Eigen::VectorXcd& values,
                                SioBackend backend = SioBackend::automatic) {
  Eigen::MatrixXcd m = values;
  return apply_S(curve, m, backend).col(0);
}

inline SampledFunction apply_S(const JordanCurve& curve, const SampledFunction& f,
                               SioBackend backend = SioBackend::automatic) {
  return SampledFunction(apply_S(curve, f.values, backend));
}

/// Max relative error of S on 1/(tau - z) with z far outside the curve,
/// where Sf = f exactly. Zero up to rounding on the Fourier backend.
inline double quadrature_error_estimate(const JordanCurve& curve, SioBackend backend = SioBackend::automatic) {
  const double radius = curve.nodes().cwiseAbs().maxCoeff();
  const cplx z = cplx(2.0 * radius + 1.0, 0.5);
  Eigen::VectorXcd f(curve.nodes().size());
  for (Eigen::Index j = 0; j < f.size(); ++j) f[j] = 1.0 / (curve.nodes()[j] - z);
  return (apply_S(curve, f, backend) - f).cwiseAbs().maxCoeff() / f.cwiseAbs().maxCoeff();
}

struct RieszProjections {
  Eigen::MatrixXcd p;  ///< (I + S) / 2
  Eigen::MatrixXcd q;  ///< (I - S) / 2
};

inline RieszProjections riesz_projections(const JordanCurve& curve, const Eigen::MatrixXcd& values,
                                          SioBackend backend = SioBackend::automatic) {
  const Eigen::MatrixXcd s = apply_S(curve, values, backend);
  RieszProjections out{0.5 * (values + s), Eigen::MatrixXcd()};
  out.q = values - out.p;  // P + Q = I exactly
  return out;
}

inline Eigen::MatrixXcd apply_P(const JordanCurve& curve, const Eigen::MatrixXcd& values,
                                SioBackend backend = SioBackend::automatic) {
  return 0.5 * (values + apply_S(curve, values, backend));
}

inline Eigen::MatrixXcd apply_Q(const JordanCurve& curve, const Eigen::MatrixXcd& values,
                                SioBackend backend = SioBackend::automatic) {
  return 0.5 * (values - apply_S(curve, values, backend));
}

/// (H f)(tau) = e^{-i theta(tau)} conj(f(tau)), columnwise. Antilinear, H^2 = I.
inline Eigen::MatrixXcd conjugation_H(const JordanCurve& curve, const Eigen::MatrixXcd& values) {
  detail::require(static_cast<std::size_t>(values.rows()) == curve.size(), "conjugation_H: sample count mismatch");
  Eigen::VectorXcd phase(values.rows());
  for (Eigen::Index j = 0; j < phase.size(); ++j) phase[j] = std::polar(1.0, -curve.tangent_angles()[j]);
  return phase.asDiagonal() * values.conjugate();
}

inline Eigen::VectorXcd conjugation_H(const JordanCurve& curve, const Eigen::VectorXcd& values) {
  Eigen::MatrixXcd m = values;
  return conjugation_H(curve, m).col(0);
}

struct OffCurveValue {
  cplx value;
  double distance = 0.0;       ///< dist(z, Gamma)
  bool near_boundary = false;  ///< distance below two node spacings; accuracy degraded
};

/// (1/(2 pi i)) int f(tau) / (tau - z) dtau by the trapezoid rule. For z in D+
/// this is C+f(z); for z in D- it equals -C-f(z) (see exterior_cauchy).
inline OffCurveValue cauchy_offcurve(const JordanCurve& curve, const Eigen::VectorXcd& f, cplx z) {
  detail::require(static_cast<std::size_t>(f.size()) == curve.size(), "cauchy_offcurve: sample count mismatch");
  OffCurveValue out;
  out.distance = curve.distance_to(z);
  out.near_boundary = out.distance <= 2.0 * curve.node_spacing();
  cplx sum = 0.0;
  for (Eigen::Index j = 0; j < f.size(); ++j) sum += f[j] * curve.dtau()[j] / (curve.nodes()[j] - z);
  out.value = sum / (2.0 * std::numbers::pi * detail::imag_unit);
  return out;
}

namespace detail {

/// Cauchy integral with the value at an anchor node subtracted:
///   (1/(2 pi i)) int (f - f_a) / (tau - z) dtau + f_a [z in D+].
/// Bounded integrand near the anchor, so accurate at small offsets.
inline cplx anchored_cauchy(const JordanCurve& curve, const Eigen::VectorXcd& f, cplx z, std::size_t anchor) {
  const cplx fa = f[static_cast<Eigen::Index>(anchor)];
  cplx sum = 0.0;
  for (Eigen::Index j = 0; j < f.size(); ++j) sum += (f[j] - fa) * curve.dtau()[j] / (curve.nodes()[j] - z);
  return sum / (2.0 * std::numbers::pi * imag_unit) + (curve.contains(z) ? fa : cplx(0.0));
}

/// Polynomial extrapolation of samples y(x_k) to x = 0 (Neville).
inline cplx extrapolate_to_zero(const std::vector<double>& x, std::vector<cplx> y) {
  const std::size_t m = x.size();
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = 0; i + level < m; ++i)
      y[i] = (x[i + level] * y[i] - x[i] * y[i + 1]) / (x[i + level] - x[i]);
  return y[0];
}

}  // namespace detail

/// C+f(z) for z in D+.
inline cplx interior_cauchy(const JordanCurve& curve, const Eigen::VectorXcd& f, cplx z) {
  return cauchy_offcurve(curve, f, z).value;
}

/// C-f(z) for z in D-, with Gamma oriented as the boundary of D- (clockwise),
/// so that the exterior boundary value is Qf and C-f vanishes at infinity.
inline cplx exterior_cauchy(const JordanCurve& curve, const Eigen::VectorXcd& f, cplx z) {
  return -cauchy_offcurve(curve, f, z).value;
}

struct PlemeljResidual {
  std::vector<double> offsets;
  std::vector<double> interior;  ///< max_t |C+f(t + d n_in) - Pf(t)| per offset
  std::vector<double> exterior;  ///< max_t |C-f(t - d n_in) - Qf(t)| per offset
  double interior_limit = 0.0;   ///< same, for the boundary limit extrapolated over the offsets
  double exterior_limit = 0.0;
  std::size_t targets = 0;
};

/// Compares the boundary behaviour of C+ and C- with P and Q at every
/// stride-th node along the inward/outward normal.
inline PlemeljResidual plemelj_residual(const JordanCurve& curve, const Eigen::VectorXcd& f,
                                        const std::vector<double>& offsets, std::size_t stride = 1,
                                        SioBackend backend = SioBackend::automatic) {
  detail::require(!offsets.empty(), "plemelj_residual: need at least one offset");
  for (double d : offsets) detail::require(d > 0.0, "plemelj_residual: offsets must be positive");
  detail::require(stride >= 1, "plemelj_residual: stride must be positive");
  const RieszProjections pq = riesz_projections(curve, Eigen::MatrixXcd(f), backend);

  PlemeljResidual out;
  out.offsets = offsets;
  out.interior.assign(offsets.size(), 0.0);
  out.exterior.assign(offsets.size(), 0.0);
  std::vector<cplx> inner(offsets.size()), outer(offsets.size());
  for (std::size_t t = 0; t < curve.size(); t += stride) {
    ++out.targets;
    const cplx normal = curve.inward_normal(t);
    const cplx pf = pq.p(static_cast<Eigen::Index>(t), 0), qf = pq.q(static_cast<Eigen::Index>(t), 0);
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      inner[k] = detail::anchored_cauchy(curve, f, curve.node(t) + offsets[k] * normal, t);
      outer[k] = -detail::anchored_cauchy(curve, f, curve.node(t) - offsets[k] * normal, t);
      out.interior[k] = std::max(out.interior[k], std::abs(inner[k] - pf));
      out.exterior[k] = std::max(out.exterior[k], std::abs(outer[k] - qf));
    }
    out.interior_limit = std::max(out.interior_limit, std::abs(detail::extrapolate_to_zero(offsets, inner) - pf));
    out.exterior_limit = std::max(out.exterior_limit, std::abs(detail::extrapolate_to_zero(offsets, outer) - qf));
  }
  return out;
}

/// Columns e^{i m 2 pi s_j} for m in [-degree, degree]; on the unit circle
/// these are the monomials tau^m.
inline Eigen::MatrixXcd parameter_mode_basis(const JordanCurve& curve, long degree) {
  const auto n = static_cast<Eigen::Index>(curve.size());
  Eigen::MatrixXcd basis(n, 2 * degree + 1);
  for (long m = -degree; m <= degree; ++m)
    for (Eigen::Index j = 0; j < n; ++j)
      basis(j, m + degree) = std::polar(1.0, static_cast<double>(m) * curve.parameter_angle(static_cast<std::size_t>(j)));
  return basis;
}

/// Gram matrix G_{kl} = <X_l, Y_k> = sum_j X_{jl} conj(Y_{jk}) w_j.
inline Eigen::MatrixXcd weighted_pairing(const JordanCurve& curve, const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  return y.adjoint() * curve.arc_weights().asDiagonal() * x;
}

struct AdjointResiduals {
  double s_residual = 0.0;  ///< max |<S phi_l, phi_k> - <phi_l, -HSH phi_k>|
  double p_residual = 0.0;  ///< P* = HQH
  double q_residual = 0.0;  ///< Q* = HPH
  double identity_residual = 0.0;  ///< P + Q = I on the basis
  double gram_scale = 0.0;  ///< max |<phi_l, phi_k>|
  long degree = 0;
};

/// Matrix form of S* = -HSH, P* = HQH, Q* = HPH on the parameter-mode
/// basis of the given degree, under the weighted pairing.
inline AdjointResiduals adjoint_residuals(const JordanCurve& curve, long degree,
                                          SioBackend backend = SioBackend::automatic) {
  detail::require(degree >= 0, "adjoint_residuals: negative degree");
  detail::require(curve.size() > static_cast<std::size_t>(2 * degree + 2),
                  "adjoint_residuals: basis degree too large for the node count");
  const Eigen::MatrixXcd phi = parameter_mode_basis(curve, degree);
  const Eigen::MatrixXcd hphi = conjugation_H(curve, phi);
  Eigen::MatrixXcd stacked(phi.rows(), 2 * phi.cols());
  stacked << phi, hphi;
  const Eigen::MatrixXcd s_all = apply_S(curve, stacked, backend);
  const Eigen::MatrixXcd s_phi = s_all.leftCols(phi.cols());
  const Eigen::MatrixXcd hsh_phi = conjugation_H(curve, Eigen::MatrixXcd(s_all.rightCols(phi.cols())));
  const Eigen::MatrixXcd p_phi = 0.5 * (phi + s_phi), q_phi = 0.5 * (phi - s_phi);
  // H^2 = I and 1/2 is real, so H(I - S)H / 2 = (I - HSH) / 2.
  const Eigen::MatrixXcd hqh_phi = 0.5 * (phi - hsh_phi), hph_phi = 0.5 * (phi + hsh_phi);

  AdjointResiduals out;
  out.degree = degree;
  out.s_residual = (weighted_pairing(curve, s_phi, phi) - weighted_pairing(curve, phi, -hsh_phi)).cwiseAbs().maxCoeff();
  out.p_residual = (weighted_pairing(curve, p_phi, phi) - weighted_pairing(curve, phi, hqh_phi)).cwiseAbs().maxCoeff();
  out.q_residual = (weighted_pairing(curve, q_phi, phi) - weighted_pairing(curve, phi, hph_phi)).cwiseAbs().maxCoeff();
  out.identity_residual = (p_phi + q_phi - phi).cwiseAbs().maxCoeff();
  out.gram_scale = weighted_pairing(curve, phi, phi).cwiseAbs().maxCoeff();
  return out;
}

struct ProjectionResiduals {
  double idempotent_p = 0.0;  ///< max |P^2 f - P f|
  double idempotent_q = 0.0;
  double annihilate_pq = 0.0;  ///< max |P Q f|
  double annihilate_qp = 0.0;
  double partition = 0.0;  ///< max |P f + Q f - f|
};

/// Projection laws evaluated on the columns of values.
inline ProjectionResiduals projection_residuals(const JordanCurve& curve, const Eigen::MatrixXcd& values,
                                                SioBackend backend = SioBackend::automatic) {
  const RieszProjections pq = riesz_projections(curve, values, backend);
  Eigen::MatrixXcd stacked(values.rows(), 2 * values.cols());
  stacked << pq.p, pq.q;
  const Eigen::MatrixXcd s = apply_S(curve, stacked, backend);
  const Eigen::MatrixXcd p_of = 0.5 * (stacked + s), q_of = 0.5 * (stacked - s);
  const auto c = values.cols();
  ProjectionResiduals out;
  out.idempotent_p = (p_of.leftCols(c) - pq.p).cwiseAbs().maxCoeff();
  out.idempotent_q = (q_of.rightCols(c) - pq.q).cwiseAbs().maxCoeff();
  out.annihilate_pq = p_of.rightCols(c).cwiseAbs().maxCoeff();
  out.annihilate_qp = q_of.leftCols(c).cwiseAbs().maxCoeff();
  out.partition = (pq.p + pq.q - values).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace hardy

#endif  // HARDY_CAUCHY_HPP
