#ifndef HARDY_FOURIER_HPP
#define HARDY_FOURIER_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include "hardy/error.hpp"

namespace hardy {

using cplx = std::complex<double>;

namespace fourier {

/// Signed frequency of FFT bin k for length n. The Nyquist bin of an even
/// length counts as negative.
inline long mode_of_bin(std::size_t k, std::size_t n) {
  return k < (n + 1) / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

inline std::size_t bin_of_mode(long m, std::size_t n) {
  long nn = static_cast<long>(n);
  return static_cast<std::size_t>(((m % nn) + nn) % nn);
}

/// c_k = (1/n) sum_j f_j e^{-2 pi i j k / n}, in FFT bin order.
inline Eigen::VectorXcd analyze(const Eigen::VectorXcd& samples) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd out(samples.size());
  fft.fwd(out, samples);
  return out / static_cast<double>(samples.size());
}

/// Inverse of analyze().
inline Eigen::VectorXcd synthesize(const Eigen::VectorXcd& coefficients) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd out(coefficients.size());
  fft.inv(out, coefficients);
  return out * static_cast<double>(coefficients.size());
}

}  // namespace fourier

/// Truncated Fourier series c_{-N..N} of a function sampled at the
/// equispaced parameter nodes s_j = j/n.
class FourierRepresentation {
 public:
  FourierRepresentation() = default;

  FourierRepresentation(long degree, std::vector<cplx> coefficients)
      : degree_(degree), coefficients_(std::move(coefficients)) {
    detail::require(degree >= 0, "FourierRepresentation: negative degree");
    detail::require(coefficients_.size() == static_cast<std::size_t>(2 * degree + 1),
                    "FourierRepresentation: coefficient count does not match degree");
  }

  static FourierRepresentation from_samples(const Eigen::VectorXcd& samples, long degree) {
    const auto n = static_cast<std::size_t>(samples.size());
    detail::require(degree >= 0 && n > static_cast<std::size_t>(2 * degree),
                    "FourierRepresentation: need more than 2N samples for degree N");
    Eigen::VectorXcd c = fourier::analyze(samples);
    std::vector<cplx> coeffs(2 * degree + 1);
    for (long m = -degree; m <= degree; ++m) coeffs[m + degree] = c[fourier::bin_of_mode(m, n)];
    return {degree, std::move(coeffs)};
  }

  long degree() const { return degree_; }

  cplx coefficient(long m) const {
    if (m < -degree_ || m > degree_) return {0.0, 0.0};
    return coefficients_[m + degree_];
  }

  const std::vector<cplx>& coefficients() const { return coefficients_; }

  Eigen::VectorXcd reconstruct(std::size_t n) const {
    detail::require(n > static_cast<std::size_t>(2 * degree_),
                    "FourierRepresentation: reconstruction grid too coarse");
    Eigen::VectorXcd bins = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    for (long m = -degree_; m <= degree_; ++m) bins[fourier::bin_of_mode(m, n)] = coefficient(m);
    return fourier::synthesize(bins);
  }

  /// Analytic part: modes m >= 0.
  FourierRepresentation analytic_part() const {
    auto c = coefficients_;
    for (long m = -degree_; m < 0; ++m) c[m + degree_] = 0.0;
    return {degree_, std::move(c)};
  }

  /// Anti-analytic part: modes m < 0.
  FourierRepresentation antianalytic_part() const {
    auto c = coefficients_;
    for (long m = 0; m <= degree_; ++m) c[m + degree_] = 0.0;
    return {degree_, std::move(c)};
  }

 private:
  long degree_ = 0;
  std::vector<cplx> coefficients_{cplx{}};
};

}  // namespace hardy

#endif  // HARDY_FOURIER_HPP
