#ifndef HARDY_PRESETS_HPP
#define HARDY_PRESETS_HPP

#include <cctype>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/curve.hpp"
#include "hardy/error.hpp"
#include "hardy/exponent.hpp"
#include "hardy/lebesgue.hpp"
#include "hardy/rng.hpp"
#include "hardy/toeplitz.hpp"

namespace hardy::presets {

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(current);
      current.clear();
    } else if (ch != ' ' && ch != '\t' && ch != '\r') {
      current.push_back(ch);
    }
  }
  out.push_back(current);
  return out;
}

inline double to_double(const std::string& text, const std::string& context) {
  if (text == "inf" || text == "Inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw ValidationError(context + ": cannot parse number '" + text + "'");
  return value;
}

inline long to_long(const std::string& text, const std::string& context) {
  char* end = nullptr;
  const long value = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size())
    throw ValidationError(context + ": cannot parse integer '" + text + "'");
  return value;
}

/// Name and comma-separated arguments of "name:a,b".
inline std::pair<std::string, std::vector<std::string>> parse_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, {}};
  return {spec.substr(0, colon), split(std::string_view(spec).substr(colon + 1), ',')};
}

inline void expect_arity(const std::vector<std::string>& args, std::size_t count, const std::string& spec) {
  if (args.size() != count)
    throw ValidationError("preset '" + spec + "' expects " + std::to_string(count) + " argument(s)");
}

/// Numeric rows of a CSV file; lines that do not start with a number are skipped.
inline std::vector<std::vector<std::string>> read_csv_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open CSV file '" + path + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const char c = line[first];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.')) continue;
    rows.push_back(split(line, ','));
  }
  return rows;
}

}  // namespace detail

/// Curve zoo: circle, ellipse:a,b, square, perturbed-circle:amp,freq.
inline JordanCurve make_curve(const std::string& spec, std::size_t n_nodes) {
  const auto [name, args] = detail::parse_spec(spec);
  if (name == "circle") {
    detail::expect_arity(args, 0, spec);
    return make_unit_circle(n_nodes);
  }
  if (name == "ellipse") {
    detail::expect_arity(args, 2, spec);
    return make_ellipse(detail::to_double(args[0], spec), detail::to_double(args[1], spec), n_nodes);
  }
  if (name == "square") {
    detail::expect_arity(args, 0, spec);
    return make_square(n_nodes);
  }
  if (name == "perturbed-circle") {
    detail::expect_arity(args, 2, spec);
    return make_perturbed_circle(detail::to_double(args[0], spec),
                                 static_cast<int>(detail::to_long(args[1], spec)), n_nodes);
  }
  throw ValidationError("unknown curve '" + spec + "' (circle, ellipse:a,b, square, perturbed-circle:amp,freq)");
}

/// Exponent presets, evaluated at the polar angle theta of each node:
///   <number> | const:v | inf | 2+abs(sin) | 2+sin | step:a,b | log-profile | csv:path
inline ExponentFunction make_exponent(const std::string& spec, const JordanCurve& curve) {
  const auto [name, args] = detail::parse_spec(spec);
  const auto n = curve.size();
  if (name == "const") {
    detail::expect_arity(args, 1, spec);
    return ExponentFunction(std::vector<double>(n, detail::to_double(args[0], spec)), spec);
  }
  if (name == "2+abs(sin)")
    return ExponentFunction::sample(curve, [](cplx, double th) { return 2.0 + std::abs(std::sin(th)); }, spec);
  if (name == "2+sin")
    return ExponentFunction::sample(curve, [](cplx, double th) { return std::max(1.0, 2.0 + std::sin(th)); }, spec);
  if (name == "step") {
    detail::expect_arity(args, 2, spec);
    const double a = detail::to_double(args[0], spec), b = detail::to_double(args[1], spec);
    return ExponentFunction::sample(curve, [=](cplx z, double) { return z.imag() >= 0.0 ? a : b; }, spec);
  }
  if (name == "log-profile")
    return ExponentFunction::sample(
        curve, [](cplx, double th) { return 2.0 + 1.0 / std::log(std::numbers::e + 1.0 / std::abs(th)); }, spec);
  if (name == "csv") {
    detail::expect_arity(args, 1, spec);
    std::vector<double> values(n, std::numeric_limits<double>::quiet_NaN());
    for (const auto& row : detail::read_csv_rows(args[0])) {
      if (row.size() < 2) throw ValidationError("exponent CSV rows must be 'j,p'");
      const long j = detail::to_long(row[0], args[0]);
      if (j < 0 || static_cast<std::size_t>(j) >= n) throw ValidationError("exponent CSV: node index out of range");
      values[static_cast<std::size_t>(j)] = detail::to_double(row[1], args[0]);
    }
    for (double v : values)
      if (std::isnan(v)) throw ValidationError("exponent CSV does not cover every node");
    return ExponentFunction(std::move(values), spec);
  }
  if (args.empty() && (name == "inf" || (!name.empty() && (std::isdigit(static_cast<unsigned char>(name[0])) || name[0] == '.'))))
    return ExponentFunction(std::vector<double>(n, detail::to_double(name, "exponent")), spec);
  throw ValidationError("unknown exponent '" + spec + "'");
}

/// Symbol presets: t^k | tbar | cos | 1+cos2 | abs-pow:beta | trig:k=re/im;...
/// | coeffs:path.csv (rows k,re,im). Zero is "zero".
inline Symbol make_symbol(const std::string& spec) {
  const auto [name, args] = detail::parse_spec(spec);
  if (name.rfind("t^", 0) == 0) return Symbol::monomial(detail::to_long(name.substr(2), spec));
  if (name == "t") return Symbol::monomial(1);
  if (name == "tbar") return Symbol::monomial(-1);
  if (name == "cos") return Symbol::cosine();
  if (name == "1+cos2") return Symbol::one_plus_cos_squared();
  if (name == "zero") return Symbol::trig_polynomial("zero", {{0, 0.0}});
  if (name == "abs-pow") {
    detail::expect_arity(args, 1, spec);
    return Symbol::abs_power(detail::to_double(args[0], spec));
  }
  if (name == "coeffs") {
    detail::expect_arity(args, 1, spec);
    std::map<long, cplx> coeffs;
    for (const auto& row : detail::read_csv_rows(args[0])) {
      if (row.size() < 2) throw ValidationError("coefficient CSV rows must be 'k,re[,im]'");
      const double im = row.size() > 2 ? detail::to_double(row[2], args[0]) : 0.0;
      coeffs[detail::to_long(row[0], args[0])] += cplx(detail::to_double(row[1], args[0]), im);
    }
    if (coeffs.empty()) throw ValidationError("coefficient CSV is empty");
    return Symbol::trig_polynomial(spec, std::move(coeffs));
  }
  throw ValidationError("unknown symbol '" + spec + "'");
}

/// A random trigonometric polynomial in the parameter angle.
inline Eigen::VectorXcd random_trig_polynomial(const JordanCurve& curve, long degree, Rng& rng) {
  Eigen::VectorXcd g = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(curve.size()));
  for (long m = -degree; m <= degree; ++m) {
    const cplx c = rng.complex_box();
    for (std::size_t j = 0; j < curve.size(); ++j)
      g[static_cast<Eigen::Index>(j)] += c * std::polar(1.0, static_cast<double>(m) * curve.parameter_angle(j));
  }
  return g;
}

/// Function presets: one | const:A | abs-cos | random-trig:deg | csv:path
/// (rows j,re[,im]) | any symbol preset sampled at the parameter angle.
inline SampledFunction make_function(const std::string& spec, const JordanCurve& curve, Rng& rng) {
  const auto [name, args] = detail::parse_spec(spec);
  const auto n = curve.size();
  if (name == "one") return SampledFunction::constant(n, 1.0);
  if (name == "const") {
    detail::expect_arity(args, 1, spec);
    return SampledFunction::constant(n, detail::to_double(args[0], spec));
  }
  if (name == "abs-cos") {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) v[static_cast<Eigen::Index>(j)] = std::abs(std::cos(curve.parameter_angle(j)));
    return SampledFunction(std::move(v));
  }
  if (name == "random-trig") {
    detail::expect_arity(args, 1, spec);
    return SampledFunction(random_trig_polynomial(curve, detail::to_long(args[0], spec), rng));
  }
  if (name == "csv") {
    detail::expect_arity(args, 1, spec);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    for (const auto& row : detail::read_csv_rows(args[0])) {
      if (row.size() < 2) throw ValidationError("function CSV rows must be 'j,re[,im]'");
      const long j = detail::to_long(row[0], args[0]);
      if (j < 0 || static_cast<std::size_t>(j) >= n) throw ValidationError("function CSV: node index out of range");
      v[j] = cplx(detail::to_double(row[1], args[0]), row.size() > 2 ? detail::to_double(row[2], args[0]) : 0.0);
    }
    return SampledFunction(std::move(v));
  }
  return SampledFunction(make_symbol(spec).sample(curve));
}

}  // namespace hardy::presets

#endif  // HARDY_PRESETS_HPP
