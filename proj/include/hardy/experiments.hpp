#ifndef HARDY_EXPERIMENTS_HPP
#define HARDY_EXPERIMENTS_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hardy/cauchy.hpp"
#include "hardy/curve.hpp"
#include "hardy/error.hpp"
#include "hardy/exponent.hpp"
#include "hardy/lebesgue.hpp"
#include "hardy/presets.hpp"
#include "hardy/rng.hpp"
#include "hardy/toeplitz.hpp"

namespace hardy::experiments {

using json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "0.1.0";

struct ExperimentConfig {
  std::string curve = "circle";
  std::size_t nodes = 4096;
  std::string exponent = "2";
  std::string p = "4";
  std::string q = "2";
  std::string function = "one";
  std::string symbol;  ///< empty: the built-in dichotomy corpus
  std::vector<std::size_t> sizes{16, 32, 64, 128, 256};
  std::size_t aspect = 8;
  std::size_t basis = 16;
  std::size_t trials = 16;
  double offset = 1e-2;
  std::size_t epsilons = 513;
  std::size_t t_stride = 8;
  std::uint64_t seed = 1;
};

inline void to_json(json& j, const ExperimentConfig& c) {
  j = json{{"curve", c.curve},       {"nodes", c.nodes},       {"exponent", c.exponent}, {"p", c.p},
           {"q", c.q},               {"function", c.function}, {"symbol", c.symbol},     {"sizes", c.sizes},
           {"aspect", c.aspect},     {"basis", c.basis},       {"trials", c.trials},     {"offset", c.offset},
           {"epsilons", c.epsilons}, {"t_stride", c.t_stride}, {"seed", c.seed}};
}

namespace detail {

template <class T>
void read_field(const json& j, const char* key, T& target) {
  if (!j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("config field '") + key + "': " + e.what());
  }
}

}  // namespace detail

inline ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("config: top level must be a JSON object");
  static const std::vector<std::string> known{"curve", "nodes", "exponent", "p", "q", "function", "symbol", "sizes",
                                              "aspect", "basis", "trials", "offset", "epsilons", "t_stride", "seed"};
  for (const auto& item : j.items())
    if (std::find(known.begin(), known.end(), item.key()) == known.end())
      throw ValidationError("config: unknown field '" + item.key() + "'");
  ExperimentConfig c;
  detail::read_field(j, "curve", c.curve);
  detail::read_field(j, "nodes", c.nodes);
  detail::read_field(j, "exponent", c.exponent);
  detail::read_field(j, "p", c.p);
  detail::read_field(j, "q", c.q);
  detail::read_field(j, "function", c.function);
  detail::read_field(j, "symbol", c.symbol);
  detail::read_field(j, "sizes", c.sizes);
  detail::read_field(j, "aspect", c.aspect);
  detail::read_field(j, "basis", c.basis);
  detail::read_field(j, "trials", c.trials);
  detail::read_field(j, "offset", c.offset);
  detail::read_field(j, "epsilons", c.epsilons);
  detail::read_field(j, "t_stride", c.t_stride);
  detail::read_field(j, "seed", c.seed);
  return c;
}

/// Reads a JSON config; parse errors report line and column.
inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return config_from_json(json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ValidationError("config " + path + ":" + std::to_string(line) + ":" + std::to_string(column) +
                          ": JSON syntax error");
  }
}

inline void validate(const ExperimentConfig& c) {
  hardy::detail::require(c.nodes >= 8, "config field 'nodes': must be at least 8");
  hardy::detail::require(!c.sizes.empty(), "config field 'sizes': must not be empty");
  hardy::detail::require(c.offset > 0.0, "config field 'offset': must be positive");
  hardy::detail::require(c.epsilons >= 2, "config field 'epsilons': need at least 2");
  hardy::detail::require(c.t_stride >= 1, "config field 't_stride': must be positive");
  hardy::detail::require(c.trials >= 1, "config field 'trials': must be positive");
}

/// FNV-1a 64 of the canonical config dump.
inline std::string config_hash(const ExperimentConfig& c) {
  const std::string text = json(c).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Shortest round-tripping decimal; inf/nan spelled out.
inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

inline json number(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

struct ReportBundle {
  std::string command;
  json results = json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::map<std::string, std::string> series;  ///< plot-ready files by name
  json provenance = json::object();
  bool fault = false;
  std::string fault_reason;

  /// Records one operation invocation and returns its id for cross-reference.
  std::string record(const std::string& operation, json arguments) {
    auto& ops = provenance["operations"];
    if (ops.is_null()) ops = json::array();
    const std::string id = "op" + std::to_string(ops.size());
    ops.push_back(json{{"id", id}, {"operation", operation}, {"arguments", std::move(arguments)}});
    return id;
  }

  void flag_fault(const std::string& reason) {
    if (!fault) fault_reason = reason;
    fault = true;
  }

  json to_json() const {
    return json{{"command", command},
                {"results", results},
                {"fault", fault},
                {"fault_reason", fault_reason},
                {"provenance", provenance}};
  }

  std::string to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < csv_header.size(); ++i) out += (i ? "," : "") + csv_header[i];
    out += "\n";
    for (const auto& row : csv_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
      out += "\n";
    }
    return out;
  }
};

inline ReportBundle start_bundle(const std::string& command, const ExperimentConfig& c) {
  validate(c);
  ReportBundle b;
  b.command = command;
  b.provenance = json{{"tool", "hardylab"},
                      {"version", tool_version},
                      {"command", command},
                      {"config", c},
                      {"config_hash", config_hash(c)},
                      {"operations", json::array()}};
  return b;
}

inline json to_json(const NormResult& r) {
  return json{{"value", number(r.value)},
              {"modular_at_value", number(r.modular_at_value)},
              {"iterations", r.bisection_iterations},
              {"bracket", json::array({number(r.bracket.first), number(r.bracket.second)})},
              {"closed_form", r.closed_form},
              {"converged", r.converged}};
}

inline json to_json(const LogHolderReport& r) {
  return json{{"holds", r.holds},
              {"constant_estimate", number(r.constant_estimate)},
              {"worst_pair", json::array({r.worst_pair.first, r.worst_pair.second})},
              {"refinement_growth", number(r.refinement_growth)},
              {"p_minus", number(r.bounds.p_minus)},
              {"p_plus", number(r.bounds.p_plus)}};
}

/// Luxemburg norm of the configured function in the configured exponent.
inline ReportBundle run_norm(const ExperimentConfig& c) {
  ReportBundle b = start_bundle("norm", c);
  const JordanCurve curve = presets::make_curve(c.curve, c.nodes);
  const ExponentFunction p = presets::make_exponent(c.exponent, curve);
  Rng rng(c.seed);
  const SampledFunction f = presets::make_function(c.function, curve, rng);
  const NormResult r = luxemburg_norm(curve, f, p);
  const std::string id = b.record("luxemburg_norm", json{{"function", c.function}, {"exponent", c.exponent}});
  b.results = to_json(r);
  b.results["op"] = id;
  if (r.value > 0.0 && std::isfinite(r.value)) {
    const SampledFunction unit(f.values / r.value);
    const UnitBallCheck check = unit_ball_check(curve, unit, p, NodeSet::all(curve.size()));
    b.results["unit_ball_consistent"] = check.consistent;
    b.record("unit_ball_check", json{{"scaled_by", number(r.value)}});
    if (!check.consistent) b.flag_fault("modular and norm disagree on the unit ball");
  }
  if (!r.converged) b.flag_fault("bisection did not reach the modular tolerance");
  b.csv_header = {"value", "modular_at_value", "iterations", "bracket_lo", "bracket_hi"};
  b.csv_rows.push_back({format_number(r.value), format_number(r.modular_at_value), std::to_string(r.bisection_iterations),
                        format_number(r.bracket.first), format_number(r.bracket.second)});
  return b;
}

/// Projection, Plemelj and adjoint residuals of S on the configured curve,
/// plus the sweep ||Sf||_{p(.)} / ||f||_{p(.)} over random trig polynomials.
inline ReportBundle run_sio_check(const ExperimentConfig& c) {
  ReportBundle b = start_bundle("sio-check", c);
  const JordanCurve curve = presets::make_curve(c.curve, c.nodes);
  const ExponentFunction p = presets::make_exponent(c.exponent, curve);
  const bool exact = curve.kind() == CurveKind::unit_circle;
  Rng rng(c.seed);

  b.results["backend"] = exact ? "fourier" : "quadrature";
  b.results["quadrature_error_estimate"] = number(quadrature_error_estimate(curve));
  b.record("quadrature_error_estimate", json::object());

  Eigen::MatrixXcd corpus(static_cast<Eigen::Index>(curve.size()), static_cast<Eigen::Index>(c.trials));
  for (std::size_t t = 0; t < c.trials; ++t) corpus.col(static_cast<Eigen::Index>(t)) = presets::random_trig_polynomial(curve, rng.integer(1, 8), rng);
  const ProjectionResiduals proj = projection_residuals(curve, corpus);
  b.record("riesz_projections", json{{"functions", c.trials}});
  b.results["projections"] = json{{"P^2-P", number(proj.idempotent_p)},  {"Q^2-Q", number(proj.idempotent_q)},
                                  {"PQ", number(proj.annihilate_pq)},    {"QP", number(proj.annihilate_qp)},
                                  {"P+Q-I", number(proj.partition)}};

  const double rmin = curve.nodes().cwiseAbs().minCoeff(), rmax = curve.nodes().cwiseAbs().maxCoeff();
  const cplx z_in = std::polar(0.3 * rmin, 0.4), z_out = std::polar(1.8 * rmax, 1.1);
  const std::vector<double> offsets{c.offset, 0.8 * c.offset, 0.6 * c.offset, 0.4 * c.offset};
  const std::size_t stride = std::max<std::size_t>(1, curve.size() / 64);
  json plemelj = json::array();
  for (const auto& [label, pole] : std::vector<std::pair<std::string, cplx>>{{"pole_inside", z_in}, {"pole_outside", z_out}}) {
    Eigen::VectorXcd f(static_cast<Eigen::Index>(curve.size()));
    for (Eigen::Index j = 0; j < f.size(); ++j) f[j] = 1.0 / (curve.nodes()[j] - pole);
    const PlemeljResidual r = plemelj_residual(curve, f, offsets, stride);
    const std::string id = b.record("plemelj_residual", json{{"function", label}, {"offset", c.offset}});
    json per_offset = json::array();
    for (std::size_t k = 0; k < offsets.size(); ++k)
      per_offset.push_back(json{{"offset", offsets[k]}, {"interior", number(r.interior[k])}, {"exterior", number(r.exterior[k])}});
    plemelj.push_back(json{{"function", label},
                           {"op", id},
                           {"interior_limit", number(r.interior_limit)},
                           {"exterior_limit", number(r.exterior_limit)},
                           {"per_offset", per_offset}});
  }
  b.results["plemelj"] = plemelj;
  // the off-curve quadrature needs a few node spacings of clearance
  b.results["plemelj_under_resolved"] = offsets.back() < 3.0 * curve.node_spacing();

  const AdjointResiduals adj = adjoint_residuals(curve, static_cast<long>(c.basis));
  b.record("adjoint_residuals", json{{"degree", c.basis}});
  b.results["adjoint"] = json{{"S*+HSH", number(adj.s_residual)},
                              {"P*-HQH", number(adj.p_residual)},
                              {"Q*-HPH", number(adj.q_residual)},
                              {"P+Q-I", number(adj.identity_residual)},
                              {"degree", adj.degree}};

  const Eigen::MatrixXcd s_corpus = apply_S(curve, corpus);
  double worst = 0.0;
  std::string series = "trial,ratio\n";
  b.csv_header = {"trial", "norm_f", "norm_Sf", "ratio"};
  for (std::size_t t = 0; t < c.trials; ++t) {
    const auto k = static_cast<Eigen::Index>(t);
    const double nf = norm_value(curve, SampledFunction(corpus.col(k)), p);
    const double ns = norm_value(curve, SampledFunction(s_corpus.col(k)), p);
    const double ratio = ns / nf;
    worst = std::max(worst, ratio);
    b.csv_rows.push_back({std::to_string(t), format_number(nf), format_number(ns), format_number(ratio)});
    series += std::to_string(t) + "," + format_number(ratio) + "\n";
  }
  b.record("luxemburg_norm", json{{"exponent", c.exponent}, {"pairs", c.trials}});
  b.series["sio_ratio_series.csv"] = series;
  b.results["ratio_sweep"] = json{{"exponent", c.exponent}, {"max_ratio", number(worst)}, {"trials", c.trials}};

  const JordanCurve fine = presets::make_curve(c.curve, 2 * c.nodes);
  const LogHolderReport lh = log_holder_under_refinement(p, curve, presets::make_exponent(c.exponent, fine), fine);
  b.record("log_holder_constant", json{{"exponent", c.exponent}, {"nodes", json::array({c.nodes, 2 * c.nodes})}});
  b.results["log_holder"] = to_json(lh);

  if (exact) {
    const double worst_exact = std::max({proj.idempotent_p, proj.idempotent_q, proj.annihilate_pq, proj.annihilate_qp,
                                         adj.s_residual, adj.p_residual, adj.q_residual});
    if (worst_exact > 1e-10) b.flag_fault("exact backend residual above 1e-10");
  }
  return b;
}

/// Theorem value ||a||_{L^r}, optimization lower bound and witness value
/// for the multiplier norm of the configured function from L^p to L^q.
inline ReportBundle run_multiplier(const ExperimentConfig& c) {
  ReportBundle b = start_bundle("multiplier", c);
  const JordanCurve curve = presets::make_curve(c.curve, c.nodes);
  const ExponentFunction p = presets::make_exponent(c.p, curve);
  const ExponentFunction q = presets::make_exponent(c.q, curve);
  const DominanceReport dom = dominance_check(p, q);
  b.record("dominance_check", json{{"p", c.p}, {"q", c.q}});
  if (!dom.holds)
    throw ValidationError("multiplier: q > p at " + std::to_string(dom.violations.size()) + " nodes (first " +
                          std::to_string(dom.violations.front()) + ")");
  Rng rng(c.seed);
  const SampledFunction a = presets::make_function(c.function, curve, rng);
  const ExponentFunction r = conjugate_exponent_r(p, q);
  const InfinityPartition parts = partition_infinity_sets(p, q, r);
  b.record("partition_infinity_sets", json::object());
  const double theorem = multiplier_norm_via_theorem(curve, a, p, q);
  b.record("multiplier_norm_via_theorem", json{{"function", c.function}});
  const MultiplierLowerBound lower = multiplier_norm_lower(curve, a, p, q, c.trials, c.seed);
  b.record("multiplier_norm_lower", json{{"random_trials", c.trials}, {"seed", c.seed}});

  const bool constant = p.is_constant() && q.is_constant();
  const double allowance = constant ? 1.05 : 4.0;
  b.results = json{{"theorem_value", number(theorem)},
                   {"lower_bound", number(lower.value)},
                   {"best_trial", lower.best_trial},
                   {"witness_value", number(lower.witness_value)},
                   {"ratio", number(theorem > 0.0 ? lower.value / theorem : 0.0)},
                   {"equivalence_allowance", allowance},
                   {"partition", json{{"gamma1", parts.gamma1.size()}, {"gamma2", parts.gamma2.size()}, {"gamma3", parts.gamma3.size()}}},
                   {"trials", lower.trials}};
  if (lower.value > allowance * theorem) b.flag_fault("multiplier lower bound exceeds the theorem envelope");
  b.csv_header = {"theorem_value", "lower_bound", "witness_value", "ratio"};
  b.csv_rows.push_back({format_number(theorem), format_number(lower.value), format_number(lower.witness_value),
                        format_number(theorem > 0.0 ? lower.value / theorem : 0.0)});
  return b;
}

inline std::vector<std::string> dichotomy_corpus() {
  return {"t^-3", "t^-2", "t^-1", "t^0", "t^1", "t^2", "t^3", "cos", "1+cos2", "abs-pow:-0.25"};
}

/// Verdict object with the fixed schema {symbol, sizes, sigma_min_T, sigma_min_companion, verdict}.
inline json verdict_json(const DichotomyVerdict& v) {
  json sizes = json::array(), st = json::array(), sc = json::array();
  for (const auto& r : v.records) {
    sizes.push_back(r.n);
    st.push_back(number(r.sigma_min_t));
    sc.push_back(number(r.sigma_min_companion));
  }
  return json{{"symbol", v.symbol}, {"sizes", sizes}, {"sigma_min_T", st}, {"sigma_min_companion", sc},
              {"verdict", to_string(v.verdict)}};
}

/// Dichotomy probe for one symbol, or for the built-in corpus when no symbol is set.
inline ReportBundle run_dichotomy(const ExperimentConfig& c) {
  ReportBundle b = start_bundle("dichotomy", c);
  const JordanCurve probe_curve = make_unit_circle(64);
  const ExponentFunction p = presets::make_exponent(c.p, probe_curve);
  const ExponentFunction q = presets::make_exponent(c.q, probe_curve);
  const std::vector<std::string> symbols = c.symbol.empty() ? dichotomy_corpus() : std::vector<std::string>{c.symbol};
  json verdicts = json::array();
  std::map<std::string, int> tally;
  b.csv_header = {"symbol", "n", "sigma_min_T", "sigma_min_companion", "kernel_dim_T", "kernel_dim_companion"};
  for (const auto& spec : symbols) {
    const Symbol symbol = presets::make_symbol(spec);
    const DichotomyVerdict v = dichotomy_probe(symbol, p, q, c.sizes, c.aspect);
    b.record("dichotomy_probe", json{{"symbol", spec}, {"aspect", v.aspect}});
    verdicts.push_back(verdict_json(v));
    ++tally[to_string(v.verdict)];
    if (v.contradiction) ++tally["both-degenerate"];
    for (const auto& r : v.records)
      b.csv_rows.push_back({spec, std::to_string(r.n), format_number(r.sigma_min_t), format_number(r.sigma_min_companion),
                            std::to_string(r.kernel_dim_t), std::to_string(r.kernel_dim_companion)});
    if (v.contradiction) b.flag_fault("both T(a) and its companion look non-injective for " + spec);
  }
  if (symbols.size() == 1) {
    b.results = verdicts.front();
  } else {
    json summary = json::object();
    for (const auto& [k, count] : tally) summary[k] = count;
    b.results = json{{"verdicts", verdicts}, {"summary", summary}};
  }
  return b;
}

/// Carleson constant estimate with a grid-doubling refinement check.
inline ReportBundle run_carleson(const ExperimentConfig& c) {
  ReportBundle b = start_bundle("carleson", c);
  const JordanCurve curve = presets::make_curve(c.curve, c.nodes);
  const double diameter = curve.diameter();
  const CarlesonReport coarse = carleson_constant(curve, log_epsilon_grid(curve, c.epsilons, diameter), c.t_stride);
  b.record("carleson_constant", json{{"epsilons", c.epsilons}, {"t_stride", c.t_stride}});
  const std::size_t fine_stride = std::max<std::size_t>(1, c.t_stride / 2);
  const CarlesonReport fine = carleson_constant(curve, log_epsilon_grid(curve, 2 * c.epsilons - 1, diameter), fine_stride);
  b.record("carleson_constant", json{{"epsilons", 2 * c.epsilons - 1}, {"t_stride", fine_stride}});
  auto report_json = [](const CarlesonReport& r) {
    return json{{"constant_estimate", number(r.constant_estimate)},
                {"argmax_node", r.argmax_node},
                {"argmax_point", json::array({r.argmax_point.real(), r.argmax_point.imag()})},
                {"argmax_radius", number(r.argmax_radius)},
                {"grid", json{{"epsilon_count", r.epsilon_count}, {"epsilon_min", number(r.epsilon_min)},
                              {"epsilon_max", number(r.epsilon_max)}, {"t_stride", r.t_stride}, {"t_count", r.t_count}}}};
  };
  const double change = std::abs(fine.constant_estimate - coarse.constant_estimate) / coarse.constant_estimate;
  b.results = json{{"coarse", report_json(coarse)}, {"refined", report_json(fine)}, {"relative_change", number(change)}};
  if (fine.constant_estimate + 1e-12 < coarse.constant_estimate && fine_stride * 2 == c.t_stride)
    b.flag_fault("Carleson estimate decreased under grid refinement");
  b.csv_header = {"grid", "constant_estimate", "argmax_radius"};
  b.csv_rows.push_back({"coarse", format_number(coarse.constant_estimate), format_number(coarse.argmax_radius)});
  b.csv_rows.push_back({"refined", format_number(fine.constant_estimate), format_number(fine.argmax_radius)});
  return b;
}

/// Node table j, Re tau, Im tau, w, theta.
inline ReportBundle run_curve(const ExperimentConfig& c) {
  ReportBundle b = start_bundle("curve", c);
  const JordanCurve curve = presets::make_curve(c.curve, c.nodes);
  b.record("make_curve", json{{"curve", c.curve}, {"nodes", c.nodes}});
  b.results = json{{"curve", curve.name()}, {"nodes", curve.size()}, {"total_length", curve.total_length()},
                   {"tangent_residual", tangent_residual(curve)}};
  b.csv_header = {"j", "re", "im", "w", "theta"};
  for (std::size_t j = 0; j < curve.size(); ++j) {
    const auto k = static_cast<Eigen::Index>(j);
    b.csv_rows.push_back({std::to_string(j), format_number(curve.node(j).real()), format_number(curve.node(j).imag()),
                          format_number(curve.arc_weights()[k]), format_number(curve.tangent_angles()[k])});
  }
  return b;
}

}  // namespace hardy::experiments

#endif  // HARDY_EXPERIMENTS_HPP
