#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hardy/experiments.hpp"

using namespace hardy;
using namespace hardy::experiments;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.nodes = 256;
  c.trials = 4;
  c.basis = 8;
  c.sizes = {16, 32};
  c.epsilons = 17;
  c.t_stride = 8;
  return c;
}

std::string data(const char* name) { return std::string(HARDY_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Presets, CurvesAndErrors) {
  EXPECT_EQ(presets::make_curve("circle", 64).kind(), CurveKind::unit_circle);
  EXPECT_NEAR(presets::make_curve("square", 64).total_length(), 4.0, 1e-12);
  EXPECT_THROW(presets::make_curve("ellipse:1", 64), ValidationError);
  EXPECT_THROW(presets::make_curve("ellipse:1,x", 64), ValidationError);
  EXPECT_THROW(presets::make_curve("triangle", 64), ValidationError);
}

TEST(Presets, ExponentsAndSymbols) {
  const JordanCurve c = make_unit_circle(64);
  EXPECT_TRUE(presets::make_exponent("inf", c).is_infinite(3));
  EXPECT_EQ(presets::make_exponent("3.5", c)[0], 3.5);
  EXPECT_EQ(presets::make_exponent("const:2", c)[7], 2.0);
  EXPECT_THROW(presets::make_exponent("const:0.5", c), ValidationError);
  EXPECT_THROW(presets::make_exponent("wiggly", c), ValidationError);
  EXPECT_EQ(presets::make_symbol("t^-2").bandwidth(), 2);
  EXPECT_EQ(presets::make_symbol("tbar").name(), "t^-1");
  EXPECT_TRUE(presets::make_symbol("zero").is_zero());
  EXPECT_THROW(presets::make_symbol("t^x"), ValidationError);
  const Symbol from_file = presets::make_symbol("coeffs:" + data("coeffs_cos.csv"));
  EXPECT_NEAR(std::abs(from_file(0.3) - (1.0 + std::cos(0.3))), 0.0, 1e-15);
  EXPECT_THROW(presets::make_symbol("coeffs:" + data("missing.csv")), ValidationError);
}

TEST(Config, UnknownFieldAndSyntaxErrorsAreReported) {
  try {
    load_config(data("bad_field.json"));
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("exponnent"), std::string::npos);
  }
  try {
    load_config(data("syntax_error.json"));
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
  EXPECT_THROW(config_from_json(json{{"nodes", "many"}}), ValidationError);
  const ExperimentConfig c = load_config(data("norm_step.json"));
  EXPECT_EQ(c.exponent, "step:2,4");
  EXPECT_EQ(c.seed, 3u);
  EXPECT_EQ(c.nodes, 1024u);
}

TEST(Config, RoundTripsThroughJson) {
  ExperimentConfig c = small_config();
  c.symbol = "cos";
  const ExperimentConfig d = config_from_json(json(c));
  EXPECT_EQ(json(c).dump(), json(d).dump());
  EXPECT_EQ(config_hash(c), config_hash(d));
  EXPECT_EQ(d.seed, c.seed);
  ExperimentConfig e = c;
  e.seed = 99;
  EXPECT_NE(config_hash(c), config_hash(e));
}

TEST(Report, NumbersAreFormattedStably) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(std::strtod(format_number(std::numbers::pi).c_str(), nullptr), std::numbers::pi);
}

TEST(Experiments, NormMatchesClosedForm) {
  ExperimentConfig c = small_config();
  c.exponent = "3";
  c.function = "const:2";
  const ReportBundle b = run_norm(c);
  EXPECT_NEAR(b.results["value"].get<double>(), 2.0 * std::cbrt(2.0 * std::numbers::pi), 1e-10);
  EXPECT_FALSE(b.fault);
  c.exponent = "const:0.5";
  EXPECT_THROW(run_norm(c), ValidationError);
}

TEST(Experiments, RunsAreDeterministic) {
  ExperimentConfig c = small_config();
  c.exponent = "2+abs(sin)";
  c.function = "random-trig:5";
  c.seed = 42;
  EXPECT_EQ(run_norm(c).to_json().dump(), run_norm(c).to_json().dump());
  EXPECT_EQ(run_sio_check(c).to_json().dump(), run_sio_check(c).to_json().dump());
  ExperimentConfig d = c;
  d.seed = 43;
  EXPECT_NE(run_norm(c).to_json().dump(), run_norm(d).to_json().dump());
}

TEST(Experiments, ProvenanceListsEveryOperation) {
  const ReportBundle b = run_sio_check(small_config());
  const auto& ops = b.provenance["operations"];
  ASSERT_TRUE(ops.is_array());
  EXPECT_GE(ops.size(), 5u);
  for (const auto& p : b.results["plemelj"]) {
    const std::string id = p["op"];
    bool found = false;
    for (const auto& op : ops) found = found || op["id"] == id;
    EXPECT_TRUE(found) << id;
  }
  EXPECT_EQ(b.provenance["config_hash"], config_hash(small_config()));
}

TEST(Experiments, SioCheckOnCircleWithConstantTwo) {
  ExperimentConfig c = small_config();
  c.exponent = "2";
  c.trials = 12;
  const ReportBundle b = run_sio_check(c);
  EXPECT_FALSE(b.fault);
  EXPECT_LE(b.results["ratio_sweep"]["max_ratio"].get<double>(), 1.0 + 1e-10);
  EXPECT_TRUE(b.results["log_holder"]["holds"].get<bool>());
  EXPECT_EQ(b.csv_rows.size(), 12u);
  EXPECT_EQ(b.series.count("sio_ratio_series.csv"), 1u);
}

TEST(Experiments, SioCheckFlagsStepExponent) {
  ExperimentConfig c = small_config();
  c.exponent = "step:2,3";
  const ReportBundle b = run_sio_check(c);
  EXPECT_FALSE(b.results["log_holder"]["holds"].get<bool>());
  EXPECT_GT(b.results["ratio_sweep"]["max_ratio"].get<double>(), 0.0);
}

TEST(Experiments, SioCheckOnEllipse) {
  ExperimentConfig c = small_config();
  c.curve = "ellipse:1.5,1";
  c.nodes = 1024;
  c.exponent = "2+abs(sin)";
  const ReportBundle b = run_sio_check(c);
  EXPECT_EQ(b.results["backend"], "quadrature");
  EXPECT_LT(b.results["adjoint"]["S*+HSH"].get<double>(), 1e-3);
  EXPECT_LT(b.results["ratio_sweep"]["max_ratio"].get<double>(), 10.0);
}

TEST(Experiments, MultiplierConstantAndDegenerateCases) {
  ExperimentConfig c = small_config();
  c.p = "4";
  c.q = "2";
  c.function = "1+cos2";
  ReportBundle b = run_multiplier(c);
  const double theorem = b.results["theorem_value"].get<double>();
  EXPECT_NEAR(b.results["lower_bound"].get<double>(), theorem, 0.05 * theorem);
  EXPECT_FALSE(b.fault);
  c.p = "2";
  b = run_multiplier(c);
  EXPECT_NEAR(b.results["theorem_value"].get<double>(), 2.0, 1e-12);  // sup |1 + cos^2|
  c.q = "4";
  EXPECT_THROW(run_multiplier(c), ValidationError);
}

TEST(Experiments, DichotomySingleSymbolSchema) {
  ExperimentConfig c = small_config();
  c.symbol = "t^2";
  const ReportBundle b = run_dichotomy(c);
  std::vector<std::string> keys;
  for (const auto& item : b.results.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"symbol", "sizes", "sigma_min_T", "sigma_min_companion", "verdict"}));
  EXPECT_EQ(b.results["verdict"], "T-injective");
  c.symbol = "zero";
  EXPECT_THROW(run_dichotomy(c), ValidationError);
}

TEST(Experiments, DichotomyCorpusSummary) {
  const ReportBundle b = run_dichotomy(small_config());
  EXPECT_FALSE(b.fault);
  EXPECT_EQ(b.results["verdicts"].size(), dichotomy_corpus().size());
  EXPECT_EQ(b.results["summary"].count("both-degenerate"), 0u);
}

TEST(Experiments, CarlesonOnCircle) {
  ExperimentConfig c = small_config();
  c.nodes = 1024;
  const ReportBundle b = run_carleson(c);
  EXPECT_NEAR(b.results["refined"]["constant_estimate"].get<double>(), std::numbers::pi, 0.01 * std::numbers::pi);
  EXPECT_LT(b.results["relative_change"].get<double>(), 0.02);
}

TEST(Experiments, CurveTable) {
  ExperimentConfig c = small_config();
  c.curve = "square";
  c.nodes = 64;
  const ReportBundle b = run_curve(c);
  EXPECT_EQ(b.csv_rows.size(), 64u);
  EXPECT_EQ(b.csv_header.front(), "j");
  EXPECT_EQ(b.to_csv().substr(0, 15), "j,re,im,w,theta");
}
