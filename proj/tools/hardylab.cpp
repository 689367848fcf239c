// hardylab: command-line driver for the experiments in hardy/experiments.hpp.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "hardy/experiments.hpp"

namespace fs = std::filesystem;
using hardy::experiments::ExperimentConfig;
using hardy::experiments::ReportBundle;

namespace {

constexpr int exit_validation = 2;
constexpr int exit_fault = 3;

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hardy::ValidationError("cannot write '" + path.string() + "'");
  out << text;
}

/// A path ending in .json receives the results object (provenance goes next
/// to it); anything else is a directory that receives every artifact.
void emit(const ReportBundle& bundle, const std::string& out, const std::string& format) {
  if (out.empty()) {
    std::cout << (format == "csv" ? bundle.to_csv() : bundle.to_json().dump(2) + "\n");
    return;
  }
  const fs::path target(out);
  if (target.extension() == ".json") {
    write_file(target, bundle.results.dump(2) + "\n");
    fs::path prov = target;
    prov.replace_extension(".provenance.json");
    write_file(prov, hardy::experiments::json{{"provenance", bundle.provenance}, {"fault", bundle.fault},
                                              {"fault_reason", bundle.fault_reason}}.dump(2) + "\n");
    return;
  }
  write_file(target / (bundle.command + ".json"), bundle.to_json().dump(2) + "\n");
  write_file(target / (bundle.command + ".csv"), bundle.to_csv());
  for (const auto& [name, text] : bundle.series) write_file(target / name, text);
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw hardy::ValidationError("--sizes: bad entry '" + item + "'");
    }
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cauchy singular integral and Toeplitz experiments in variable Lebesgue spaces on Jordan curves"};
  app.require_subcommand(1);

  std::string config_path, out, format = "json";
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "JSON experiment config")->check(CLI::ExistingFile);
  app.add_option("--out", out, "output directory (or a .json file for the results object)");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "csv"}));

  // Per-subcommand overrides of config fields; unset options leave the config alone.
  struct Overrides {
    std::optional<std::string> curve, exponent, p, q, function, symbol, sizes;
    std::optional<std::size_t> nodes, aspect, basis, trials, epsilons, t_stride;
    std::optional<double> offset;
  } ov;

  auto common = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--curve", ov.curve, "circle | ellipse:a,b | square | perturbed-circle:amp,freq");
    sub->add_option("--nodes", ov.nodes, "quadrature nodes on the curve");
  };

  auto* norm = app.add_subcommand("norm", "Luxemburg norm of a sampled function");
  common(norm);
  norm->add_option("--exponent", ov.exponent, "exponent preset");
  norm->add_option("--function", ov.function, "function preset");

  auto* mult = app.add_subcommand("multiplier", "multiplier norm: theorem value, lower bound and witness");
  common(mult);
  mult->add_option("--p", ov.p, "source exponent");
  mult->add_option("--q", ov.q, "target exponent");
  mult->add_option("--function", ov.function, "multiplier preset");
  mult->add_option("--trials", ov.trials, "random trial functions");

  auto* sio = app.add_subcommand("sio-check", "projection, Plemelj and adjoint residuals of S");
  common(sio);
  sio->add_option("--exponent", ov.exponent, "exponent for the ratio sweep");
  sio->add_option("--basis", ov.basis, "mode degree for the adjoint test");
  sio->add_option("--trials", ov.trials, "random trig polynomials");
  sio->add_option("--offset", ov.offset, "largest off-curve offset for the Plemelj test");

  auto* dich = app.add_subcommand("dichotomy", "kernel/dense-image probe via finite sections");
  dich->fallthrough();
  dich->add_option("--symbol", ov.symbol, "symbol preset or coeffs:path (default: built-in corpus)");
  dich->add_option("--p", ov.p, "source exponent");
  dich->add_option("--q", ov.q, "target exponent");
  dich->add_option("--sizes", ov.sizes, "comma-separated section sizes");
  dich->add_option("--aspect", ov.aspect, "extra rows of the tall sections");

  auto* carl = app.add_subcommand("carleson", "Carleson constant estimate with refinement");
  common(carl);
  carl->add_option("--epsilons", ov.epsilons, "radii in the log grid");
  carl->add_option("--t-stride", ov.t_stride, "stride over centre nodes");

  auto* curve = app.add_subcommand("curve", "node table of a curve");
  common(curve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_validation;
  }

  try {
    ExperimentConfig config = config_path.empty() ? ExperimentConfig{} : hardy::experiments::load_config(config_path);
    if (seed) config.seed = *seed;
    if (ov.curve) config.curve = *ov.curve;
    if (ov.nodes) config.nodes = *ov.nodes;
    if (ov.exponent) config.exponent = *ov.exponent;
    if (ov.p) config.p = *ov.p;
    if (ov.q) config.q = *ov.q;
    if (ov.function) config.function = *ov.function;
    if (ov.symbol) config.symbol = *ov.symbol;
    if (ov.sizes) config.sizes = parse_sizes(*ov.sizes);
    if (ov.aspect) config.aspect = *ov.aspect;
    if (ov.basis) config.basis = *ov.basis;
    if (ov.trials) config.trials = *ov.trials;
    if (ov.epsilons) config.epsilons = *ov.epsilons;
    if (ov.t_stride) config.t_stride = *ov.t_stride;
    if (ov.offset) config.offset = *ov.offset;

    namespace ex = hardy::experiments;
    ReportBundle bundle;
    if (*norm) bundle = ex::run_norm(config);
    else if (*mult) bundle = ex::run_multiplier(config);
    else if (*sio) bundle = ex::run_sio_check(config);
    else if (*dich) bundle = ex::run_dichotomy(config);
    else if (*carl) bundle = ex::run_carleson(config);
    else bundle = ex::run_curve(config);

    emit(bundle, out, format);
    if (bundle.fault) {
      std::cerr << "numerical fault: " << bundle.fault_reason << "\n";
      return exit_fault;
    }
    return 0;
  } catch (const hardy::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_validation;
  } catch (const hardy::NumericalFault& e) {
    std::cerr << "numerical fault: " << e.what() << "\n";
    return exit_fault;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fault;
  }
}
