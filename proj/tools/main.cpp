#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "cvren/config.hpp"
#include "cvren/figures.hpp"
#include "cvren/io.hpp"
#include "cvren/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitConfigError = 2;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  return out;
}

int run_figure_command(const std::string& which, std::string out_prefix,
                       bool emit_svg, int threads) {
  const cvren::FigureId id = cvren::figure_from_string(which);
  if (out_prefix.empty()) out_prefix = cvren::to_string(id);
  const cvren::CurveTable table = cvren::compute_figure(id, threads);
  {
    auto csv = open_output(out_prefix + ".csv");
    cvren::write_curve_csv(table, csv);
  }
  std::cout << "wrote " << out_prefix << ".csv (" << table.x.size()
            << " rows, " << table.columns.size() << " curves)\n";
  if (emit_svg) {
    auto svg = open_output(out_prefix + ".svg");
    cvren::write_curve_svg(table, svg, /*clip_positive=*/true);
    std::cout << "wrote " << out_prefix << ".svg\n";
  }
  return kExitOk;
}

int run_sweep_command(const std::string& config_path, std::string out_prefix,
                      bool emit_svg, int threads) {
  const cvren::ExperimentConfig config = cvren::load_config(config_path);
  if (!config.sweep)
    throw cvren::ConfigError("config: 'sweep' block required for the sweep command");
  const cvren::SweepResult result = cvren::run_sweep(config, threads);
  if (out_prefix.empty())
    out_prefix = config.output.empty() ? "sweep" : config.output;
  {
    auto csv = open_output(out_prefix + ".csv");
    cvren::write_sweep_csv(result, csv);
  }
  std::cout << "wrote " << out_prefix << ".csv (" << result.values.size()
            << " sweep points)\n";
  if (emit_svg) {
    // Margin-per-condition curves for a quick visual pass.
    cvren::CurveTable table;
    table.x_label = result.variable;
    table.x = result.values;
    if (!result.reports.empty()) {
      for (const auto& report : result.reports.front())
        table.labels.push_back(std::string(cvren::to_string(report.condition)) +
                               "_margin");
      table.columns.assign(table.labels.size(),
                           std::vector<double>(result.values.size()));
      for (std::size_t i = 0; i < result.reports.size(); ++i)
        for (std::size_t c = 0; c < result.reports[i].size(); ++c)
          table.columns[c][i] = result.reports[i][c].margin;
    }
    auto svg = open_output(out_prefix + ".svg");
    cvren::write_curve_svg(table, svg, /*clip_positive=*/false);
    std::cout << "wrote " << out_prefix << ".svg\n";
  }
  return kExitOk;
}

int run_check_command(const std::string& config_path, const std::string& out_prefix) {
  const cvren::ExperimentConfig config = cvren::load_config(config_path);
  const auto reports = cvren::evaluate_point(config);
  for (const auto& report : reports) std::cout << report.line() << '\n';
  const std::string prefix =
      !out_prefix.empty() ? out_prefix : config.output;
  if (!prefix.empty()) {
    auto csv = open_output(prefix + ".csv");
    cvren::write_reports_csv(reports, csv);
    std::cout << "wrote " << prefix << ".csv\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic separability conditions for continuous-variable systems"};
  app.require_subcommand(1);

  std::string figure_name, config_path, out_prefix;
  bool emit_svg = false;
  int threads = 0;
  std::uint64_t seed = 20240101;

  auto* figure = app.add_subcommand("figure", "Reproduce a characteristic-quantity figure");
  figure->add_option("which", figure_name, "fig1|fig2|fig3")->required();
  figure->add_option("--out", out_prefix, "output file prefix");
  figure->add_flag("--svg", emit_svg, "also emit an SVG plot");
  figure->add_option("--threads", threads, "worker threads (0 = auto)");

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a JSON config");
  sweep->add_option("--config", config_path, "JSON config path")->required();
  sweep->add_option("--out", out_prefix, "output file prefix");
  sweep->add_flag("--svg", emit_svg, "also emit an SVG plot of margins");
  sweep->add_option("--threads", threads, "worker threads (0 = auto)");

  auto* check = app.add_subcommand("check", "Evaluate the configured conditions at one point");
  check->add_option("--config", config_path, "JSON config path")->required();
  check->add_option("--out", out_prefix, "output file prefix");

  auto* validate = app.add_subcommand("validate", "Run the mathematical self-validation suites");
  validate->add_option("--seed", seed, "fuzz seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (figure->parsed())
      return run_figure_command(figure_name, out_prefix, emit_svg, threads);
    if (sweep->parsed())
      return run_sweep_command(config_path, out_prefix, emit_svg, threads);
    if (check->parsed()) return run_check_command(config_path, out_prefix);
    if (validate->parsed())
      return cvren::run_validate(seed, std::cout) ? kExitOk
                                                  : kExitValidationFailure;
  } catch (const cvren::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidationFailure;
  }
  return kExitOk;
}
