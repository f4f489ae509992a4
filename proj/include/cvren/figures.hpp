#pragma once

#include <string>
#include <vector>

#include "cvren/config.hpp"
#include "cvren/report.hpp"

namespace cvren {

enum class FigureId { Fig1, Fig2, Fig3 };

FigureId figure_from_string(const std::string& name);
std::string to_string(FigureId id);

/// One x column plus named y columns (columns[c][i] pairs with x[i]).
struct CurveTable {
  std::string x_label;
  std::vector<std::string> labels;
  std::vector<double> x;
  std::vector<std::vector<double>> columns;
};

/// Characteristic-quantity tables:
///  Fig1: Q_a(z), a = 1..5, z in [0, 4] step 0.02, n = 4, c = 1/2.
///  Fig2: the same at n = 10.
///  Fig3: A(z), n in {2, 4, 6, 8}, z in (0, 1.6] step 0.01.
/// Negative values are kept (the plot emitter clips, the CSV does not).
CurveTable compute_figure(FigureId id, int threads = 0);

/// Largest swept x with y <= 0, taken as the left border of the positive
/// region; returns x.front() when the curve is positive everywhere and
/// x.back() when it never turns positive.
double positivity_border(const std::vector<double>& x,
                         const std::vector<double>& y);

struct SweepResult {
  std::string variable;
  std::vector<double> values;
  std::vector<std::vector<CriterionReport>> reports;  // per sweep point
};

/// Evaluates the configured conditions at a single parameter point
/// (the `check` subcommand; also one sweep sample).
std::vector<CriterionReport> evaluate_point(const ExperimentConfig& config);

/// Full sweep; points are evaluated concurrently and assembled in sweep
/// order regardless of completion order.
SweepResult run_sweep(const ExperimentConfig& config, int threads = 0);

}  // namespace cvren
