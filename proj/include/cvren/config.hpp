#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvren/binning.hpp"
#include "cvren/report.hpp"
#include "cvren/states.hpp"

namespace cvren {

/// Invalid or inconsistent experiment configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Uniform grid {min, max, count} or an explicit mark list.
struct GridSpec {
  std::vector<double> marks;  // wins when non-empty
  double min = 0.0;
  double max = 0.0;
  int count = 0;

  BinGrid build() const;
  /// Uniform grid over [min, max] with bins of the given width.
  BinGrid build_with_width(double width) const;
};

struct SweepSpec {
  std::string variable;  // z | t | a | eta | bin_width
  double min = 0.0;
  double max = 0.0;
  int steps = 2;
};

struct ExperimentConfig {
  StateSpec state = CoherentProduct{{0.0, 0.0}};
  std::optional<QuadratureConfig> observable_config;
  std::optional<SweepSpec> sweep;
  std::vector<ConditionId> conditions;
  std::optional<GridSpec> r_grid;
  std::optional<GridSpec> s_grid;
  std::optional<double> t;
  std::optional<double> a;
  std::optional<double> eta;
  std::string output;

  /// Resolved observable configuration (documented defaults per family).
  QuadratureConfig resolved_config() const;
  double resolved_t() const;  // from `a` when given, else `t`, else 0
  void validate() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig load_config(const std::string& path);

}  // namespace cvren
