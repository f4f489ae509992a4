#include "cvren/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace cvren {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError("config: field '" + field + "': " + what);
}

double require_number(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number())
    fail(field, "expected a number");
  return j[field].get<double>();
}

int require_int(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    fail(field, "expected an integer");
  return j[field].get<int>();
}

std::vector<std::complex<double>> parse_amplitudes(const json& j) {
  if (!j.is_array() || j.empty()) fail("state.z", "expected a non-empty array");
  std::vector<std::complex<double>> out;
  for (const auto& item : j) {
    if (item.is_number()) {
      out.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_object()) {
      out.emplace_back(item.value("re", 0.0), item.value("im", 0.0));
    } else {
      fail("state.z", "entries must be numbers or {re, im} objects");
    }
  }
  return out;
}

json amplitudes_to_json(const std::vector<std::complex<double>>& amps) {
  json arr = json::array();
  for (const auto& z : amps) {
    if (z.imag() == 0.0)
      arr.push_back(z.real());
    else
      arr.push_back(json{{"re", z.real()}, {"im", z.imag()}});
  }
  return arr;
}

StateSpec parse_state(const json& j) {
  if (!j.is_object() || !j.contains("variant"))
    fail("state", "expected an object with a 'variant' key");
  const std::string variant = j["variant"].get<std::string>();
  if (variant == "CoherentProduct") {
    if (!j.contains("z")) fail("state.z", "missing");
    return CoherentProduct{parse_amplitudes(j["z"])};
  }
  if (variant == "DephasedCat")
    return DephasedCat{require_int(j, "n"), require_number(j, "z"),
                       require_number(j, "c")};
  if (variant == "AntisymCatPure")
    return AntisymCatPure{require_int(j, "n"), require_number(j, "z")};
  fail("state.variant", "unknown variant '" + variant + "'");
}

json state_to_json(const StateSpec& state) {
  json j;
  if (const auto* cp = std::get_if<CoherentProduct>(&state)) {
    j["variant"] = "CoherentProduct";
    j["z"] = amplitudes_to_json(cp->amplitudes);
  } else if (const auto* dc = std::get_if<DephasedCat>(&state)) {
    j["variant"] = "DephasedCat";
    j["n"] = dc->n;
    j["z"] = dc->z;
    j["c"] = dc->c;
  } else {
    const auto& ac = std::get<AntisymCatPure>(state);
    j["variant"] = "AntisymCatPure";
    j["n"] = ac.n;
    j["z"] = ac.z;
  }
  return j;
}

QuadratureConfig parse_observable_config(const json& j) {
  QuadratureConfig cfg;
  cfg.n = require_int(j, "n");
  if (j.contains("thetas"))
    cfg.thetas = j["thetas"].get<std::vector<double>>();
  else
    cfg.thetas.assign(cfg.n, 0.0);
  if (j.contains("r_signs"))
    cfg.r_signs = j["r_signs"].get<std::vector<int>>();
  if (j.contains("s_signs"))
    cfg.s_signs = j["s_signs"].get<std::vector<int>>();
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    fail("config", e.what());
  }
  return cfg;
}

json observable_config_to_json(const QuadratureConfig& cfg) {
  return json{{"n", cfg.n},
              {"thetas", cfg.thetas},
              {"r_signs", cfg.r_signs},
              {"s_signs", cfg.s_signs}};
}

GridSpec parse_grid(const json& j, const std::string& field) {
  GridSpec spec;
  if (j.contains("marks")) {
    spec.marks = j["marks"].get<std::vector<double>>();
    if (spec.marks.size() < 2) fail(field, "mark list needs at least two entries");
    return spec;
  }
  spec.min = require_number(j, "min");
  spec.max = require_number(j, "max");
  spec.count = j.value("count", 0);
  if (spec.max <= spec.min) fail(field, "max must exceed min");
  return spec;
}

json grid_to_json(const GridSpec& spec) {
  if (!spec.marks.empty()) return json{{"marks", spec.marks}};
  json j{{"min", spec.min}, {"max", spec.max}};
  if (spec.count > 0) j["count"] = spec.count;
  return j;
}

}  // namespace

BinGrid GridSpec::build() const {
  if (!marks.empty()) return BinGrid(marks);
  if (count < 1)
    throw ConfigError("config: grid needs 'count' (or a bin_width sweep)");
  return BinGrid::uniform(min, max, count);
}

BinGrid GridSpec::build_with_width(double width) const {
  if (!marks.empty())
    throw ConfigError("config: bin_width sweep requires {min, max} grids");
  const int bins = std::max(1, static_cast<int>(std::ceil((max - min) / width)));
  return BinGrid::uniform(min, min + bins * width, bins);
}

QuadratureConfig ExperimentConfig::resolved_config() const {
  if (observable_config) return *observable_config;
  const int n = subsystem_count(state);
  // Antisymmetric pure states use the all-plus combination; the cat and
  // coherent families the commuting alternating/all-plus pair.
  if (std::holds_alternative<AntisymCatPure>(state))
    return QuadratureConfig::all_plus(n);
  return QuadratureConfig::standard(n);
}

double ExperimentConfig::resolved_t() const {
  if (a) {
    if (*a < 1.0) throw ConfigError("config: field 'a': must be >= 1");
    return 1.0 - 1.0 / *a;
  }
  if (t) {
    if (*t < 0.0 || *t > 1.0)
      throw ConfigError("config: field 't': must lie in [0,1]");
    return *t;
  }
  return 0.0;
}

void ExperimentConfig::validate() const {
  try {
    validate_state(state);
  } catch (const std::invalid_argument& e) {
    fail("state", e.what());
  }
  const int n = subsystem_count(state);
  if (observable_config && observable_config->n != n)
    fail("config.n", "does not match the state dimension");
  if (conditions.empty()) fail("conditions", "at least one condition required");
  (void)resolved_t();
  if (eta && (*eta < 0.0 || *eta > 1.0)) fail("eta", "must lie in [0,1]");
  const bool needs_grids = [&] {
    for (ConditionId id : conditions) {
      switch (id) {
        case ConditionId::Prop2Hist:
        case ConditionId::Prop2Binned:
        case ConditionId::Prop2BinnedTwin:
        case ConditionId::TsallisBinned:
        case ConditionId::TsallisBinnedTwin:
        case ConditionId::InefficiencyShannon:
          return true;
        default:
          break;
      }
    }
    return false;
  }();
  const bool width_swept = sweep && sweep->variable == "bin_width";
  if (needs_grids && !(r_grid && s_grid))
    fail("grids", "binned conditions require 'r' and 's' grid specs");
  if (needs_grids && !width_swept) {
    for (const GridSpec* g : {&*r_grid, &*s_grid})
      if (g->marks.empty() && g->count < 1)
        fail("grids", "uniform grids need 'count' unless bin_width is swept");
  }
  for (ConditionId id : conditions) {
    if (id == ConditionId::HausdorffYoung)
      fail("conditions", "HausdorffYoung is a self-test, not a state condition");
    if (id == ConditionId::PureState && !is_pure(state))
      fail("conditions", "PureState requires a pure state");
  }
  if (sweep) {
    static const std::vector<std::string> variables = {"z", "t", "a", "eta",
                                                       "bin_width"};
    if (std::find(variables.begin(), variables.end(), sweep->variable) ==
        variables.end())
      fail("sweep.variable", "must be one of z, t, a, eta, bin_width");
    if (sweep->steps < 2) fail("sweep.steps", "need at least two steps");
    if (!(sweep->max > sweep->min)) fail("sweep", "max must exceed min");
    if (sweep->variable == "z" &&
        std::holds_alternative<AntisymCatPure>(state) && sweep->min <= 0.0)
      fail("sweep", "AntisymCatPure requires z > 0 over the whole sweep");
    if (sweep->variable == "t" && (sweep->min < 0.0 || sweep->max > 1.0))
      fail("sweep", "t must stay in [0,1]");
    if (sweep->variable == "a" && sweep->min < 1.0)
      fail("sweep", "a must stay >= 1");
    if (sweep->variable == "eta" && (sweep->min < 0.0 || sweep->max > 1.0))
      fail("sweep", "eta must stay in [0,1]");
    if (sweep->variable == "bin_width" && sweep->min <= 0.0)
      fail("sweep", "bin widths must be positive");
    const bool order_reaches_one =
        (sweep->variable == "t" && sweep->max >= 1.0);
    if (order_reaches_one) {
      for (ConditionId id : conditions)
        if (id == ConditionId::TsallisBinned ||
            id == ConditionId::TsallisBinnedTwin ||
            id == ConditionId::PureState)
          fail("sweep", "t = 1 is not supported for Tsallis or PureState");
    }
  }
  if (t && *t >= 1.0) {
    for (ConditionId id : conditions)
      if (id == ConditionId::TsallisBinned ||
          id == ConditionId::TsallisBinnedTwin || id == ConditionId::PureState)
        fail("t", "t = 1 is not supported for Tsallis or PureState");
  }
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  ExperimentConfig config;
  if (!j.contains("state")) throw ConfigError("config: field 'state': missing");
  config.state = parse_state(j["state"]);
  if (j.contains("config"))
    config.observable_config = parse_observable_config(j["config"]);
  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    SweepSpec sweep;
    if (!s.contains("variable") || !s["variable"].is_string())
      fail("sweep.variable", "expected a string");
    sweep.variable = s["variable"].get<std::string>();
    sweep.min = require_number(s, "min");
    sweep.max = require_number(s, "max");
    sweep.steps = require_int(s, "steps");
    config.sweep = sweep;
  }
  if (!j.contains("conditions") || !j["conditions"].is_array())
    fail("conditions", "expected an array of condition ids");
  for (const auto& c : j["conditions"]) {
    try {
      config.conditions.push_back(condition_from_string(c.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      fail("conditions", e.what());
    }
  }
  if (j.contains("grids")) {
    const auto& g = j["grids"];
    if (g.contains("r")) config.r_grid = parse_grid(g["r"], "grids.r");
    if (g.contains("s")) config.s_grid = parse_grid(g["s"], "grids.s");
  }
  if (j.contains("t")) config.t = require_number(j, "t");
  if (j.contains("a")) config.a = require_number(j, "a");
  if (j.contains("eta")) config.eta = require_number(j, "eta");
  config.output = j.value("output", std::string{});
  config.validate();
  return config;
}

json config_to_json(const ExperimentConfig& config) {
  json j;
  j["state"] = state_to_json(config.state);
  if (config.observable_config)
    j["config"] = observable_config_to_json(*config.observable_config);
  if (config.sweep)
    j["sweep"] = json{{"variable", config.sweep->variable},
                      {"min", config.sweep->min},
                      {"max", config.sweep->max},
                      {"steps", config.sweep->steps}};
  json conditions = json::array();
  for (ConditionId id : config.conditions)
    conditions.push_back(std::string(to_string(id)));
  j["conditions"] = conditions;
  if (config.r_grid || config.s_grid) {
    json grids;
    if (config.r_grid) grids["r"] = grid_to_json(*config.r_grid);
    if (config.s_grid) grids["s"] = grid_to_json(*config.s_grid);
    j["grids"] = grids;
  }
  if (config.t) j["t"] = *config.t;
  if (config.a) j["a"] = *config.a;
  if (config.eta) j["eta"] = *config.eta;
  if (!config.output.empty()) j["output"] = config.output;
  return j;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config: JSON parse error in '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

}  // namespace cvren
