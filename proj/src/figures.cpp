#include "cvren/figures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cvren/criteria.hpp"
#include "cvren/entropy.hpp"
#include "cvren/index_algebra.hpp"

namespace cvren {

namespace {

// Static index partition; each worker writes disjoint slots, so the
// assembled output is independent of scheduling. The first worker
// exception is rethrown on the caller thread.
template <class Fn>
void parallel_for(int count, int threads, const Fn& fn) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    threads = std::min(threads, 8);
  }
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += threads) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

CurveTable cat_figure(int n, int threads) {
  const double c = 0.5;
  const double step = 0.02;
  const int points = 201;  // z in [0, 4]
  CurveTable table;
  table.x_label = "z";
  table.labels = {"Q_1", "Q_2", "Q_3", "Q_4", "Q_5"};
  table.x.resize(points);
  table.columns.assign(5, std::vector<double>(points));
  parallel_for(points, threads, [&](int i) {
    const double z = step * i;
    table.x[i] = z;
    const auto pair = marginal_pair(DephasedCat{n, z, c},
                                    QuadratureConfig::standard(n));
    for (int ai = 0; ai < 5; ++ai) {
      const double t = 1.0 - 1.0 / (ai + 1.0);
      const auto idx = EntropicIndexPair::from_order(t);
      table.columns[ai][i] = criterion_bound(n, t) -
                             renyi_differential(pair.u, idx.a) -
                             renyi_differential(pair.w, idx.b);
    }
  });
  return table;
}

CurveTable antisym_figure(int threads) {
  const double step = 0.01;
  const int points = 160;  // z in (0, 1.6]
  const std::vector<int> ns = {2, 4, 6, 8};
  CurveTable table;
  table.x_label = "z";
  table.labels = {"A_n2", "A_n4", "A_n6", "A_n8"};
  table.x.resize(points);
  table.columns.assign(ns.size(), std::vector<double>(points));
  parallel_for(points, threads, [&](int i) {
    const double z = step * (i + 1);
    table.x[i] = z;
    for (std::size_t c = 0; c < ns.size(); ++c)
      table.columns[c][i] = a_characteristic(AntisymCatPure{ns[c], z})(z);
  });
  return table;
}

}  // namespace

FigureId figure_from_string(const std::string& name) {
  if (name == "fig1") return FigureId::Fig1;
  if (name == "fig2") return FigureId::Fig2;
  if (name == "fig3") return FigureId::Fig3;
  throw std::invalid_argument("unknown figure '" + name + "' (fig1|fig2|fig3)");
}

std::string to_string(FigureId id) {
  switch (id) {
    case FigureId::Fig1: return "fig1";
    case FigureId::Fig2: return "fig2";
    case FigureId::Fig3: return "fig3";
  }
  return "fig?";
}

CurveTable compute_figure(FigureId id, int threads) {
  switch (id) {
    case FigureId::Fig1: return cat_figure(4, threads);
    case FigureId::Fig2: return cat_figure(10, threads);
    case FigureId::Fig3: return antisym_figure(threads);
  }
  throw std::logic_error("compute_figure: bad id");
}

double positivity_border(const std::vector<double>& x,
                         const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty())
    throw std::invalid_argument("positivity_border: size mismatch");
  for (std::size_t i = x.size(); i-- > 0;)
    if (y[i] <= 0.0) return x[i];
  return x.front();
}

namespace {

StateSpec override_z(const StateSpec& state, double z) {
  if (std::holds_alternative<CoherentProduct>(state)) {
    const int n = subsystem_count(state);
    return CoherentProduct{
        std::vector<std::complex<double>>(static_cast<std::size_t>(n), z)};
  }
  if (const auto* dc = std::get_if<DephasedCat>(&state))
    return DephasedCat{dc->n, z, dc->c};
  const auto& ac = std::get<AntisymCatPure>(state);
  return AntisymCatPure{ac.n, z};
}

std::vector<CriterionReport> evaluate_resolved(const ExperimentConfig& config,
                                               const StateSpec& state, double t,
                                               double eta,
                                               const std::optional<double>& width) {
  const QuadratureConfig obs = config.resolved_config();
  const int n = obs.n;
  const auto pair = marginal_pair(state, obs);

  bool needs_grids = false;
  for (ConditionId id : config.conditions)
    needs_grids = needs_grids || id == ConditionId::Prop2Hist ||
                  id == ConditionId::Prop2Binned ||
                  id == ConditionId::Prop2BinnedTwin ||
                  id == ConditionId::TsallisBinned ||
                  id == ConditionId::TsallisBinnedTwin ||
                  id == ConditionId::InefficiencyShannon;

  std::optional<BinGrid> r_grid, s_grid;
  std::optional<BinnedDistribution> p, q;
  if (needs_grids) {
    r_grid = width ? config.r_grid->build_with_width(*width)
                   : config.r_grid->build();
    s_grid = width ? config.s_grid->build_with_width(*width)
                   : config.s_grid->build();
    p = sample_into_bins(pair.w, *r_grid);
    q = sample_into_bins(pair.u, *s_grid);
  }

  std::vector<CriterionReport> reports;
  reports.reserve(config.conditions.size());
  for (ConditionId id : config.conditions) {
    switch (id) {
      case ConditionId::Prop1:
        reports.push_back(check_prop1(pair, n, t, false));
        break;
      case ConditionId::Prop1Twin:
        reports.push_back(check_prop1(pair, n, t, true));
        break;
      case ConditionId::ShannonDiff:
        reports.push_back(check_shannon_diff(pair, n));
        break;
      case ConditionId::Prop2Hist:
        reports.push_back(check_prop2(pair, *r_grid, *s_grid, n, t, true, false));
        break;
      case ConditionId::Prop2Binned:
        reports.push_back(check_prop2(pair, *r_grid, *s_grid, n, t, false, false));
        break;
      case ConditionId::Prop2BinnedTwin:
        reports.push_back(check_prop2(pair, *r_grid, *s_grid, n, t, false, true));
        break;
      case ConditionId::TsallisBinned:
        reports.push_back(check_tsallis(*p, *q, n, t, false));
        break;
      case ConditionId::TsallisBinnedTwin:
        reports.push_back(check_tsallis(*p, *q, n, t, true));
        break;
      case ConditionId::InefficiencyShannon:
        reports.push_back(check_inefficiency(*p, *q, n, eta));
        break;
      case ConditionId::PureState: {
        const double a = (t >= 1.0) ? std::numeric_limits<double>::infinity()
                                    : 1.0 / (1.0 - t);
        reports.push_back(check_pure(state, obs, a, n));
        break;
      }
      case ConditionId::HausdorffYoung:
        throw ConfigError("config: HausdorffYoung cannot be evaluated on states");
    }
  }
  return reports;
}

}  // namespace

std::vector<CriterionReport> evaluate_point(const ExperimentConfig& config) {
  config.validate();
  return evaluate_resolved(config, config.state, config.resolved_t(),
                           config.eta.value_or(1.0), std::nullopt);
}

SweepResult run_sweep(const ExperimentConfig& config, int threads) {
  config.validate();
  if (!config.sweep) throw ConfigError("config: sweep block required");
  const SweepSpec& sweep = *config.sweep;
  SweepResult result;
  result.variable = sweep.variable;
  result.values.resize(sweep.steps);
  result.reports.resize(sweep.steps);
  for (int i = 0; i < sweep.steps; ++i)
    result.values[i] =
        sweep.min + (sweep.max - sweep.min) * i / (sweep.steps - 1);

  parallel_for(sweep.steps, threads, [&](int i) {
    const double value = result.values[i];
    StateSpec state = config.state;
    double t = config.resolved_t();
    double eta = config.eta.value_or(1.0);
    std::optional<double> width;
    if (sweep.variable == "z")
      state = override_z(config.state, value);
    else if (sweep.variable == "t")
      t = value;
    else if (sweep.variable == "a")
      t = 1.0 - 1.0 / value;
    else if (sweep.variable == "eta")
      eta = value;
    else
      width = value;
    result.reports[i] = evaluate_resolved(config, state, t, eta, width);
  });
  return result;
}

}  // namespace cvren
