#include "cvren/criteria.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cvren/entropy.hpp"
#include "cvren/index_algebra.hpp"

namespace cvren {

namespace {

CriterionParams base_params(int n, double t, const EntropicIndexPair& pair,
                            bool swapped) {
  CriterionParams params;
  params.n = n;
  params.t = t;
  params.a = pair.a.is_infinity() ? std::numeric_limits<double>::infinity()
                                  : pair.a.value();
  params.b = pair.b;
  params.swapped = swapped;
  return params;
}

}  // namespace

CriterionReport check_prop1(const MarginalPair& pair, int n, double t,
                            bool swapped) {
  const auto idx = EntropicIndexPair::from_order(t);
  const AnalyticDensity& first = swapped ? pair.u : pair.w;
  const AnalyticDensity& second = swapped ? pair.w : pair.u;
  const double lhs =
      renyi_differential(first, idx.a) + renyi_differential(second, idx.b);
  return CriterionReport::make(swapped ? ConditionId::Prop1Twin : ConditionId::Prop1,
                               lhs, criterion_bound(n, t),
                               base_params(n, t, idx, swapped));
}

CriterionReport check_shannon_diff(const MarginalPair& pair, int n) {
  const double lhs = shannon_differential(pair.w) + shannon_differential(pair.u);
  const auto idx = EntropicIndexPair::from_order(0.0);
  return CriterionReport::make(ConditionId::ShannonDiff, lhs,
                               criterion_bound(n, 0.0),
                               base_params(n, 0.0, idx, false));
}

CriterionReport check_prop2(const MarginalPair& pair, const BinGrid& r_grid,
                            const BinGrid& s_grid, int n, double t,
                            bool use_histogram, bool swapped) {
  const auto idx = EntropicIndexPair::from_order(t);
  const BinnedDistribution p = sample_into_bins(pair.w, r_grid);
  const BinnedDistribution q = sample_into_bins(pair.u, s_grid);
  CriterionParams params = base_params(n, t, idx, swapped);
  params.delta_zeta = r_grid.max_width();
  params.delta_xi = s_grid.max_width();
  if (use_histogram) {
    const HistogramDensity wh = histogram_density(p);
    const HistogramDensity uh = histogram_density(q);
    const HistogramDensity& first = swapped ? uh : wh;
    const HistogramDensity& second = swapped ? wh : uh;
    const double lhs =
        renyi_differential(first, idx.a) + renyi_differential(second, idx.b);
    return CriterionReport::make(ConditionId::Prop2Hist, lhs,
                                 criterion_bound(n, t), params);
  }
  const DiscreteDistribution& first =
      swapped ? q.probabilities : p.probabilities;
  const DiscreteDistribution& second =
      swapped ? p.probabilities : q.probabilities;
  const double lhs = renyi_discrete(first, idx.a) + renyi_discrete(second, idx.b);
  const double rhs = criterion_bound(n, t) -
                     std::log(r_grid.max_width() * s_grid.max_width());
  return CriterionReport::make(
      swapped ? ConditionId::Prop2BinnedTwin : ConditionId::Prop2Binned, lhs,
      rhs, params);
}

CriterionReport check_tsallis(const BinnedDistribution& p,
                              const BinnedDistribution& q, int n, double t,
                              bool swapped) {
  const auto idx = EntropicIndexPair::from_order(t);
  if (idx.a.is_infinity())
    throw std::domain_error("check_tsallis: t = 1 not supported (a infinite)");
  const double a = idx.a.value();
  const DiscreteDistribution& first =
      swapped ? q.probabilities : p.probabilities;
  const DiscreteDistribution& second =
      swapped ? p.probabilities : q.probabilities;
  const double lhs = tsallis_discrete(first, a) + tsallis_discrete(second, idx.b);
  const double argument = static_cast<double>(n) * big_k(t) * std::numbers::pi /
                          (p.grid.max_width() * q.grid.max_width());
  CriterionParams params = base_params(n, t, idx, swapped);
  params.delta_zeta = p.grid.max_width();
  params.delta_xi = q.grid.max_width();
  return CriterionReport::make(
      swapped ? ConditionId::TsallisBinnedTwin : ConditionId::TsallisBinned,
      lhs, alpha_log(argument, a), params);
}

CriterionReport check_inefficiency(const BinnedDistribution& p,
                                   const BinnedDistribution& q, int n,
                                   double eta) {
  const DiscreteDistribution p_eta = apply_inefficiency(p.probabilities, eta);
  const DiscreteDistribution q_eta = apply_inefficiency(q.probabilities, eta);
  const double lhs = shannon_discrete(p_eta) + shannon_discrete(q_eta);
  const double rhs =
      eta * (criterion_bound(n, 0.0) -
             std::log(p.grid.max_width() * q.grid.max_width())) +
      2.0 * binary_entropy(eta);
  const auto idx = EntropicIndexPair::from_order(0.0);
  CriterionParams params = base_params(n, 0.0, idx, false);
  params.eta = eta;
  params.delta_zeta = p.grid.max_width();
  params.delta_xi = q.grid.max_width();
  return CriterionReport::make(ConditionId::InefficiencyShannon, lhs, rhs,
                               params);
}

double pure_state_constant(int n, double t) {
  if (n < 2) throw std::domain_error("pure_state_constant: n must be >= 2");
  if (t < 0.0 || t >= 1.0)
    throw std::domain_error("pure_state_constant: t must lie in [0,1)");
  const double log_n = std::log(static_cast<double>(n));
  if (t < 1e-6) {
    // Series of (1/t) ln(C(a)/C(alpha)^n) around t = 0.
    return 0.5 * log_n + 0.25 * t * (1.0 / n - 1.0);
  }
  const auto pair = EntropicIndexPair::from_order(t);
  const auto subs = SubsystemIndexSet::from_order(n, t);
  const double log_ca = log_young_c(pair.a.value(), conjugate_index(pair.a.value()));
  const double log_calpha = log_young_c(subs.alpha, subs.alpha_conj);
  return (log_ca - n * log_calpha) / t;
}

CriterionReport check_pure(const StateSpec& state, const QuadratureConfig& config,
                           double a, int n) {
  if (!is_pure(state))
    throw std::invalid_argument("check_pure: state must be pure");
  if (subsystem_count(state) != n || config.n != n)
    throw std::invalid_argument("check_pure: dimension mismatch");
  if (!(a >= 1.0)) throw std::domain_error("check_pure: a must be >= 1");
  const double t = 1.0 - 1.0 / a;
  const auto subs = SubsystemIndexSet::from_order(n, t);
  const auto pair = marginal_pair(state, config);
  const auto locals = local_reduced_densities(state, config);
  double local_sum = 0.0;
  for (const auto& lr : locals) local_sum += renyi_differential(lr.w, subs.alpha);
  const double lhs = renyi_differential(pair.w, a);
  const double rhs = pure_state_constant(n, t) + local_sum / n;
  const auto idx = EntropicIndexPair::from_order(t);
  return CriterionReport::make(ConditionId::PureState, lhs, rhs,
                               base_params(n, t, idx, false));
}

CriterionReport best_violation_scan(const MarginalPair& pair, int n) {
  bool have = false;
  CriterionReport best;
  for (int i = 0; i <= 10; ++i) {
    const double t = 0.1 * i;
    for (bool swapped : {false, true}) {
      const CriterionReport report = check_prop1(pair, n, t, swapped);
      if (!have || report.margin < best.margin) {
        best = report;
        have = true;
      }
    }
  }
  return best;
}

std::function<double(double)> q_characteristic(const DephasedCat& family,
                                               double a) {
  if (!(a >= 1.0)) throw std::domain_error("q_characteristic: a must be >= 1");
  const int n = family.n;
  const double c = family.c;
  const double t = 1.0 - 1.0 / a;
  return [n, c, t](double z) {
    const DephasedCat state{n, z, c};
    const auto pair = marginal_pair(state, QuadratureConfig::standard(n));
    const auto report = check_prop1(pair, n, t, /*swapped=*/true);
    return -report.margin;
  };
}

std::function<double(double)> a_characteristic(const AntisymCatPure& family) {
  const int n = family.n;
  return [n](double z) {
    const AntisymCatPure state{n, z};
    const auto report =
        check_pure(state, QuadratureConfig::all_plus(n), 1.0, n);
    return -report.margin;
  };
}

}  // namespace cvren
