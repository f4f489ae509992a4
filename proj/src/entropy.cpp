#include "cvren/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cvren {

namespace {

constexpr double kShannonBranch = 1e-6;

double require_positive_alpha(double alpha) {
  if (!(alpha > 0.0))
    throw std::domain_error("entropy: alpha must be positive");
  return alpha;
}

double neg_xlogx(double v) { return v > 0.0 ? -v * std::log(v) : 0.0; }

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> probabilities,
                                           double sum_tol)
    : probs_(std::move(probabilities)) {
  if (probs_.empty())
    throw std::invalid_argument("DiscreteDistribution: empty");
  double sum = 0.0;
  for (double p : probs_) {
    if (p < 0.0 || p > 1.0 + 1e-12)
      throw std::invalid_argument("DiscreteDistribution: probability outside [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > sum_tol)
    throw std::invalid_argument("DiscreteDistribution: probabilities do not sum to 1");
  for (double& p : probs_) p /= sum;
}

double DiscreteDistribution::lp(double alpha) const {
  require_positive_alpha(alpha);
  double sum = 0.0;
  for (double p : probs_)
    if (p > 0.0) sum += std::pow(p, alpha);
  return std::pow(sum, 1.0 / alpha);
}

double DiscreteDistribution::lp(const Index& alpha) const {
  if (alpha.is_infinity())
    return *std::max_element(probs_.begin(), probs_.end());
  return lp(alpha.value());
}

double renyi_differential(const AnalyticDensity& d, double alpha) {
  require_positive_alpha(alpha);
  if (std::abs(alpha - 1.0) < kShannonBranch) return shannon_differential(d);
  return alpha / (1.0 - alpha) * std::log(lp_functional(d, alpha));
}

double renyi_differential(const AnalyticDensity& d, const Index& alpha) {
  if (alpha.is_infinity()) return -std::log(sup_value(d));
  return renyi_differential(d, alpha.value());
}

double renyi_differential(const GridDensity& d, double alpha) {
  require_positive_alpha(alpha);
  if (std::abs(alpha - 1.0) < kShannonBranch) return shannon_differential(d);
  return alpha / (1.0 - alpha) * std::log(lp_functional(d, alpha));
}

double renyi_differential(const GridDensity& d, const Index& alpha) {
  if (alpha.is_infinity())
    return -std::log(lp_functional(d, Index::infinity()));
  return renyi_differential(d, alpha.value());
}

double shannon_differential(const AnalyticDensity& d) {
  return integrate_density_transform(d, &neg_xlogx);
}

double shannon_differential(const GridDensity& d) {
  const auto& v = d.values();
  double sum = 0.0;
  for (double x : v) sum += neg_xlogx(x);
  sum -= 0.5 * (neg_xlogx(v.front()) + neg_xlogx(v.back()));
  return sum * d.spacing();
}

double renyi_discrete(const DiscreteDistribution& q, double alpha) {
  require_positive_alpha(alpha);
  if (std::abs(alpha - 1.0) < kShannonBranch) return shannon_discrete(q);
  double sum = 0.0;
  for (double p : q.probabilities())
    if (p > 0.0) sum += std::pow(p, alpha);
  return std::log(sum) / (1.0 - alpha);
}

double renyi_discrete(const DiscreteDistribution& q, const Index& alpha) {
  if (alpha.is_infinity()) return -std::log(q.lp(Index::infinity()));
  return renyi_discrete(q, alpha.value());
}

double shannon_discrete(const DiscreteDistribution& q) {
  double sum = 0.0;
  for (double p : q.probabilities()) sum += neg_xlogx(p);
  return sum;
}

double tsallis_discrete(const DiscreteDistribution& q, double alpha) {
  require_positive_alpha(alpha);
  if (std::abs(alpha - 1.0) < kShannonBranch) return shannon_discrete(q);
  double sum = 0.0;
  for (double p : q.probabilities())
    if (p > 0.0) sum += std::pow(p, alpha);
  return (sum - 1.0) / (1.0 - alpha);
}

double alpha_log(double x, double alpha) {
  if (!(x > 0.0)) throw std::domain_error("alpha_log: x must be positive");
  if (std::abs(alpha - 1.0) < kShannonBranch) return std::log(x);
  return (std::pow(x, 1.0 - alpha) - 1.0) / (1.0 - alpha);
}

double binary_entropy(double eta) {
  if (eta < 0.0 || eta > 1.0)
    throw std::domain_error("binary_entropy: eta must lie in [0,1]");
  return neg_xlogx(eta) + neg_xlogx(1.0 - eta);
}

}  // namespace cvren
