#pragma once

#include <vector>

#include "cvren/density.hpp"
#include "cvren/index_algebra.hpp"

namespace cvren {

/// A discrete probability distribution. Probabilities must be nonnegative
/// and sum to 1 within `sum_tol`; the constructor then rescales exactly.
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<double> probabilities,
                                double sum_tol = 1e-10);

  const std::vector<double>& probabilities() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

  /// (sum p_i^alpha)^(1/alpha); the infinity marker gives max p_i.
  double lp(double alpha) const;
  double lp(const Index& alpha) const;

 private:
  std::vector<double> probs_;
};

/// Differential Renyi entropy (alpha/(1-alpha)) ln ||d||_alpha, with the
/// Shannon branch taken for |alpha - 1| < 1e-6 and -ln sup d at the
/// infinity marker. May be negative.
double renyi_differential(const AnalyticDensity& d, double alpha);
double renyi_differential(const AnalyticDensity& d, const Index& alpha);
double renyi_differential(const GridDensity& d, double alpha);
double renyi_differential(const GridDensity& d, const Index& alpha);

/// Differential Shannon entropy -integral d ln d, with 0 ln 0 = 0.
double shannon_differential(const AnalyticDensity& d);
double shannon_differential(const GridDensity& d);

/// Discrete Renyi entropy (1/(1-alpha)) ln sum q_i^alpha (>= 0), Shannon
/// branch near alpha = 1, -ln max q_i at the infinity marker.
double renyi_discrete(const DiscreteDistribution& q, double alpha);
double renyi_discrete(const DiscreteDistribution& q, const Index& alpha);

double shannon_discrete(const DiscreteDistribution& q);

/// Tsallis entropy (sum q_i^alpha - 1)/(1 - alpha); Shannon branch near 1.
double tsallis_discrete(const DiscreteDistribution& q, double alpha);

/// alpha-logarithm (x^(1-alpha) - 1)/(1 - alpha); ln x near alpha = 1.
double alpha_log(double x, double alpha);

/// Binary Shannon entropy -eta ln eta - (1-eta) ln(1-eta).
double binary_entropy(double eta);

}  // namespace cvren
