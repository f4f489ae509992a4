#pragma once

#include <vector>

#include "cvren/density.hpp"
#include "cvren/entropy.hpp"

namespace cvren {

/// Strictly increasing bin marks; bins are the intervals between
/// consecutive marks.
class BinGrid {
 public:
  explicit BinGrid(std::vector<double> marks);

  static BinGrid uniform(double min, double max, int bin_count);

  const std::vector<double>& marks() const { return marks_; }
  std::size_t bin_count() const { return marks_.size() - 1; }
  double width(std::size_t j) const { return marks_[j + 1] - marks_[j]; }
  double max_width() const { return max_width_; }
  double min() const { return marks_.front(); }
  double max() const { return marks_.back(); }

 private:
  std::vector<double> marks_;
  double max_width_;
};

struct BinnedDistribution {
  BinGrid grid;
  DiscreteDistribution probabilities;
};

/// Piecewise-constant reconstruction with heights p_j / width_j.
struct HistogramDensity {
  BinGrid grid;
  std::vector<double> heights;

  double value(double r) const;

  /// Closed form for ||W_delta||_a^a = sum width_j^(1-a) p_j^a.
  double lp_power_sum(double a) const;
  double max_height() const;
};

/// Per-bin integrals of the density; fails if the grid misses more than
/// 1e-10 of the mass (the residual is never folded into edge bins).
BinnedDistribution sample_into_bins(const AnalyticDensity& d, const BinGrid& grid);
BinnedDistribution sample_into_bins(const GridDensity& d, const BinGrid& grid);

HistogramDensity histogram_density(const BinnedDistribution& binned);

/// Norm-like functional of the histogram through the closed sum.
double lp_functional(const HistogramDensity& d, double a);
double lp_functional(const HistogramDensity& d, const Index& a);

/// Renyi entropy of the histogram density (Shannon branch near a = 1,
/// -ln max height at the infinity marker).
double renyi_differential(const HistogramDensity& d, double a);
double renyi_differential(const HistogramDensity& d, const Index& a);

/// Detector-loss model: every outcome is kept with probability eta and a
/// no-click outcome of probability 1 - eta is appended.
DiscreteDistribution apply_inefficiency(const DiscreteDistribution& q, double eta);

}  // namespace cvren
