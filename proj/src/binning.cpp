#include "cvren/binning.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cvren/quadrature.hpp"

namespace cvren {

BinGrid::BinGrid(std::vector<double> marks) : marks_(std::move(marks)) {
  if (marks_.size() < 2)
    throw std::invalid_argument("BinGrid: need at least two marks");
  max_width_ = 0.0;
  for (std::size_t j = 0; j + 1 < marks_.size(); ++j) {
    const double w = marks_[j + 1] - marks_[j];
    if (!(w > 0.0))
      throw std::invalid_argument("BinGrid: marks must be strictly increasing");
    max_width_ = std::max(max_width_, w);
  }
}

BinGrid BinGrid::uniform(double min, double max, int bin_count) {
  if (bin_count < 1 || !(max > min))
    throw std::invalid_argument("BinGrid::uniform: invalid range");
  std::vector<double> marks(static_cast<std::size_t>(bin_count) + 1);
  for (int j = 0; j <= bin_count; ++j)
    marks[static_cast<std::size_t>(j)] = min + (max - min) * j / bin_count;
  return BinGrid(std::move(marks));
}

double HistogramDensity::value(double r) const {
  const auto& m = grid.marks();
  if (r < m.front() || r >= m.back()) return 0.0;
  const auto it = std::upper_bound(m.begin(), m.end(), r);
  const std::size_t j = static_cast<std::size_t>(it - m.begin()) - 1;
  return heights[std::min(j, heights.size() - 1)];
}

double HistogramDensity::lp_power_sum(double a) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < heights.size(); ++j) {
    const double p = heights[j] * grid.width(j);
    if (p > 0.0) sum += std::pow(grid.width(j), 1.0 - a) * std::pow(p, a);
  }
  return sum;
}

double HistogramDensity::max_height() const {
  return *std::max_element(heights.begin(), heights.end());
}

namespace {

constexpr double kCoverageTol = 1e-10;

BinnedDistribution binned_from_integrals(const BinGrid& grid,
                                         std::vector<double> probs,
                                         double covered_mass) {
  if (!(1.0 - covered_mass < kCoverageTol))
    throw std::invalid_argument(
        "sample_into_bins: grid misses more than 1e-10 of the density mass");
  for (double& p : probs) p = std::max(p, 0.0);
  return BinnedDistribution{grid, DiscreteDistribution(std::move(probs), kCoverageTol)};
}

}  // namespace

BinnedDistribution sample_into_bins(const AnalyticDensity& d, const BinGrid& grid) {
  const std::size_t bins = grid.bin_count();
  std::vector<double> probs(bins);
  double covered = 0.0;
  QuadratureOptions opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = 1e-15;
  const double period_cap =
      d.max_frequency() > 0.0 ? std::numbers::pi / d.max_frequency() : 0.0;
  for (std::size_t j = 0; j < bins; ++j) {
    const double a = grid.marks()[j];
    const double b = grid.marks()[j + 1];
    int panels = 2;
    if (period_cap > 0.0)
      panels = std::max(panels, static_cast<int>((b - a) / period_cap) + 1);
    probs[j] = integrate([&d](double x) { return d(x); }, a, b, opt, panels);
    covered += probs[j];
  }
  return binned_from_integrals(grid, std::move(probs), covered);
}

BinnedDistribution sample_into_bins(const GridDensity& d, const BinGrid& grid) {
  // A GridDensity is read as its linear interpolant, whose integral over a
  // bin has a closed form; the per-bin masses then sum exactly to the
  // interpolant's total mass when the grid covers the domain.
  const std::size_t bins = grid.bin_count();
  std::vector<double> probs(bins, 0.0);
  const double h = d.spacing();
  const auto& v = d.values();
  auto interp = [&](double x) -> double {
    const double idx = (x - d.left_edge()) / h;
    if (idx <= 0.0) return v.front();
    if (idx >= static_cast<double>(v.size() - 1)) return v.back();
    const std::size_t i = static_cast<std::size_t>(idx);
    const double frac = idx - static_cast<double>(i);
    return v[i] * (1.0 - frac) + v[i + 1] * frac;
  };
  auto cell_of = [&](double x) -> std::size_t {
    const double idx = (x - d.left_edge()) / h;
    if (idx <= 0.0) return 0;
    const std::size_t last = v.size() - 2;
    return std::min(last, static_cast<std::size_t>(idx));
  };
  double covered = 0.0;
  for (std::size_t j = 0; j < bins; ++j) {
    const double a = std::max(grid.marks()[j], d.left_edge());
    const double b = std::min(grid.marks()[j + 1], d.right_edge());
    if (!(b > a)) continue;
    const std::size_t ca = cell_of(a);
    const std::size_t cb = cell_of(b);
    double sum = 0.0;
    if (ca == cb) {
      sum = 0.5 * (interp(a) + interp(b)) * (b - a);
    } else {
      const double a_end = d.x_at(ca + 1);
      sum += 0.5 * (interp(a) + v[ca + 1]) * (a_end - a);
      for (std::size_t c = ca + 1; c < cb; ++c)
        sum += 0.5 * (v[c] + v[c + 1]) * h;
      const double b_start = d.x_at(cb);
      sum += 0.5 * (v[cb] + interp(b)) * (b - b_start);
    }
    probs[j] = sum;
    covered += probs[j];
  }
  return binned_from_integrals(grid, std::move(probs), covered);
}

HistogramDensity histogram_density(const BinnedDistribution& binned) {
  std::vector<double> heights(binned.grid.bin_count());
  for (std::size_t j = 0; j < heights.size(); ++j)
    heights[j] = binned.probabilities.probabilities()[j] / binned.grid.width(j);
  return HistogramDensity{binned.grid, std::move(heights)};
}

double lp_functional(const HistogramDensity& d, double a) {
  if (!(a > 0.0)) throw std::domain_error("lp_functional: alpha must be positive");
  return std::pow(d.lp_power_sum(a), 1.0 / a);
}

double lp_functional(const HistogramDensity& d, const Index& a) {
  if (a.is_infinity()) return d.max_height();
  return lp_functional(d, a.value());
}

double renyi_differential(const HistogramDensity& d, double a) {
  if (!(a > 0.0)) throw std::domain_error("renyi_differential: alpha must be positive");
  if (std::abs(a - 1.0) < 1e-6) {
    double sum = 0.0;
    for (std::size_t j = 0; j < d.heights.size(); ++j) {
      const double p = d.heights[j] * d.grid.width(j);
      if (p > 0.0) sum -= p * std::log(d.heights[j]);
    }
    return sum;
  }
  return a / (1.0 - a) * std::log(lp_functional(d, a));
}

double renyi_differential(const HistogramDensity& d, const Index& a) {
  if (a.is_infinity()) return -std::log(d.max_height());
  return renyi_differential(d, a.value());
}

DiscreteDistribution apply_inefficiency(const DiscreteDistribution& q, double eta) {
  if (eta < 0.0 || eta > 1.0)
    throw std::domain_error("apply_inefficiency: eta must lie in [0,1]");
  std::vector<double> probs = q.probabilities();
  for (double& p : probs) p *= eta;
  probs.push_back(1.0 - eta);
  return DiscreteDistribution(std::move(probs), 1e-9);
}

}  // namespace cvren
