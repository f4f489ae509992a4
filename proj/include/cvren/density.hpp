#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "cvren/index_algebra.hpp"
#include "cvren/report.hpp"

namespace cvren {

/// One Gaussian-exponential carrier term
///   amplitude * exp(-(x - mean)^2 / (2 variance)) * exp(i frequency x).
/// Mean may be complex on input; canonical() folds the imaginary part of the
/// mean into frequency and amplitude so stored terms have real means.
struct ComplexGaussianTerm {
  std::complex<double> amplitude;
  std::complex<double> mean;
  double variance = 1.0;
  double frequency = 0.0;

  std::complex<double> value(double x) const;

  /// Integral over the whole real line (closed form).
  std::complex<double> integral() const;

  /// Upper bound on |integral of the term outside [lo, hi]|.
  double abs_tail_mass_outside(double lo, double hi) const;

  /// Equivalent term with real mean.
  ComplexGaussianTerm canonical() const;

  /// Term whose value is the complex conjugate of this one at every x.
  ComplexGaussianTerm conjugated() const;

  /// Term representing x -> value(sign * x).
  ComplexGaussianTerm reflected(int sign) const;

  /// Normalized real Gaussian as a single term.
  static ComplexGaussianTerm gaussian(double mean, double variance);
};

/// Exact convolution of two carrier terms (again a single term).
ComplexGaussianTerm convolve(const ComplexGaussianTerm& lhs,
                             const ComplexGaussianTerm& rhs);

/// A one-dimensional probability density stored as a finite sum of
/// Gaussian-exponential terms. Construction canonicalizes the terms, closes
/// the list under complex conjugation (so realness is structural), rescales
/// to unit mass, and probes nonnegativity on a grid.
class AnalyticDensity {
 public:
  explicit AnalyticDensity(std::vector<ComplexGaussianTerm> terms);

  static AnalyticDensity gaussian(double mean, double variance);

  const std::vector<ComplexGaussianTerm>& terms() const { return terms_; }

  /// Density value: real part of the term sum, clamped to [0, inf) within
  /// the -1e-12 roundoff band.
  double operator()(double x) const;

  /// Raw complex term sum (for realness diagnostics).
  std::complex<double> complex_value(double x) const;

  /// Truncation domain [min mean - 12 sigma_max, max mean + 12 sigma_max].
  double domain_min() const { return lo_; }
  double domain_max() const { return hi_; }

  double max_std() const { return max_std_; }
  double max_frequency() const { return max_freq_; }

  /// Upper bound on the mass outside [lo, hi], from per-term Gaussian tails.
  double tail_mass_outside(double lo, double hi) const;

  /// Quadrature breakpoints resolving every component and oscillation.
  std::vector<double> quadrature_breakpoints() const;

 private:
  std::vector<ComplexGaussianTerm> terms_;
  double lo_ = 0.0, hi_ = 0.0, max_std_ = 0.0, max_freq_ = 0.0;
};

AnalyticDensity convolve(const AnalyticDensity& lhs, const AnalyticDensity& rhs);

/// r -> d(sign * r); sign must be +1 or -1.
AnalyticDensity reflect_scale(const AnalyticDensity& d, int sign);

/// Convex mixture; weights must be nonnegative and sum to 1 within 1e-12.
AnalyticDensity mix(const std::vector<double>& weights,
                    const std::vector<AnalyticDensity>& densities);

/// A density sampled on a uniform grid. Values are clamped nonnegative and
/// rescaled so the trapezoid integral is exactly 1; construction requires an
/// estimate of the mass the grid fails to cover (must be < 1e-12).
class GridDensity {
 public:
  GridDensity(double left_edge, double spacing, std::vector<double> values,
              double source_tail_mass);

  /// Sample an analytic density over its truncation domain.
  static GridDensity sample(const AnalyticDensity& d, double spacing);

  double left_edge() const { return left_edge_; }
  double spacing() const { return spacing_; }
  const std::vector<double>& values() const { return values_; }
  double x_at(std::size_t i) const { return left_edge_ + spacing_ * i; }
  double right_edge() const { return x_at(values_.size() - 1); }

 private:
  double left_edge_;
  double spacing_;
  std::vector<double> values_;
};

/// Linear (non-circular) convolution via FFT with zero padding; output
/// left edge is the sum of the input left edges. Spacings must agree.
GridDensity convolve_grid(const GridDensity& lhs, const GridDensity& rhs);

/// CSV with header "x,density", one row per grid point.
void write_csv(const GridDensity& d, std::ostream& out);
GridDensity read_grid_density_csv(std::istream& in);

/// Norm-like functional ||d||_alpha = (integral |d|^alpha)^(1/alpha);
/// the infinity marker yields the essential supremum.
double lp_functional(const AnalyticDensity& d, double alpha);
double lp_functional(const AnalyticDensity& d, const Index& alpha);
double lp_functional(const GridDensity& d, double alpha);
double lp_functional(const GridDensity& d, const Index& alpha);

/// Essential supremum (max over an adaptively refined grid).
double sup_value(const AnalyticDensity& d);

/// Integral of f(d(x)) over the truncation domain with density-aware panels.
double integrate_density_transform(const AnalyticDensity& d,
                                   double (*transform)(double),
                                   double rel_tol = 1e-11);

/// Sharp Fourier-pair inequality self-test on the k-th harmonic-oscillator
/// eigenfunction, whose momentum density equals its position density. The
/// report is oriented so margin >= 0 certifies the inequality
/// ||v||_alpha <= (1/(kappa pi))^{(1-beta)/beta} ||vtilde||_beta.
CriterionReport fourier_pair_check(int hermite_index, double alpha, double beta);

}  // namespace cvren
