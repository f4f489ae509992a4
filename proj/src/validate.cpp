#include "cvren/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "cvren/binning.hpp"
#include "cvren/criteria.hpp"
#include "cvren/density.hpp"
#include "cvren/entropy.hpp"
#include "cvren/index_algebra.hpp"
#include "cvren/quadrature.hpp"
#include "cvren/states.hpp"

namespace cvren {

namespace {

SuiteResult finish(std::string name, int checks, double worst, double tol) {
  return SuiteResult{std::move(name), checks, worst, tol, worst >= -tol};
}

AnalyticDensity random_mixture(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_real_distribution<double> mean_dist(-2.5, 2.5);
  std::uniform_real_distribution<double> var_dist(0.2, 3.0);
  std::uniform_real_distribution<double> weight_dist(0.1, 1.0);
  const int count = count_dist(rng);
  std::vector<double> weights(count);
  double total = 0.0;
  for (auto& w : weights) {
    w = weight_dist(rng);
    total += w;
  }
  std::vector<ComplexGaussianTerm> terms;
  for (int i = 0; i < count; ++i) {
    auto t = ComplexGaussianTerm::gaussian(mean_dist(rng), var_dist(rng));
    t.amplitude *= weights[i] / total;
    terms.push_back(t);
  }
  return AnalyticDensity(std::move(terms));
}

DiscreteDistribution random_discrete(std::mt19937_64& rng, int min_size,
                                     int max_size) {
  std::uniform_int_distribution<int> size_dist(min_size, max_size);
  std::uniform_real_distribution<double> mass_dist(0.05, 1.0);
  std::vector<double> probs(size_dist(rng));
  double total = 0.0;
  for (auto& p : probs) {
    p = mass_dist(rng);
    total += p;
  }
  for (auto& p : probs) p /= total;
  return DiscreteDistribution(std::move(probs));
}

// Random order split: t in [0.1, 0.9] and tau_l >= 0 summing to t, so the
// index constraints sum(1/a_l') = 1/a' and sum(1/b_l') = 1/b' hold exactly.
struct IndexSplit {
  double t;
  std::vector<double> taus;
};

IndexSplit random_split(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> t_dist(0.1, 0.9);
  std::uniform_real_distribution<double> part_dist(0.05, 1.0);
  IndexSplit split;
  split.t = t_dist(rng);
  split.taus.resize(n);
  double total = 0.0;
  for (auto& tau : split.taus) {
    tau = part_dist(rng);
    total += tau;
  }
  for (auto& tau : split.taus) tau *= split.t / total;
  return split;
}

double young_factor(double x) { return young_c(x, conjugate_index(x)); }

}  // namespace

SuiteResult suite_constant_identities() {
  double worst = 0.0;
  int checks = 0;
  worst = std::min(worst, -std::abs(big_k(0.0) - std::numbers::e));
  worst = std::min(worst, -std::abs(big_k(1.0) - 2.0));
  checks += 2;
  for (int n = 2; n <= 10; ++n) {
    for (double t = 0.05; t < 0.951; t += 0.05) {
      worst = std::min(worst, -std::abs(constant_identity_residual(n, t)));
      ++checks;
    }
  }
  return finish("constant_identities", checks, worst, 1e-9);
}

SuiteResult suite_conjugate_involution() {
  double worst = 0.0;
  int checks = 0;
  for (double x : {0.2, 0.35, 0.5, 0.75, 0.9, 1.25, 2.0, 3.0, 7.0, 19.0}) {
    const Index twice = conjugate_index(conjugate_index(x));
    worst = std::min(worst, -std::abs(twice.value() - x));
    ++checks;
  }
  return finish("conjugate_involution", checks, worst, 1e-12);
}

SuiteResult suite_young(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(2, 3);
  double worst = 0.0;
  for (int i = 0; i < instances; ++i) {
    const int n = n_dist(rng);
    const auto split = random_split(rng, n);
    std::vector<AnalyticDensity> fs;
    for (int l = 0; l < n; ++l) fs.push_back(random_mixture(rng));
    AnalyticDensity conv = fs[0];
    for (int l = 1; l < n; ++l) conv = convolve(conv, fs[l]);
    const double a = 1.0 / (1.0 - split.t);
    double rhs = 1.0;
    for (int l = 0; l < n; ++l) {
      const double al = 1.0 / (1.0 - split.taus[l]);
      rhs *= young_factor(al) * lp_functional(fs[l], al);
    }
    const double lhs = young_factor(a) * lp_functional(conv, a);
    worst = std::min(worst, rhs - lhs);
  }
  return finish("young_inequality", instances, worst, 1e-9);
}

SuiteResult suite_converse_young(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(2, 3);
  double worst = 0.0;
  for (int i = 0; i < instances; ++i) {
    const int n = n_dist(rng);
    const auto split = random_split(rng, n);
    std::vector<AnalyticDensity> fs;
    for (int l = 0; l < n; ++l) fs.push_back(random_mixture(rng));
    AnalyticDensity conv = fs[0];
    for (int l = 1; l < n; ++l) conv = convolve(conv, fs[l]);
    const double b = 1.0 / (1.0 + split.t);
    double lhs = 1.0;
    for (int l = 0; l < n; ++l) {
      const double bl = 1.0 / (1.0 + split.taus[l]);
      lhs *= young_factor(bl) * lp_functional(fs[l], bl);
    }
    const double rhs = young_factor(b) * lp_functional(conv, b);
    worst = std::min(worst, rhs - lhs);
  }
  return finish("converse_young_inequality", instances, worst, 1e-9);
}

SuiteResult suite_hausdorff_young(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k_dist(0, 5);
  std::uniform_real_distribution<double> t_dist(0.05, 0.95);
  double worst = 0.0;
  for (int i = 0; i < instances; ++i) {
    const double t = t_dist(rng);
    const auto report =
        fourier_pair_check(k_dist(rng), 1.0 / (1.0 - t), 1.0 / (1.0 + t));
    worst = std::min(worst, report.margin);
  }
  return finish("hausdorff_young_hermite", instances, worst, 1e-9);
}

SuiteResult suite_binning_chains(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> width_dist(0.05, 0.4);
  std::uniform_real_distribution<double> t_dist(0.1, 0.9);
  double worst = 0.0;
  for (int i = 0; i < instances; ++i) {
    const AnalyticDensity d = random_mixture(rng);
    const double width = width_dist(rng);
    const int bins =
        static_cast<int>(std::ceil((d.domain_max() - d.domain_min()) / width));
    const BinGrid grid = BinGrid::uniform(d.domain_min(), d.domain_min() + bins * width, bins);
    const auto binned = sample_into_bins(d, grid);
    const auto hist = histogram_density(binned);
    const double t = t_dist(rng);
    const double a = 1.0 / (1.0 - t);
    const double b = 1.0 / (1.0 + t);
    const double lp_a = std::pow(lp_functional(d, a), a);
    const double lp_b = std::pow(lp_functional(d, b), b);
    const double hist_a = hist.lp_power_sum(a);
    const double hist_b = hist.lp_power_sum(b);
    const double disc_a = std::pow(binned.probabilities.lp(a), a);
    const double disc_b = std::pow(binned.probabilities.lp(b), b);
    const double delta = grid.max_width();
    // a > 1: delta^{1-a} ||p||_a^a <= ||W_d||_a^a <= ||W||_a^a.
    worst = std::min(worst, hist_a - std::pow(delta, 1.0 - a) * disc_a);
    worst = std::min(worst, lp_a - hist_a);
    // b < 1: ||W||_b^b <= ||W_d||_b^b <= delta^{1-b} ||p||_b^b.
    worst = std::min(worst, hist_b - lp_b);
    worst = std::min(worst, std::pow(delta, 1.0 - b) * disc_b - hist_b);
  }
  return finish("binning_norm_chains", 4 * instances, worst, 1e-10);
}

SuiteResult suite_per_bin_bounds(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> width_dist(0.1, 0.6);
  std::uniform_real_distribution<double> t_dist(0.1, 0.9);
  double worst = 0.0;
  int checks = 0;
  for (int i = 0; i < instances; ++i) {
    const AnalyticDensity d = random_mixture(rng);
    const double width = width_dist(rng);
    const int bins =
        static_cast<int>(std::ceil((d.domain_max() - d.domain_min()) / width));
    const BinGrid grid =
        BinGrid::uniform(d.domain_min(), d.domain_min() + bins * width, bins);
    const auto binned = sample_into_bins(d, grid);
    const double t = t_dist(rng);
    const double a = 1.0 / (1.0 - t);
    const double b = 1.0 / (1.0 + t);
    for (std::size_t j = 0; j < grid.bin_count(); ++j) {
      const double lo = grid.marks()[j];
      const double hi = grid.marks()[j + 1];
      const double pj = binned.probabilities.probabilities()[j];
      const double wj = grid.width(j);
      const double int_a =
          integrate([&](double x) { return std::pow(d(x), a); }, lo, hi);
      const double int_b = integrate(
          [&](double x) {
            const double v = d(x);
            return v > 0.0 ? std::pow(v, b) : 0.0;
          },
          lo, hi);
      worst = std::min(worst, int_a - std::pow(wj, 1.0 - a) * std::pow(pj, a));
      worst = std::min(worst, std::pow(wj, 1.0 - b) * std::pow(pj, b) - int_b);
      checks += 2;
    }
  }
  return finish("per_bin_bounds", checks, worst, 1e-9);
}

SuiteResult suite_inefficiency_identity(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  int checks = 0;
  for (int i = 0; i < instances; ++i) {
    const auto q = random_discrete(rng, 3, 12);
    const double h1 = shannon_discrete(q);
    for (double eta = 0.1; eta < 0.95; eta += 0.1) {
      const auto distorted = apply_inefficiency(q, eta);
      const double residual =
          shannon_discrete(distorted) - (eta * h1 + binary_entropy(eta));
      worst = std::min(worst, -std::abs(residual));
      ++checks;
    }
  }
  return finish("inefficiency_identity", checks, worst, 1e-12);
}

SuiteResult suite_gaussian_saturation() {
  double worst = 0.0;
  int checks = 0;
  for (int n : {2, 4, 10}) {
    std::vector<std::complex<double>> amps(n);
    for (int l = 0; l < n; ++l)
      amps[l] = std::complex<double>(0.3 * l - 0.2, 0.1 * (n - l));
    const CoherentProduct state{amps};
    const auto pair = marginal_pair(state, QuadratureConfig::standard(n));
    for (double t = 0.0; t < 0.951; t += 0.05) {
      const auto report = check_prop1(pair, n, t, false);
      worst = std::min(worst, -std::abs(report.margin));
      ++checks;
    }
  }
  return finish("gaussian_saturation", checks, worst, 1e-8);
}

SuiteResult suite_minkowski_mix(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight_dist(0.05, 0.95);
  double worst = 0.0;
  for (int i = 0; i < instances; ++i) {
    const AnalyticDensity d1 = random_mixture(rng);
    const AnalyticDensity d2 = random_mixture(rng);
    const double w = weight_dist(rng);
    const AnalyticDensity mixed = mix({w, 1.0 - w}, {d1, d2});
    const double lhs = lp_functional(mixed, 2.0);
    const double rhs = w * lp_functional(d1, 2.0) + (1.0 - w) * lp_functional(d2, 2.0);
    worst = std::min(worst, rhs - lhs);
  }
  return finish("minkowski_mixture", instances, worst, 1e-10);
}

SuiteResult suite_histogram_norm_identity(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> width_dist(0.1, 0.5);
  std::uniform_real_distribution<double> a_dist(1.1, 4.0);
  double worst = 0.0;
  for (int i = 0; i < instances; ++i) {
    const AnalyticDensity d = random_mixture(rng);
    const double width = width_dist(rng);
    const int bins =
        static_cast<int>(std::ceil((d.domain_max() - d.domain_min()) / width));
    const BinGrid grid =
        BinGrid::uniform(d.domain_min(), d.domain_min() + bins * width, bins);
    const auto hist = histogram_density(sample_into_bins(d, grid));
    const double a = a_dist(rng);
    // Midpoint evaluation reproduces the closed sum exactly for a
    // piecewise-constant density.
    double direct = 0.0;
    for (std::size_t j = 0; j < grid.bin_count(); ++j) {
      const double mid = 0.5 * (grid.marks()[j] + grid.marks()[j + 1]);
      direct += std::pow(hist.value(mid), a) * grid.width(j);
    }
    worst = std::min(worst, -std::abs(direct - hist.lp_power_sum(a)));
  }
  return finish("histogram_norm_identity", instances, worst, 1e-12);
}

SuiteResult suite_fft_convolution_match(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < instances; ++i) {
    const AnalyticDensity d1 = random_mixture(rng);
    const AnalyticDensity d2 = random_mixture(rng);
    const AnalyticDensity conv = convolve(d1, d2);
    const GridDensity g1 = GridDensity::sample(d1, 1e-3);
    const GridDensity g2 = GridDensity::sample(d2, 1e-3);
    const GridDensity gconv = convolve_grid(g1, g2);
    double max_err = 0.0;
    for (std::size_t k = 0; k < gconv.values().size(); k += 7)
      max_err = std::max(max_err,
                         std::abs(gconv.values()[k] - conv(gconv.x_at(k))));
    worst = std::min(worst, -max_err);
  }
  return finish("fft_convolution_match", instances, worst, 1e-8);
}

SuiteResult suite_marginal_grid_check() {
  // Direct 2-D assembly of <r1 r2|rho|r1 r2> and line summation, compared
  // against the convolution-based marginals for all three families at n = 2.
  double worst = 0.0;
  int checks = 0;
  const double h = 0.02;
  const double lo = -8.0;
  const std::size_t count = 801;
  const auto run_case = [&](const StateSpec& state, const QuadratureConfig& cfg) {
    const auto pair = marginal_pair(state, cfg);
    const auto terms = detail::decompose(state);
    for (Observable which : {Observable::R, Observable::S}) {
      const auto& signs = which == Observable::R ? cfg.r_signs : cfg.s_signs;
      std::vector<std::vector<std::complex<double>>> k1, k2;
      for (const auto& op : terms) {
        // Per-mode kernels without the sign reflection; signs enter through
        // the summation line below.
        const auto t1 = detail::coherent_kernel(op.ket[0], op.bra[0],
                                                cfg.thetas[0], which, 1);
        const auto t2 = detail::coherent_kernel(op.ket[1], op.bra[1],
                                                cfg.thetas[1], which, 1);
        std::vector<std::complex<double>> a1(count), a2(count);
        for (std::size_t i = 0; i < count; ++i) {
          a1[i] = op.coeff * t1.value(lo + h * i);
          a2[i] = t2.value(lo + h * i);
        }
        k1.push_back(std::move(a1));
        k2.push_back(std::move(a2));
      }
      std::vector<double> marginal(count, 0.0);
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
          const double r = signs[0] * (lo + h * i) + signs[1] * (lo + h * j);
          const long k = std::lround((r - lo) / h);
          if (k < 0 || k >= static_cast<long>(count)) continue;
          double v = 0.0;
          for (std::size_t term = 0; term < k1.size(); ++term)
            v += (k1[term][i] * k2[term][j]).real();
          marginal[static_cast<std::size_t>(k)] += v * h;
        }
      }
      double mass = 0.0;
      for (double m : marginal) mass += m;
      mass *= h;
      const AnalyticDensity& analytic = which == Observable::R ? pair.w : pair.u;
      double max_err = 0.0;
      for (std::size_t k = 0; k < count; ++k)
        max_err = std::max(max_err,
                           std::abs(marginal[k] / mass - analytic(lo + h * k)));
      worst = std::min(worst, -max_err);
      ++checks;
    }
  };
  run_case(DephasedCat{2, 1.0, 0.5}, QuadratureConfig::standard(2));
  run_case(AntisymCatPure{2, 1.0}, QuadratureConfig::all_plus(2));
  run_case(CoherentProduct{{std::complex<double>(0.7, 0.2),
                            std::complex<double>(-0.4, 0.5)}},
           QuadratureConfig::standard(2));
  return finish("marginal_grid_check", checks, worst, 1e-6);
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
  std::vector<SuiteResult> results;
  results.push_back(suite_constant_identities());
  results.push_back(suite_conjugate_involution());
  results.push_back(suite_young(200, seed));
  results.push_back(suite_converse_young(200, seed + 1));
  results.push_back(suite_hausdorff_young(200, seed + 2));
  results.push_back(suite_binning_chains(200, seed + 3));
  results.push_back(suite_per_bin_bounds(50, seed + 4));
  results.push_back(suite_inefficiency_identity(100, seed + 5));
  results.push_back(suite_gaussian_saturation());
  results.push_back(suite_minkowski_mix(100, seed + 6));
  results.push_back(suite_histogram_norm_identity(100, seed + 7));
  results.push_back(suite_fft_convolution_match(3, seed + 8));
  results.push_back(suite_marginal_grid_check());
  return results;
}

bool run_validate(std::uint64_t seed, std::ostream& log) {
  bool all_passed = true;
  for (const auto& suite : run_all_suites(seed)) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "[%s] %-28s checks=%-5d worst=%+.3e tol=%.0e",
                  suite.passed ? "PASS" : "FAIL", suite.name.c_str(),
                  suite.checks, suite.worst, suite.tolerance);
    log << buf << '\n';
    all_passed = all_passed && suite.passed;
  }
  return all_passed;
}

}  // namespace cvren
