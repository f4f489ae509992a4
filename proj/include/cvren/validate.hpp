#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cvren {

/// Outcome of one self-validation suite: `worst` is the smallest margin
/// (or largest residual, negated) observed; the suite passes when
/// worst >= -tolerance.
struct SuiteResult {
  std::string name;
  int checks = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

SuiteResult suite_constant_identities();
SuiteResult suite_conjugate_involution();
SuiteResult suite_young(int instances, std::uint64_t seed);
SuiteResult suite_converse_young(int instances, std::uint64_t seed);
SuiteResult suite_hausdorff_young(int instances, std::uint64_t seed);
SuiteResult suite_binning_chains(int instances, std::uint64_t seed);
SuiteResult suite_per_bin_bounds(int instances, std::uint64_t seed);
SuiteResult suite_inefficiency_identity(int instances, std::uint64_t seed);
SuiteResult suite_gaussian_saturation();
SuiteResult suite_minkowski_mix(int instances, std::uint64_t seed);
SuiteResult suite_histogram_norm_identity(int instances, std::uint64_t seed);
SuiteResult suite_fft_convolution_match(int instances, std::uint64_t seed);
SuiteResult suite_marginal_grid_check();

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

/// Runs every suite, prints one line per suite, returns true iff all passed.
bool run_validate(std::uint64_t seed, std::ostream& log);

}  // namespace cvren
