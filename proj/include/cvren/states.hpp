#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "cvren/density.hpp"

namespace cvren {

enum class Observable { R, S };

/// Measurement configuration: per-subsystem quadrature rotation angles and
/// the sign vectors combining the rotated quadratures into the two global
/// observables.
struct QuadratureConfig {
  int n = 2;
  std::vector<double> thetas;
  std::vector<int> r_signs;
  std::vector<int> s_signs;

  /// theta = 0, alternating signs on the R side, all-plus on the S side
  /// (commuting pair for even n).
  static QuadratureConfig standard(int n);

  /// theta = 0, all-plus on both sides.
  static QuadratureConfig all_plus(int n);

  int commutator_sum() const;
  bool commuting() const { return commutator_sum() == 0; }
  void validate() const;
};

/// Product of coherent states, one complex amplitude per subsystem.
struct CoherentProduct {
  std::vector<std::complex<double>> amplitudes;
};

/// n-fold cat-type mixed state built from |z...z> and |-z...-z> with
/// cross-term coefficient -(1-c); c = 1 is the fully dephased mixture and
/// c = 0 the pure odd cat state.
struct DephasedCat {
  int n = 2;
  double z = 1.0;
  double c = 0.5;
};

/// Pure antisymmetric combination of |z..z,-z..-z> and |-z..-z,z..z> for
/// even n; vanishes at z = 0.
struct AntisymCatPure {
  int n = 2;
  double z = 1.0;
};

using StateSpec = std::variant<CoherentProduct, DephasedCat, AntisymCatPure>;

int subsystem_count(const StateSpec& state);
bool is_pure(const StateSpec& state);
void validate_state(const StateSpec& state);

/// Densities of the two global observables.
struct MarginalPair {
  AnalyticDensity w;
  AnalyticDensity u;
};

/// Outcome density of the rotated quadrature (R: cos(theta) x + sin(theta) p,
/// S: the same at theta + pi/2) in the coherent state |z>, reflected when
/// sign = -1. Always a variance-1/2 Gaussian.
AnalyticDensity coherent_quadrature_density(std::complex<double> z, double theta,
                                            Observable which, int sign);

/// Densities W (R observable) and U (S observable) for the given state.
MarginalPair marginal_pair(const StateSpec& state, const QuadratureConfig& config);

/// Per-subsystem outcome densities (w_l, u_l) in the reduced states.
std::vector<MarginalPair> local_reduced_densities(const StateSpec& state,
                                                  const QuadratureConfig& config);

/// Normalization prefactor making the state trace / norm equal to 1
/// (1 for coherent products).
double normalization_factor(const StateSpec& state);

namespace detail {

/// One dyadic operator term coeff * |ket_1..ket_n><bra_1..bra_n| of the
/// state's expansion over coherent projectors (coefficients exclude the
/// normalization prefactor).
struct OperatorTerm {
  std::complex<double> coeff;
  std::vector<std::complex<double>> ket;
  std::vector<std::complex<double>> bra;
};

std::vector<OperatorTerm> decompose(const StateSpec& state);

/// Carrier term of r -> <r|z_ket><z_bra|r> in the rotated/reflected
/// quadrature basis.
ComplexGaussianTerm coherent_kernel(std::complex<double> z_ket,
                                    std::complex<double> z_bra, double theta,
                                    Observable which, int sign);

std::complex<double> coherent_overlap(std::complex<double> bra,
                                      std::complex<double> ket);

}  // namespace detail

}  // namespace cvren
