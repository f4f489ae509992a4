#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>

namespace oracles {

namespace {

constexpr double kPi = std::numbers::pi;

int fock_cutoff(std::complex<double> z) {
  const double n = std::norm(z);
  return static_cast<int>(std::ceil(n + 12.0 * std::sqrt(n) + 30.0));
}

struct DyadTerm {
  std::complex<double> coeff;
  std::vector<std::complex<double>> ket;
  std::vector<std::complex<double>> bra;
};

// The state families written out over coherent dyads; this mirrors the
// definitions, not the library code paths.
std::vector<DyadTerm> dyads(const cvren::StateSpec& state) {
  std::vector<DyadTerm> out;
  if (const auto* cp = std::get_if<cvren::CoherentProduct>(&state)) {
    out.push_back({1.0, cp->amplitudes, cp->amplitudes});
  } else if (const auto* dc = std::get_if<cvren::DephasedCat>(&state)) {
    std::vector<std::complex<double>> plus(dc->n, dc->z), minus(dc->n, -dc->z);
    out.push_back({1.0, plus, plus});
    out.push_back({1.0, minus, minus});
    out.push_back({-(1.0 - dc->c), plus, minus});
    out.push_back({-(1.0 - dc->c), minus, plus});
  } else {
    const auto& ac = std::get<cvren::AntisymCatPure>(state);
    const int m = ac.n / 2;
    std::vector<std::complex<double>> head(ac.n), tail(ac.n);
    for (int l = 0; l < ac.n; ++l) {
      head[l] = (l < m) ? ac.z : -ac.z;
      tail[l] = (l < m) ? -ac.z : ac.z;
    }
    out.push_back({1.0, head, head});
    out.push_back({1.0, tail, tail});
    out.push_back({-1.0, head, tail});
    out.push_back({-1.0, tail, head});
  }
  return out;
}

std::vector<std::complex<double>> wavefunction_array(std::complex<double> z,
                                                     double theta,
                                                     cvren::Observable which,
                                                     const Grid1D& grid) {
  std::vector<std::complex<double>> out(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i)
    out[i] = coherent_wavefunction(z, grid.x(i), theta, which);
  return out;
}

}  // namespace

double hermite_function(int k, double x) {
  double prev = 0.0;
  double curr = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  for (int j = 1; j <= k; ++j) {
    const double next =
        std::sqrt(2.0 / j) * x * curr - std::sqrt((j - 1.0) / j) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

std::complex<double> coherent_wavefunction(std::complex<double> z, double x,
                                           double theta,
                                           cvren::Observable which) {
  const double angle = theta + (which == cvren::Observable::S ? kPi / 2.0 : 0.0);
  const int cutoff = fock_cutoff(z);
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> coeff = std::exp(-0.5 * std::norm(z));
  double prev = 0.0;
  double curr = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  const std::complex<double> step = z * std::polar(1.0, -angle);
  for (int k = 0; k <= cutoff; ++k) {
    sum += coeff * curr;
    coeff *= step / std::sqrt(static_cast<double>(k + 1));
    const double next = std::sqrt(2.0 / (k + 1)) * x * curr -
                        std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = curr;
    curr = next;
  }
  return sum;
}

std::complex<double> coherent_overlap_numeric(std::complex<double> bra,
                                              std::complex<double> ket) {
  const Grid1D grid{-14.0, 5e-3, 5601};
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double x = grid.x(i);
    sum += std::conj(coherent_wavefunction(bra, x, 0.0, cvren::Observable::R)) *
           coherent_wavefunction(ket, x, 0.0, cvren::Observable::R);
  }
  return sum * grid.spacing;
}

std::vector<double> brute_force_marginal_n2(const cvren::StateSpec& state,
                                            const cvren::QuadratureConfig& config,
                                            cvren::Observable which,
                                            const Grid1D& grid) {
  if (cvren::subsystem_count(state) != 2 || config.n != 2)
    throw std::invalid_argument("brute_force_marginal_n2: n must be 2");
  const auto& signs =
      which == cvren::Observable::R ? config.r_signs : config.s_signs;
  // V(x1, x2) on the grid in the rotated (sign-free) eigenbasis.
  std::vector<double> v(grid.count * grid.count, 0.0);
  for (const auto& term : dyads(state)) {
    const auto k1 = wavefunction_array(term.ket[0], config.thetas[0], which, grid);
    const auto b1 = wavefunction_array(term.bra[0], config.thetas[0], which, grid);
    const auto k2 = wavefunction_array(term.ket[1], config.thetas[1], which, grid);
    const auto b2 = wavefunction_array(term.bra[1], config.thetas[1], which, grid);
    for (std::size_t i = 0; i < grid.count; ++i) {
      const std::complex<double> left = term.coeff * k1[i] * std::conj(b1[i]);
      for (std::size_t j = 0; j < grid.count; ++j)
        v[i * grid.count + j] += (left * k2[j] * std::conj(b2[j])).real();
    }
  }
  // Line sum along sign1 x1 + sign2 x2 = r; the grid is uniform, so every
  // r lands exactly on a grid point.
  std::vector<double> marginal(grid.count, 0.0);
  for (std::size_t i = 0; i < grid.count; ++i) {
    for (std::size_t j = 0; j < grid.count; ++j) {
      const double r = signs[0] * grid.x(i) + signs[1] * grid.x(j);
      const double pos = (r - grid.lo) / grid.spacing;
      const long k = std::lround(pos);
      if (k >= 0 && k < static_cast<long>(grid.count))
        marginal[static_cast<std::size_t>(k)] += v[i * grid.count + j] * grid.spacing;
    }
  }
  double mass = 0.0;
  for (double m : marginal) mass += m;
  mass *= grid.spacing;
  for (double& m : marginal) m /= mass;
  return marginal;
}

std::vector<double> brute_force_local_density(const cvren::StateSpec& state,
                                              const cvren::QuadratureConfig& config,
                                              cvren::Observable which, int mode,
                                              const Grid1D& grid) {
  const int n = cvren::subsystem_count(state);
  if (mode < 0 || mode >= n)
    throw std::invalid_argument("brute_force_local_density: bad mode");
  const auto& signs =
      which == cvren::Observable::R ? config.r_signs : config.s_signs;
  std::vector<double> density(grid.count, 0.0);
  for (const auto& term : dyads(state)) {
    std::complex<double> coeff = term.coeff;
    for (int k = 0; k < n; ++k)
      if (k != mode) coeff *= coherent_overlap_numeric(term.bra[k], term.ket[k]);
    for (std::size_t i = 0; i < grid.count; ++i) {
      const double x = signs[mode] * grid.x(i);
      const auto psi_ket =
          coherent_wavefunction(term.ket[mode], x, config.thetas[mode], which);
      const auto psi_bra =
          coherent_wavefunction(term.bra[mode], x, config.thetas[mode], which);
      density[i] += (coeff * psi_ket * std::conj(psi_bra)).real();
    }
  }
  double mass = 0.0;
  for (double d : density) mass += d;
  mass *= grid.spacing;
  for (double& d : density) d /= mass;
  return density;
}

double numeric_trace(const cvren::StateSpec& state) {
  double trace = 0.0;
  for (const auto& term : dyads(state)) {
    std::complex<double> product = term.coeff;
    for (std::size_t k = 0; k < term.ket.size(); ++k)
      product *= coherent_overlap_numeric(term.bra[k], term.ket[k]);
    trace += product.real();
  }
  return trace;
}

double gaussian_lp(double variance, double alpha) {
  return std::pow(std::pow(2.0 * kPi * variance, 0.5 * (1.0 - alpha)) /
                      std::sqrt(alpha),
                  1.0 / alpha);
}

double gaussian_renyi(double variance, double alpha) {
  if (alpha == 1.0) return gaussian_shannon(variance);
  return 0.5 * std::log(2.0 * kPi * variance) +
         std::log(alpha) / (2.0 * (alpha - 1.0));
}

double gaussian_shannon(double variance) {
  return 0.5 * std::log(2.0 * kPi * std::numbers::e * variance);
}

cvren::AnalyticDensity random_gaussian_mixture(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_real_distribution<double> mean_dist(-2.5, 2.5);
  std::uniform_real_distribution<double> var_dist(0.2, 3.0);
  std::uniform_real_distribution<double> weight_dist(0.1, 1.0);
  const int count = count_dist(rng);
  std::vector<cvren::ComplexGaussianTerm> terms;
  double total = 0.0;
  std::vector<double> weights(count);
  for (int i = 0; i < count; ++i) {
    weights[i] = weight_dist(rng);
    total += weights[i];
  }
  for (int i = 0; i < count; ++i) {
    auto t = cvren::ComplexGaussianTerm::gaussian(mean_dist(rng), var_dist(rng));
    t.amplitude *= weights[i] / total;
    terms.push_back(t);
  }
  return cvren::AnalyticDensity(std::move(terms));
}

}  // namespace oracles
