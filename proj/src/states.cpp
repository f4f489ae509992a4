#include "cvren/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cvren {

namespace {

constexpr double kPi = std::numbers::pi;

void require_sign(int s, const char* what) {
  if (s != 1 && s != -1)
    throw std::invalid_argument(std::string(what) + ": signs must be +1 or -1");
}

}  // namespace

QuadratureConfig QuadratureConfig::standard(int n) {
  QuadratureConfig cfg;
  cfg.n = n;
  cfg.thetas.assign(n, 0.0);
  cfg.r_signs.resize(n);
  for (int l = 0; l < n; ++l) cfg.r_signs[l] = (l % 2 == 0) ? 1 : -1;
  cfg.s_signs.assign(n, 1);
  cfg.validate();
  return cfg;
}

QuadratureConfig QuadratureConfig::all_plus(int n) {
  QuadratureConfig cfg;
  cfg.n = n;
  cfg.thetas.assign(n, 0.0);
  cfg.r_signs.assign(n, 1);
  cfg.s_signs.assign(n, 1);
  cfg.validate();
  return cfg;
}

int QuadratureConfig::commutator_sum() const {
  int sum = 0;
  for (int l = 0; l < n; ++l) sum += r_signs[l] * s_signs[l];
  return sum;
}

void QuadratureConfig::validate() const {
  if (n < 2) throw std::invalid_argument("QuadratureConfig: n must be >= 2");
  if (static_cast<int>(thetas.size()) != n ||
      static_cast<int>(r_signs.size()) != n ||
      static_cast<int>(s_signs.size()) != n)
    throw std::invalid_argument("QuadratureConfig: per-subsystem lists must have length n");
  for (int l = 0; l < n; ++l) {
    require_sign(r_signs[l], "QuadratureConfig");
    require_sign(s_signs[l], "QuadratureConfig");
  }
}

int subsystem_count(const StateSpec& state) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoherentProduct>)
          return static_cast<int>(s.amplitudes.size());
        else
          return s.n;
      },
      state);
}

bool is_pure(const StateSpec& state) {
  return !std::holds_alternative<DephasedCat>(state);
}

void validate_state(const StateSpec& state) {
  if (const auto* cp = std::get_if<CoherentProduct>(&state)) {
    if (cp->amplitudes.size() < 2)
      throw std::invalid_argument("CoherentProduct: need at least 2 subsystems");
  } else if (const auto* dc = std::get_if<DephasedCat>(&state)) {
    if (dc->n < 2) throw std::invalid_argument("DephasedCat: n must be >= 2");
    if (dc->c < 0.0 || dc->c > 1.0)
      throw std::invalid_argument("DephasedCat: c must lie in [0,1]");
  } else if (const auto* ac = std::get_if<AntisymCatPure>(&state)) {
    if (ac->n < 2 || ac->n % 2 != 0)
      throw std::invalid_argument("AntisymCatPure: n must be even and >= 2");
    if (ac->z == 0.0)
      throw std::invalid_argument("AntisymCatPure: state vanishes at z = 0");
  }
}

namespace detail {

std::complex<double> coherent_overlap(std::complex<double> bra,
                                      std::complex<double> ket) {
  return std::exp(-0.5 * std::norm(bra) - 0.5 * std::norm(ket) +
                  std::conj(bra) * ket);
}

ComplexGaussianTerm coherent_kernel(std::complex<double> z_ket,
                                    std::complex<double> z_bra, double theta,
                                    Observable which, int sign) {
  require_sign(sign, "coherent_kernel");
  // In the eigenbasis of cos(theta) x + sin(theta) p a coherent state
  // behaves as |exp(-i theta) z>; the S quadrature is the R quadrature at
  // theta + pi/2.
  const double angle = theta + (which == Observable::S ? kPi / 2.0 : 0.0);
  const std::complex<double> rot = std::polar(1.0, -angle);
  const std::complex<double> zk = rot * z_ket;
  const std::complex<double> zb = rot * z_bra;
  const double rk = zk.real(), ik = zk.imag();
  const double rb = zb.real(), ib = zb.imag();
  // <r|z_ket><z_bra|r> with <r|z> = pi^{-1/4}
  //   exp(-(r - sqrt2 Re z)^2/2 + i sqrt2 Im z r - i Re z Im z).
  const std::complex<double> amplitude =
      std::exp(std::complex<double>(-0.5 * (rk - rb) * (rk - rb),
                                    -(rk * ik - rb * ib))) /
      std::sqrt(kPi);
  ComplexGaussianTerm term{amplitude, (rk + rb) / std::numbers::sqrt2, 0.5,
                           std::numbers::sqrt2 * (ik - ib)};
  return term.reflected(sign);
}

std::vector<OperatorTerm> decompose(const StateSpec& state) {
  validate_state(state);
  std::vector<OperatorTerm> terms;
  if (const auto* cp = std::get_if<CoherentProduct>(&state)) {
    terms.push_back({1.0, cp->amplitudes, cp->amplitudes});
  } else if (const auto* dc = std::get_if<DephasedCat>(&state)) {
    const std::vector<std::complex<double>> plus(dc->n, dc->z);
    const std::vector<std::complex<double>> minus(dc->n, -dc->z);
    terms.push_back({1.0, plus, plus});
    terms.push_back({1.0, minus, minus});
    terms.push_back({-(1.0 - dc->c), plus, minus});
    terms.push_back({-(1.0 - dc->c), minus, plus});
  } else {
    const auto& ac = std::get<AntisymCatPure>(state);
    const int m = ac.n / 2;
    std::vector<std::complex<double>> head(ac.n), swapped(ac.n);
    for (int l = 0; l < ac.n; ++l) {
      head[l] = (l < m) ? ac.z : -ac.z;
      swapped[l] = (l < m) ? -ac.z : ac.z;
    }
    terms.push_back({1.0, head, head});
    terms.push_back({1.0, swapped, swapped});
    terms.push_back({-1.0, head, swapped});
    terms.push_back({-1.0, swapped, head});
  }
  return terms;
}

}  // namespace detail

AnalyticDensity coherent_quadrature_density(std::complex<double> z, double theta,
                                            Observable which, int sign) {
  return AnalyticDensity({detail::coherent_kernel(z, z, theta, which, sign)});
}

namespace {

const std::vector<int>& signs_for(const QuadratureConfig& cfg, Observable which) {
  return which == Observable::R ? cfg.r_signs : cfg.s_signs;
}

AnalyticDensity global_marginal(const std::vector<detail::OperatorTerm>& terms,
                                const QuadratureConfig& cfg, Observable which) {
  const auto& signs = signs_for(cfg, which);
  std::vector<ComplexGaussianTerm> carriers;
  carriers.reserve(terms.size());
  for (const auto& op : terms) {
    ComplexGaussianTerm acc = detail::coherent_kernel(
        op.ket[0], op.bra[0], cfg.thetas[0], which, signs[0]);
    for (int l = 1; l < cfg.n; ++l) {
      acc = convolve(acc, detail::coherent_kernel(op.ket[l], op.bra[l],
                                                  cfg.thetas[l], which, signs[l]));
    }
    acc.amplitude *= op.coeff;
    carriers.push_back(acc);
  }
  // The AnalyticDensity constructor rescales to unit mass, which absorbs
  // the state's normalization prefactor exactly.
  return AnalyticDensity(std::move(carriers));
}

}  // namespace

MarginalPair marginal_pair(const StateSpec& state, const QuadratureConfig& config) {
  config.validate();
  if (subsystem_count(state) != config.n)
    throw std::invalid_argument("marginal_pair: state and config dimension mismatch");
  const auto terms = detail::decompose(state);
  return MarginalPair{global_marginal(terms, config, Observable::R),
                      global_marginal(terms, config, Observable::S)};
}

std::vector<MarginalPair> local_reduced_densities(const StateSpec& state,
                                                  const QuadratureConfig& config) {
  config.validate();
  const int n = subsystem_count(state);
  if (n != config.n)
    throw std::invalid_argument("local_reduced_densities: dimension mismatch");
  const auto terms = detail::decompose(state);
  std::vector<MarginalPair> out;
  out.reserve(n);
  for (int l = 0; l < n; ++l) {
    std::vector<ComplexGaussianTerm> w_terms, u_terms;
    for (const auto& op : terms) {
      // Partial trace over the other modes multiplies the dyad by their
      // overlaps <bra_k|ket_k>.
      std::complex<double> coeff = op.coeff;
      for (int k = 0; k < n; ++k)
        if (k != l) coeff *= detail::coherent_overlap(op.bra[k], op.ket[k]);
      ComplexGaussianTerm w = detail::coherent_kernel(
          op.ket[l], op.bra[l], config.thetas[l], Observable::R, config.r_signs[l]);
      ComplexGaussianTerm u = detail::coherent_kernel(
          op.ket[l], op.bra[l], config.thetas[l], Observable::S, config.s_signs[l]);
      w.amplitude *= coeff;
      u.amplitude *= coeff;
      w_terms.push_back(w);
      u_terms.push_back(u);
    }
    out.push_back(MarginalPair{AnalyticDensity(std::move(w_terms)),
                               AnalyticDensity(std::move(u_terms))});
  }
  return out;
}

double normalization_factor(const StateSpec& state) {
  const auto terms = detail::decompose(state);
  std::complex<double> trace{0.0, 0.0};
  for (const auto& op : terms) {
    std::complex<double> product = op.coeff;
    for (std::size_t k = 0; k < op.ket.size(); ++k)
      product *= detail::coherent_overlap(op.bra[k], op.ket[k]);
    trace += product;
  }
  if (!(trace.real() > 0.0))
    throw std::invalid_argument("normalization_factor: vanishing trace");
  return 1.0 / trace.real();
}

}  // namespace cvren
