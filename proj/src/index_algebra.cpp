#include "cvren/index_algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cvren {

namespace {

// x ln x with the 0 ln 0 = 0 convention.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// r ln|r|, continuous through r = 0.
double xlogabsx(double r) { return r == 0.0 ? 0.0 : r * std::log(std::abs(r)); }

void require_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::domain_error(std::string(what) + ": argument outside [0,1]");
}

}  // namespace

Index conjugate_index(double x) {
  if (x == 0.0) throw std::domain_error("conjugate_index: x must be nonzero");
  if (x == 1.0) return Index::infinity();
  return Index(x / (x - 1.0));
}

Index conjugate_index(const Index& x) {
  if (x.is_infinity()) return Index(1.0);
  return conjugate_index(x.value());
}

EntropicIndexPair EntropicIndexPair::from_order(double t) {
  require_unit_interval(t, "EntropicIndexPair");
  Index a = (t == 1.0) ? Index::infinity() : Index(1.0 / (1.0 - t));
  return EntropicIndexPair{t, a, 1.0 / (1.0 + t)};
}

SubsystemIndexSet SubsystemIndexSet::from_order(int n, double t) {
  if (n < 2) throw std::domain_error("SubsystemIndexSet: n must be >= 2");
  require_unit_interval(t, "SubsystemIndexSet");
  const double tau = t / n;
  Index alpha_conj = (tau == 0.0) ? Index::infinity() : Index(1.0 / tau);
  Index beta_conj = (tau == 0.0) ? Index::infinity() : Index(-1.0 / tau);
  return SubsystemIndexSet{n,
                           tau,
                           1.0 / (1.0 - tau),
                           1.0 / (1.0 + tau),
                           alpha_conj,
                           beta_conj};
}

double kappa(double tau) {
  require_unit_interval(tau, "kappa");
  if (tau < 1e-6) {
    // ln kappa = 1 - tau^2/6 - tau^4/20 - ...
    return std::exp(1.0 - tau * tau / 6.0);
  }
  return std::exp((xlogx(1.0 + tau) - xlogx(1.0 - tau)) / (2.0 * tau));
}

double big_k(double t) { return kappa(t); }

double log_young_c(double x, const Index& x_conj) {
  if (x <= 0.0) throw std::domain_error("young_c: x must be positive");
  // (1/x') ln(1/|x'|) = r' ln|r'| with r' = 1/x'; same rewrite for the x term.
  return 0.5 * (xlogabsx(x_conj.reciprocal()) - xlogabsx(1.0 / x));
}

double young_c(double x, const Index& x_conj) {
  return std::exp(log_young_c(x, x_conj));
}

double young_c(double x) { return young_c(x, conjugate_index(x)); }

double young_c_product_form(double x, const Index& x_conj) {
  if (x <= 0.0) throw std::domain_error("young_c: x must be positive");
  double c2 = std::pow(std::abs(x), 1.0 / x);
  if (!x_conj.is_infinity()) {
    const double xc = x_conj.value();
    c2 *= std::pow(std::abs(xc), -1.0 / xc);
  }
  return std::sqrt(c2);
}

double criterion_bound(int n, double t) {
  if (n < 2) throw std::domain_error("criterion_bound: n must be >= 2");
  return std::log(static_cast<double>(n) * big_k(t) * std::numbers::pi);
}

double constant_identity_residual(int n, double t) {
  if (!(t > 0.0 && t < 1.0))
    throw std::domain_error("constant_identity_residual: t must lie in (0,1)");
  const auto pair = EntropicIndexPair::from_order(t);
  const auto subs = SubsystemIndexSet::from_order(n, t);
  const double log_ca = log_young_c(pair.a.value(), conjugate_index(pair.a.value()));
  const double log_cb = log_young_c(pair.b, conjugate_index(pair.b));
  const double log_calpha = log_young_c(subs.alpha, subs.alpha_conj);
  const double log_cbeta = log_young_c(subs.beta, subs.beta_conj);
  const double lhs =
      (log_ca + n * log_cbeta - n * log_calpha - log_cb) / t +
      std::log(kappa(subs.tau) * std::numbers::pi);
  return lhs - criterion_bound(n, t);
}

}  // namespace cvren
