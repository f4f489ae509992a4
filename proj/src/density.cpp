#include "cvren/density.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cvren/quadrature.hpp"

namespace cvren {

namespace {

constexpr double kPi = std::numbers::pi;

double gauss_tail(double u) {
  // P(X > u) for a standard normal.
  return 0.5 * std::erfc(u / std::numbers::sqrt2);
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::complex<double> ComplexGaussianTerm::value(double x) const {
  const std::complex<double> dx = x - mean;
  const std::complex<double> expo =
      -dx * dx / (2.0 * variance) +
      std::complex<double>(0.0, frequency * x);
  return amplitude * std::exp(expo);
}

ComplexGaussianTerm ComplexGaussianTerm::canonical() const {
  if (variance <= 0.0)
    throw std::invalid_argument("ComplexGaussianTerm: variance must be > 0");
  const double mu_im = mean.imag();
  if (mu_im == 0.0) return *this;
  const double mu_re = mean.real();
  // exp(-(x-mu_re-i mu_im)^2/(2s2)) =
  //   exp(-(x-mu_re)^2/(2s2)) exp(i (mu_im/s2) x)
  //   exp(mu_im^2/(2s2) - i mu_im mu_re / s2)
  const std::complex<double> factor =
      std::exp(std::complex<double>(mu_im * mu_im / (2.0 * variance),
                                    -mu_im * mu_re / variance));
  return ComplexGaussianTerm{amplitude * factor, mu_re, variance,
                             frequency + mu_im / variance};
}

std::complex<double> ComplexGaussianTerm::integral() const {
  const ComplexGaussianTerm t = canonical();
  const double mu = t.mean.real();
  const std::complex<double> phase(
      -t.frequency * t.frequency * t.variance / 2.0, t.frequency * mu);
  return t.amplitude * std::sqrt(2.0 * kPi * t.variance) * std::exp(phase);
}

double ComplexGaussianTerm::abs_tail_mass_outside(double lo, double hi) const {
  const ComplexGaussianTerm t = canonical();
  const double mu = t.mean.real();
  const double sigma = std::sqrt(t.variance);
  const double mass = std::abs(t.amplitude) * std::sqrt(2.0 * kPi * t.variance);
  return mass * (gauss_tail((hi - mu) / sigma) + gauss_tail((mu - lo) / sigma));
}

ComplexGaussianTerm ComplexGaussianTerm::conjugated() const {
  return ComplexGaussianTerm{std::conj(amplitude), std::conj(mean), variance,
                             -frequency};
}

ComplexGaussianTerm ComplexGaussianTerm::reflected(int sign) const {
  if (sign == 1) return *this;
  if (sign != -1)
    throw std::invalid_argument("reflected: sign must be +1 or -1");
  return ComplexGaussianTerm{amplitude, -mean, variance, -frequency};
}

ComplexGaussianTerm ComplexGaussianTerm::gaussian(double mean, double variance) {
  if (variance <= 0.0)
    throw std::invalid_argument("gaussian: variance must be > 0");
  return ComplexGaussianTerm{1.0 / std::sqrt(2.0 * kPi * variance), mean,
                             variance, 0.0};
}

ComplexGaussianTerm convolve(const ComplexGaussianTerm& lhs,
                             const ComplexGaussianTerm& rhs) {
  const ComplexGaussianTerm t1 = lhs.canonical();
  const ComplexGaussianTerm t2 = rhs.canonical();
  const double c1 = 1.0 / (2.0 * t1.variance);
  const double c2 = 1.0 / (2.0 * t2.variance);
  const double csum = c1 + c2;
  const std::complex<double> b1(t1.mean.real() / t1.variance, t1.frequency);
  const std::complex<double> b2(t2.mean.real() / t2.variance, t2.frequency);
  const std::complex<double> b_out = (b1 * c2 + b2 * c1) / csum;
  const double var_out = t1.variance + t2.variance;
  const double mu_out = b_out.real() * var_out;
  const double freq_out = b_out.imag();
  const std::complex<double> diff = b1 - b2;
  // Assemble the full exponent before exponentiating; the pieces can be
  // individually huge while their sum stays moderate.
  const std::complex<double> expo =
      std::complex<double>(-t1.mean.real() * t1.mean.real() / (2.0 * t1.variance) -
                               t2.mean.real() * t2.mean.real() / (2.0 * t2.variance) +
                               mu_out * mu_out / (2.0 * var_out),
                           0.0) +
      diff * diff / (4.0 * csum);
  const std::complex<double> amp_out =
      t1.amplitude * t2.amplitude * std::sqrt(kPi / csum) * std::exp(expo);
  return ComplexGaussianTerm{amp_out, mu_out, var_out, freq_out};
}

namespace {

bool same_shape(const ComplexGaussianTerm& a, const ComplexGaussianTerm& b) {
  const double tol = 1e-9;
  auto close = [tol](double x, double y) {
    return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
  };
  return close(a.mean.real(), b.mean.real()) && close(a.variance, b.variance) &&
         close(a.frequency, b.frequency);
}

}  // namespace

AnalyticDensity::AnalyticDensity(std::vector<ComplexGaussianTerm> raw) {
  if (raw.empty())
    throw std::invalid_argument("AnalyticDensity: empty term list");
  // Canonicalize, then close under conjugation: each term enters as
  // (t + conj(t))/2, which leaves already-real sums unchanged and makes
  // realness structural.
  std::vector<ComplexGaussianTerm> paired;
  paired.reserve(2 * raw.size());
  for (const auto& term : raw) {
    ComplexGaussianTerm t = term.canonical();
    if (std::abs(t.amplitude) == 0.0) continue;
    t.amplitude *= 0.5;
    paired.push_back(t);
    paired.push_back(t.conjugated());
  }
  if (paired.empty())
    throw std::invalid_argument("AnalyticDensity: all terms vanish");
  // Merge terms sharing the same Gaussian shape.
  for (const auto& t : paired) {
    bool merged = false;
    for (auto& kept : terms_) {
      if (same_shape(kept, t)) {
        kept.amplitude += t.amplitude;
        merged = true;
        break;
      }
    }
    if (!merged) terms_.push_back(t);
  }
  std::erase_if(terms_, [](const ComplexGaussianTerm& t) {
    return std::abs(t.amplitude) == 0.0;
  });

  // Normalize to unit mass using the closed-form term integrals.
  std::complex<double> total{0.0, 0.0};
  for (const auto& t : terms_) total += t.integral();
  if (!(total.real() > 0.0) ||
      std::abs(total.imag()) > 1e-10 * std::max(1.0, std::abs(total.real())))
    throw std::invalid_argument("AnalyticDensity: term sum has no positive mass");
  for (auto& t : terms_) t.amplitude /= total.real();

  // Truncation domain and structure bounds.
  double lo = terms_.front().mean.real(), hi = lo;
  for (const auto& t : terms_) {
    lo = std::min(lo, t.mean.real());
    hi = std::max(hi, t.mean.real());
    max_std_ = std::max(max_std_, std::sqrt(t.variance));
    max_freq_ = std::max(max_freq_, std::abs(t.frequency));
  }
  lo_ = lo - 12.0 * max_std_;
  hi_ = hi + 12.0 * max_std_;

  // Probe realness and nonnegativity on a grid resolving every oscillation.
  std::size_t npts = 2049;
  if (max_freq_ > 0.0) {
    const double needed = 8.0 * (hi_ - lo_) * max_freq_ / (2.0 * kPi);
    npts = std::max<std::size_t>(npts, static_cast<std::size_t>(needed) + 1);
    npts = std::min<std::size_t>(npts, 65537);
  }
  double peak = 0.0, worst_neg = 0.0, worst_imag = 0.0;
  for (std::size_t i = 0; i < npts; ++i) {
    const double x = lo_ + (hi_ - lo_) * i / (npts - 1);
    const std::complex<double> v = complex_value(x);
    peak = std::max(peak, v.real());
    worst_neg = std::min(worst_neg, v.real());
    worst_imag = std::max(worst_imag, std::abs(v.imag()));
  }
  if (worst_neg < -1e-9 * std::max(peak, 1e-300))
    throw std::invalid_argument("AnalyticDensity: density has negative lobes");
  if (worst_imag > 1e-10 * std::max(peak, 1e-300))
    throw std::invalid_argument("AnalyticDensity: density is not real");
}

AnalyticDensity AnalyticDensity::gaussian(double mean, double variance) {
  return AnalyticDensity({ComplexGaussianTerm::gaussian(mean, variance)});
}

std::complex<double> AnalyticDensity::complex_value(double x) const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& t : terms_) sum += t.value(x);
  return sum;
}

double AnalyticDensity::operator()(double x) const {
  const double v = complex_value(x).real();
  return v < 0.0 ? 0.0 : v;  // clip roundoff lobes
}

double AnalyticDensity::tail_mass_outside(double lo, double hi) const {
  double tail = 0.0;
  for (const auto& t : terms_) tail += t.abs_tail_mass_outside(lo, hi);
  return tail;
}

std::vector<double> AnalyticDensity::quadrature_breakpoints() const {
  std::vector<double> pts{lo_, hi_};
  for (const auto& t : terms_) {
    const double mu = t.mean.real();
    const double sigma = std::sqrt(t.variance);
    for (double k : {-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0}) {
      const double x = mu + k * sigma;
      if (x > lo_ && x < hi_) pts.push_back(x);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // Subdivide so no panel spans more than half an oscillation period.
  double max_gap = (hi_ - lo_) / 16.0;
  if (max_freq_ > 0.0) max_gap = std::min(max_gap, kPi / max_freq_);
  std::vector<double> out;
  out.reserve(256);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    out.push_back(pts[i]);
    const double gap = pts[i + 1] - pts[i];
    const int splits = static_cast<int>(gap / max_gap);
    for (int s = 1; s <= splits; ++s)
      out.push_back(pts[i] + gap * s / (splits + 1));
  }
  out.push_back(pts.back());
  return out;
}

AnalyticDensity convolve(const AnalyticDensity& lhs, const AnalyticDensity& rhs) {
  std::vector<ComplexGaussianTerm> terms;
  terms.reserve(lhs.terms().size() * rhs.terms().size());
  for (const auto& a : lhs.terms())
    for (const auto& b : rhs.terms()) terms.push_back(convolve(a, b));
  return AnalyticDensity(std::move(terms));
}

AnalyticDensity reflect_scale(const AnalyticDensity& d, int sign) {
  std::vector<ComplexGaussianTerm> terms;
  terms.reserve(d.terms().size());
  for (const auto& t : d.terms()) terms.push_back(t.reflected(sign));
  return AnalyticDensity(std::move(terms));
}

AnalyticDensity mix(const std::vector<double>& weights,
                    const std::vector<AnalyticDensity>& densities) {
  if (weights.size() != densities.size() || weights.empty())
    throw std::invalid_argument("mix: weights and densities must match");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("mix: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("mix: weights must sum to 1 within 1e-12");
  std::vector<ComplexGaussianTerm> terms;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (auto t : densities[i].terms()) {
      t.amplitude *= weights[i];
      terms.push_back(t);
    }
  }
  return AnalyticDensity(std::move(terms));
}

GridDensity::GridDensity(double left_edge, double spacing,
                         std::vector<double> values, double source_tail_mass)
    : left_edge_(left_edge), spacing_(spacing), values_(std::move(values)) {
  if (!(spacing_ > 0.0))
    throw std::invalid_argument("GridDensity: spacing must be > 0");
  if (values_.size() < 2)
    throw std::invalid_argument("GridDensity: need at least two samples");
  if (!(source_tail_mass < 1e-12))
    throw std::invalid_argument(
        "GridDensity: domain does not cover the source density");
  double mass = 0.0;
  for (auto& v : values_) {
    if (v < 0.0) {
      if (v < -1e-9) throw std::invalid_argument("GridDensity: negative value");
      v = 0.0;
    }
    mass += v;
  }
  mass -= 0.5 * (values_.front() + values_.back());
  mass *= spacing_;
  if (!(mass > 0.0))
    throw std::invalid_argument("GridDensity: zero mass");
  for (auto& v : values_) v /= mass;
}

GridDensity GridDensity::sample(const AnalyticDensity& d, double spacing) {
  const double lo = d.domain_min();
  const double hi = d.domain_max();
  const std::size_t count =
      static_cast<std::size_t>(std::ceil((hi - lo) / spacing)) + 1;
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = d(lo + spacing * i);
  const double tail = d.tail_mass_outside(lo, lo + spacing * (count - 1));
  return GridDensity(lo, spacing, std::move(values), tail);
}

GridDensity convolve_grid(const GridDensity& lhs, const GridDensity& rhs) {
  const double h = lhs.spacing();
  if (std::abs(h - rhs.spacing()) > 1e-12 * h)
    throw std::invalid_argument("convolve_grid: spacing mismatch");
  const std::size_t n1 = lhs.values().size();
  const std::size_t n2 = rhs.values().size();
  const std::size_t full = n1 + n2 - 1;
  std::size_t padded = 16;
  while (padded < full) padded *= 2;

  static std::mutex planner_mutex;
  std::vector<double> a(padded, 0.0), b(padded, 0.0), out(padded, 0.0);
  std::copy(lhs.values().begin(), lhs.values().end(), a.begin());
  std::copy(rhs.values().begin(), rhs.values().end(), b.begin());
  const std::size_t spec = padded / 2 + 1;
  std::vector<fftw_complex> fa(spec), fb(spec);
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_plan pa = fftw_plan_dft_r2c_1d(static_cast<int>(padded), a.data(),
                                        fa.data(), FFTW_ESTIMATE);
    fftw_plan pb = fftw_plan_dft_r2c_1d(static_cast<int>(padded), b.data(),
                                        fb.data(), FFTW_ESTIMATE);
    fftw_execute(pa);
    fftw_execute(pb);
    fftw_destroy_plan(pa);
    fftw_destroy_plan(pb);
    for (std::size_t i = 0; i < spec; ++i) {
      const double re = fa[i][0] * fb[i][0] - fa[i][1] * fb[i][1];
      const double im = fa[i][0] * fb[i][1] + fa[i][1] * fb[i][0];
      fa[i][0] = re;
      fa[i][1] = im;
    }
    fftw_plan pinv = fftw_plan_dft_c2r_1d(static_cast<int>(padded), fa.data(),
                                          out.data(), FFTW_ESTIMATE);
    fftw_execute(pinv);
    fftw_destroy_plan(pinv);
  }
  // Discrete convolution approximates the integral with one factor of the
  // grid spacing; the c2r transform leaves a factor of `padded` to undo.
  std::vector<double> values(full);
  const double scale = h / static_cast<double>(padded);
  for (std::size_t i = 0; i < full; ++i) {
    double v = out[i] * scale;
    if (v < 0.0 && v > -1e-9) v = 0.0;
    values[i] = v;
  }
  return GridDensity(lhs.left_edge() + rhs.left_edge(), h, std::move(values),
                     0.0);
}

void write_csv(const GridDensity& d, std::ostream& out) {
  out << "x,density\n";
  for (std::size_t i = 0; i < d.values().size(); ++i)
    out << format12(d.x_at(i)) << ',' << format12(d.values()[i]) << '\n';
}

GridDensity read_grid_density_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("grid CSV: empty input");
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line != "x,density")
    throw std::invalid_argument("grid CSV: expected header 'x,density'");
  std::vector<double> xs, vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    if (!std::getline(row, field, ',')) break;
    const double x = std::stod(field);
    if (!std::getline(row, field, ','))
      throw std::invalid_argument("grid CSV: missing density column");
    xs.push_back(x);
    vs.push_back(std::stod(field));
  }
  if (xs.size() < 2) throw std::invalid_argument("grid CSV: too few rows");
  const double spacing = (xs.back() - xs.front()) / (xs.size() - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::abs(xs[i] - (xs.front() + spacing * i)) > 1e-9 * (1.0 + std::abs(xs[i])))
      throw std::invalid_argument("grid CSV: grid is not uniform");
  }
  double mass = 0.0;
  for (double v : vs) mass += v;
  mass *= spacing;
  const double edge_tail = (vs.front() + vs.back()) * spacing;
  return GridDensity(xs.front(), spacing, std::move(vs),
                     mass > 0.0 ? edge_tail / mass : 1.0);
}

namespace {

double pow_clamped(double v, double alpha) {
  return v <= 0.0 ? 0.0 : std::pow(v, alpha);
}

}  // namespace

double lp_functional(const AnalyticDensity& d, double alpha) {
  if (!(alpha > 0.0))
    throw std::domain_error("lp_functional: alpha must be positive");
  const auto pts = d.quadrature_breakpoints();
  const double integral = integrate_panels(
      [&d, alpha](double x) { return pow_clamped(d(x), alpha); }, pts);
  return std::pow(integral, 1.0 / alpha);
}

double lp_functional(const AnalyticDensity& d, const Index& alpha) {
  return alpha.is_infinity() ? sup_value(d) : lp_functional(d, alpha.value());
}

double lp_functional(const GridDensity& d, double alpha) {
  if (!(alpha > 0.0))
    throw std::domain_error("lp_functional: alpha must be positive");
  const auto& v = d.values();
  double sum = 0.0;
  for (double x : v) sum += pow_clamped(x, alpha);
  sum -= 0.5 * (pow_clamped(v.front(), alpha) + pow_clamped(v.back(), alpha));
  return std::pow(sum * d.spacing(), 1.0 / alpha);
}

double lp_functional(const GridDensity& d, const Index& alpha) {
  if (alpha.is_infinity())
    return *std::max_element(d.values().begin(), d.values().end());
  return lp_functional(d, alpha.value());
}

double sup_value(const AnalyticDensity& d) {
  const double lo = d.domain_min();
  const double hi = d.domain_max();
  std::size_t npts = 4097;
  if (d.max_frequency() > 0.0) {
    const double needed = 16.0 * (hi - lo) * d.max_frequency() / (2.0 * kPi);
    npts = std::max<std::size_t>(npts, static_cast<std::size_t>(needed) + 1);
    npts = std::min<std::size_t>(npts, 131073);
  }
  const double h = (hi - lo) / (npts - 1);
  double best_x = lo, best = d(lo);
  for (std::size_t i = 1; i < npts; ++i) {
    const double x = lo + h * i;
    const double v = d(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  // Golden-section refinement around the best cell.
  double a = best_x - h, b = best_x + h;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), e = a + gr * (b - a);
  double fc = d(c), fe = d(e);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + std::abs(best_x)); ++it) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - gr * (b - a);
      fc = d(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + gr * (b - a);
      fe = d(e);
    }
  }
  return std::max(best, std::max(fc, fe));
}

double integrate_density_transform(const AnalyticDensity& d,
                                   double (*transform)(double),
                                   double rel_tol) {
  QuadratureOptions opt;
  opt.rel_tol = rel_tol;
  const auto pts = d.quadrature_breakpoints();
  return integrate_panels(
      [&d, transform](double x) { return transform(d(x)); }, pts, opt);
}

namespace {

// Orthonormal harmonic-oscillator eigenfunction (Hermite-Gauss).
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

}  // namespace

CriterionReport fourier_pair_check(int hermite_index, double alpha, double beta) {
  if (hermite_index < 0)
    throw std::invalid_argument("fourier_pair_check: index must be >= 0");
  if (!(alpha > 1.0) || !(beta > 0.0 && beta < 1.0) ||
      std::abs(1.0 / alpha + 1.0 / beta - 2.0) > 1e-9)
    throw std::invalid_argument(
        "fourier_pair_check: need 1/alpha + 1/beta = 2 with alpha > 1 > beta");
  const int k = hermite_index;
  const double radius = std::sqrt(2.0 * k + 1.0) + 12.0;
  const int panels = 8 * (k + 1) + 32;
  auto norm = [&](double order) {
    return std::pow(
        integrate(
            [k, order](double x) {
              const double phi = hermite_function(k, x);
              return std::pow(phi * phi, order);
            },
            -radius, radius, {}, panels),
        1.0 / order);
  };
  const double tau = 1.0 - 1.0 / alpha;
  // The momentum density of a Fourier eigenfunction equals its position
  // density, so both sides use the same profile.
  const double bound = std::pow(1.0 / (kappa(tau) * kPi), (1.0 - beta) / beta) *
                       norm(beta);
  const double norm_alpha = norm(alpha);
  CriterionParams params;
  params.a = alpha;
  params.b = beta;
  params.t = tau;
  params.hermite_index = k;
  return CriterionReport::make(ConditionId::HausdorffYoung, bound, norm_alpha,
                               params);
}

}  // namespace cvren
