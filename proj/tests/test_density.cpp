#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "cvren/density.hpp"
#include "cvren/validate.hpp"
#include "oracles.hpp"

using namespace cvren;

TEST_CASE("gaussian term convolution adds means and variances") {
  const auto g1 = ComplexGaussianTerm::gaussian(0.0, 0.5);
  const auto g2 = ComplexGaussianTerm::gaussian(0.0, 0.5);
  const auto conv = convolve(g1, g2);
  CHECK(conv.mean.real() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(conv.variance == doctest::Approx(1.0).epsilon(1e-14));

  const auto a = ComplexGaussianTerm::gaussian(1.3, 0.7);
  const auto b = ComplexGaussianTerm::gaussian(-2.1, 2.2);
  const auto c = convolve(a, b);
  CHECK(c.mean.real() == doctest::Approx(-0.8).epsilon(1e-13));
  CHECK(c.variance == doctest::Approx(2.9).epsilon(1e-13));
  CHECK(c.integral().real() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("term convolution matches direct numerical convolution") {
  // Oscillatory complex terms: check the closed form against a Riemann sum.
  const ComplexGaussianTerm t1{std::complex<double>(0.4, 0.2), 0.7, 0.6, 1.8};
  const ComplexGaussianTerm t2{std::complex<double>(0.3, -0.1), -0.4, 1.1, -0.9};
  const auto conv = convolve(t1, t2);
  for (double x : {-1.5, 0.0, 0.8, 2.4}) {
    std::complex<double> direct{0.0, 0.0};
    const double h = 1e-3;
    for (double y = -14.0; y <= 14.0; y += h)
      direct += t1.value(y) * t2.value(x - y) * h;
    CHECK(std::abs(conv.value(x) - direct) < 1e-9);
  }
}

TEST_CASE("analytic density normalizes and is structurally real") {
  // A cosine-modulated Gaussian entered as a single complex term.
  std::vector<ComplexGaussianTerm> terms;
  auto g = ComplexGaussianTerm::gaussian(0.0, 1.0);
  terms.push_back(g);
  ComplexGaussianTerm osc{std::complex<double>(0.2, 0.0), 0.0, 1.0, 3.0};
  terms.push_back(osc);
  const AnalyticDensity d(terms);
  double mass = 0.0;
  const double h = 1e-3;
  for (double x = d.domain_min(); x <= d.domain_max(); x += h) {
    const auto v = d.complex_value(x);
    CHECK(std::abs(v.imag()) < 1e-12);
    CHECK(v.real() > -1e-12);
  }
  for (double x = -14.0; x <= 14.0; x += h) mass += d(x) * h;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("analytic density rejects negative lobes") {
  // Overweighted oscillation makes the sum dip negative.
  std::vector<ComplexGaussianTerm> terms;
  terms.push_back(ComplexGaussianTerm::gaussian(0.0, 1.0));
  terms.push_back(ComplexGaussianTerm{std::complex<double>(0.9, 0.0), 0.0, 1.0, 2.0});
  CHECK_THROWS_AS(AnalyticDensity(std::move(terms)), std::invalid_argument);
}

TEST_CASE("reflect_scale examples") {
  const AnalyticDensity d = AnalyticDensity::gaussian(1.2, 0.8);
  const AnalyticDensity same = reflect_scale(d, 1);
  CHECK(same.terms().size() == d.terms().size());
  CHECK(same.terms()[0].mean.real() == doctest::Approx(1.2));
  const AnalyticDensity twice = reflect_scale(reflect_scale(d, -1), -1);
  CHECK(twice.terms()[0].mean.real() == doctest::Approx(1.2).epsilon(1e-14));
  for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
    CHECK(lp_functional(reflect_scale(d, -1), alpha) ==
          doctest::Approx(lp_functional(d, alpha)).epsilon(1e-10));
  }
}

TEST_CASE("mix examples") {
  const AnalyticDensity d1 = AnalyticDensity::gaussian(-2.0, 0.5);
  const AnalyticDensity d2 = AnalyticDensity::gaussian(2.0, 0.5);
  const AnalyticDensity single = mix({1.0}, {d1});
  CHECK(single.terms().size() == 1);
  const AnalyticDensity both = mix({0.5, 0.5}, {d1, d2});
  CHECK(lp_functional(both, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(both(2.0) == doctest::Approx(both(-2.0)).epsilon(1e-12));
  CHECK(both(0.0) < both(2.0));  // bimodal
  CHECK_THROWS_AS(mix({0.6, 0.6}, {d1, d2}), std::invalid_argument);
  CHECK_THROWS_AS(mix({0.5}, {d1, d2}), std::invalid_argument);
}

TEST_CASE("lp functional against the closed Gaussian form") {
  for (double variance : {0.5, 1.0, 2.7}) {
    const AnalyticDensity d = AnalyticDensity::gaussian(0.4, variance);
    CHECK(lp_functional(d, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
    for (double alpha : {0.5, 0.8, 2.0, 3.5, 5.0}) {
      CHECK(lp_functional(d, alpha) ==
            doctest::Approx(oracles::gaussian_lp(variance, alpha)).epsilon(1e-9));
    }
  }
  const AnalyticDensity std_gauss = AnalyticDensity::gaussian(0.0, 1.0);
  CHECK(lp_functional(std_gauss, Index::infinity()) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));
  CHECK_THROWS_AS(lp_functional(std_gauss, -1.0), std::domain_error);
}

TEST_CASE("lp functional: analytic vs sampled grid") {
  std::mt19937_64 rng(7);
  const AnalyticDensity d = oracles::random_gaussian_mixture(rng);
  const GridDensity g = GridDensity::sample(d, 1e-3);
  for (double alpha : {0.5, 0.8, 1.0, 2.0, 5.0}) {
    const double a_val = lp_functional(d, alpha);
    const double g_val = lp_functional(g, alpha);
    CHECK(std::abs(a_val - g_val) / a_val < 1e-6);
  }
  CHECK(lp_functional(g, Index::infinity()) ==
        doctest::Approx(sup_value(d)).epsilon(1e-6));
}

TEST_CASE("grid convolution examples") {
  // Delta-like spike shifts the other density by the spike location.
  const double h = 1e-3;
  std::vector<double> spike(41, 0.0);
  spike[20] = 1.0 / h;
  const GridDensity delta(0.48, h, spike, 0.0);  // spike at 0.5
  const GridDensity g = GridDensity::sample(AnalyticDensity::gaussian(0.0, 0.5), h);
  const GridDensity shifted = convolve_grid(delta, g);
  const AnalyticDensity expected = AnalyticDensity::gaussian(0.5, 0.5);
  double max_err = 0.0;
  for (std::size_t i = 0; i < shifted.values().size(); i += 11)
    max_err = std::max(max_err,
                       std::abs(shifted.values()[i] - expected(shifted.x_at(i))));
  CHECK(max_err < 2e-4);  // one-cell discretization of the spike

  // Gaussian(1/2) * Gaussian(1/2) = Gaussian(1) to 1e-8 at spacing 1e-3.
  const GridDensity g2 = convolve_grid(g, g);
  const AnalyticDensity unit = AnalyticDensity::gaussian(0.0, 1.0);
  max_err = 0.0;
  for (std::size_t i = 0; i < g2.values().size(); i += 7)
    max_err = std::max(max_err, std::abs(g2.values()[i] - unit(g2.x_at(i))));
  CHECK(max_err < 1e-8);

  // Commutativity is exact.
  const GridDensity ab = convolve_grid(delta, g);
  const GridDensity ba = convolve_grid(g, delta);
  REQUIRE(ab.values().size() == ba.values().size());
  for (std::size_t i = 0; i < ab.values().size(); ++i)
    CHECK(ab.values()[i] == ba.values()[i]);

  CHECK_THROWS_AS(convolve_grid(delta, GridDensity::sample(unit, 2e-3)),
                  std::invalid_argument);
}

TEST_CASE("grid density rejects poor coverage") {
  CHECK_THROWS_AS(GridDensity(0.0, 0.1, std::vector<double>{1.0, 1.0}, 1e-6),
                  std::invalid_argument);
}

TEST_CASE("convolution associativity") {
  std::mt19937_64 rng(11);
  const AnalyticDensity f = oracles::random_gaussian_mixture(rng);
  const AnalyticDensity g = oracles::random_gaussian_mixture(rng);
  const AnalyticDensity h = oracles::random_gaussian_mixture(rng);
  const AnalyticDensity left = convolve(convolve(f, g), h);
  const AnalyticDensity right = convolve(f, convolve(g, h));
  for (double x = left.domain_min(); x <= left.domain_max(); x += 0.37)
    CHECK(left(x) == doctest::Approx(right(x)).epsilon(1e-9));
}

TEST_CASE("grid CSV round trip") {
  const GridDensity g = GridDensity::sample(AnalyticDensity::gaussian(0.3, 0.9), 0.01);
  std::stringstream buffer;
  write_csv(g, buffer);
  const GridDensity back = read_grid_density_csv(buffer);
  REQUIRE(back.values().size() == g.values().size());
  CHECK(back.left_edge() == doctest::Approx(g.left_edge()).epsilon(1e-12));
  CHECK(back.spacing() == doctest::Approx(g.spacing()).epsilon(1e-9));
  double max_err = 0.0;
  for (std::size_t i = 0; i < g.values().size(); ++i)
    max_err = std::max(max_err, std::abs(g.values()[i] - back.values()[i]));
  CHECK(max_err < 1e-12);
  std::stringstream bad("not,a header\n1,2\n");
  CHECK_THROWS_AS(read_grid_density_csv(bad), std::invalid_argument);
}

TEST_CASE("fourier pair check on oscillator eigenfunctions") {
  // k = 0 is a Gaussian and saturates the bound.
  for (double t : {0.2, 0.5, 0.8}) {
    const auto report = fourier_pair_check(0, 1.0 / (1.0 - t), 1.0 / (1.0 + t));
    CHECK(std::abs(report.margin) < 1e-9);
  }
  const auto k1 = fourier_pair_check(1, 2.0, 2.0 / 3.0);
  CHECK(k1.margin > 1e-3);
  CHECK_FALSE(k1.violated);
  const auto k3 = fourier_pair_check(3, 4.0, 4.0 / 7.0);
  CHECK(k3.margin > -1e-9);
  CHECK_FALSE(k3.violated);
  CHECK_THROWS_AS(fourier_pair_check(2, 2.0, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(fourier_pair_check(-1, 2.0, 2.0 / 3.0), std::invalid_argument);
}

TEST_CASE("young and converse young fuzz (short run)") {
  CHECK(suite_young(25, 42).passed);
  CHECK(suite_converse_young(25, 43).passed);
  CHECK(suite_hausdorff_young(25, 44).passed);
  CHECK(suite_minkowski_mix(25, 45).passed);
  CHECK(suite_fft_convolution_match(1, 46).passed);
}
