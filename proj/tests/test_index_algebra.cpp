#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cvren/index_algebra.hpp"

using namespace cvren;

TEST_CASE("conjugate index examples") {
  CHECK(conjugate_index(2.0).value() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(conjugate_index(0.5).value() == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(conjugate_index(4.0 / 3.0).value() == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(conjugate_index(1.0).is_infinity());
  CHECK(conjugate_index(Index::infinity()).value() == doctest::Approx(1.0));
}

TEST_CASE("conjugate index is an involution") {
  for (double x : {0.3, 0.5, 0.9, 1.2, 2.0, 3.7, 10.0, -2.0}) {
    const Index once = conjugate_index(x);
    const Index twice = conjugate_index(once);
    REQUIRE(!twice.is_infinity());
    CHECK(twice.value() == doctest::Approx(x).epsilon(1e-12));
  }
}

TEST_CASE("kappa endpoint and midpoint values") {
  CHECK(kappa(0.0) == doctest::Approx(std::numbers::e).epsilon(1e-13));
  CHECK(kappa(1.0) == doctest::Approx(2.0).epsilon(1e-13));
  // Direct evaluation of the closed form at tau = 1/2, cross-checked against
  // kappa^2 = alpha^{1/(alpha-1)} beta^{1/(beta-1)} with alpha = 2, beta = 2/3.
  const double expected = std::exp(1.5 * std::log(1.5) - 0.5 * std::log(0.5));
  CHECK(kappa(0.5) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(kappa(0.5) == doctest::Approx(2.598076).epsilon(1e-6));
  const double via_indices = std::sqrt(std::pow(2.0, 1.0 / (2.0 - 1.0)) *
                                       std::pow(2.0 / 3.0, 1.0 / (2.0 / 3.0 - 1.0)));
  CHECK(kappa(0.5) == doctest::Approx(via_indices).epsilon(1e-13));
}

TEST_CASE("big_k equals kappa and decreases") {
  for (double s = 0.0; s <= 1.0; s += 0.05)
    CHECK(big_k(s) == doctest::Approx(kappa(s)).epsilon(1e-15));
  CHECK(big_k(0.3) > big_k(0.7));
  double prev = big_k(0.0);
  for (double t = 0.05; t <= 1.0; t += 0.05) {
    CHECK(big_k(t) < prev);
    prev = big_k(t);
  }
}

TEST_CASE("kappa domain errors") {
  CHECK_THROWS_AS(kappa(-0.1), std::domain_error);
  CHECK_THROWS_AS(kappa(1.1), std::domain_error);
}

TEST_CASE("young factor values") {
  CHECK(young_c(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(young_c(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(young_c(0.5, conjugate_index(0.5)) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK_THROWS_AS(young_c(-1.0, Index(2.0)), std::domain_error);
}

TEST_CASE("young factor: log route agrees with product route") {
  for (double x : {0.5, 2.0 / 3.0, 1.0, 4.0 / 3.0, 2.0, 4.0}) {
    const Index conj = conjugate_index(x);
    CHECK(young_c(x, conj) ==
          doctest::Approx(young_c_product_form(x, conj)).epsilon(1e-12));
  }
}

TEST_CASE("criterion bound values") {
  CHECK(criterion_bound(2, 0.0) ==
        doctest::Approx(std::log(2.0 * std::numbers::e * std::numbers::pi))
            .epsilon(1e-12));
  CHECK(criterion_bound(2, 0.0) == doctest::Approx(2.837877).epsilon(1e-6));
  CHECK(criterion_bound(4, 1.0) ==
        doctest::Approx(std::log(8.0 * std::numbers::pi)).epsilon(1e-12));
  CHECK(criterion_bound(4, 1.0) == doctest::Approx(3.2241714).epsilon(1e-7));
  for (double t : {0.0, 0.3, 0.9})
    CHECK(criterion_bound(5, t) > criterion_bound(4, t));
}

TEST_CASE("index pair and subsystem set invariants") {
  for (double t : {0.0, 0.1, 0.45, 0.95}) {
    const auto pair = EntropicIndexPair::from_order(t);
    CHECK(1.0 / pair.a.value() == doctest::Approx(1.0 - t).epsilon(1e-12));
    CHECK(1.0 / pair.b == doctest::Approx(1.0 + t).epsilon(1e-12));
    CHECK(pair.a.reciprocal() + 1.0 / pair.b == doctest::Approx(2.0).epsilon(1e-12));
    for (int n : {2, 3, 7}) {
      const auto subs = SubsystemIndexSet::from_order(n, t);
      CHECK(1.0 / subs.alpha == doctest::Approx(1.0 - subs.tau).epsilon(1e-12));
      CHECK(1.0 / subs.beta == doctest::Approx(1.0 + subs.tau).epsilon(1e-12));
      // n/alpha' = 1/a' and n/beta' = 1/b'.
      const Index a_conj = conjugate_index(pair.a);
      const Index b_conj = conjugate_index(pair.b);
      CHECK(n * subs.alpha_conj.reciprocal() ==
            doctest::Approx(a_conj.reciprocal()).epsilon(1e-12));
      CHECK(n * subs.beta_conj.reciprocal() ==
            doctest::Approx(b_conj.reciprocal()).epsilon(1e-12));
    }
  }
  const auto at_one = EntropicIndexPair::from_order(1.0);
  CHECK(at_one.a.is_infinity());
  CHECK(at_one.b == doctest::Approx(0.5));
}

TEST_CASE("identity residual is sensitive to the constant stack") {
  // A 1e-3 shift of K(t) in the bound moves the residual far beyond the
  // 1e-9 acceptance band, so the identity actually pins the constants.
  const double residual = constant_identity_residual(3, 0.5);
  const double shifted =
      residual - std::log(1.0 + 1e-3 / big_k(0.5));
  CHECK(std::abs(residual) < 1e-12);
  CHECK(std::abs(shifted) > 1e-4);
}

TEST_CASE("constant stack identity") {
  CHECK(std::abs(constant_identity_residual(2, 0.5)) < 1e-10);
  CHECK(std::abs(constant_identity_residual(10, 0.9)) < 1e-10);
  CHECK(std::abs(constant_identity_residual(3, 0.1)) < 1e-9);
  for (int n = 2; n <= 10; ++n)
    for (double t = 0.05; t < 0.96; t += 0.05)
      CHECK(std::abs(constant_identity_residual(n, t)) < 1e-9);
}
