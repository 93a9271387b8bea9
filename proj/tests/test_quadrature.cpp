#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "rmd/quadrature.hpp"

using namespace rmd;

TEST_CASE("low-order rules") {
  const auto g1 = gauss_legendre(1);
  REQUIRE(g1.order() == 1);
  CHECK(g1.nodes()[0] == 0.0);
  CHECK(g1.weights()[0] == doctest::Approx(2.0).epsilon(1e-15));

  // roots of P_2 are +-1/sqrt(3); exactness on 1, x, x^2, x^3 pins them
  const auto g2 = gauss_legendre(2);
  CHECK(g2.nodes()[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(g2.nodes()[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(g2.weights()[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g2.weights()[1] == doctest::Approx(1.0).epsilon(1e-15));

  const auto g5 = gauss_legendre(5);
  double sum = 0.0;
  for (double w : g5.weights()) sum += w;
  CHECK(std::abs(sum - 2.0) < 1e-14);

  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("rule structure for n = 1..64") {
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto rule = gauss_legendre(n);
    const auto x = rule.nodes();
    const auto w = rule.weights();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(x[i] > -1.0);
      CHECK(x[i] < 1.0);
      CHECK(w[i] > 0.0);
      if (i > 0) CHECK(x[i] > x[i - 1]);
      CHECK(std::abs(x[i] + x[n - 1 - i]) < 1e-12);
      CHECK(std::abs(w[i] - w[n - 1 - i]) < 1e-12);
      sum += w[i];
    }
    CHECK(std::abs(sum - 2.0) < 1e-12);
  }
}

TEST_CASE("exactness on monomials up to degree 2n-1") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto rule = gauss_legendre(n);
    for (std::size_t k = 0; k <= 2 * n - 1; ++k) {
      const double exact = k % 2 == 1 ? 0.0 : 2.0 / static_cast<double>(k + 1);
      const double got = integrate([k](double x) { return std::pow(x, static_cast<double>(k)); }, -1.0, 1.0, rule);
      CHECK(std::abs(got - exact) < 1e-12);
    }
  }
}

TEST_CASE("integration on mapped intervals") {
  CHECK(std::abs(integrate([](double x) { return x * x; }, 0, 1, gauss_legendre(2)) - 1.0 / 3.0) < 1e-14);
  CHECK(std::abs(integrate([](double x) { return std::pow(x, 5); }, 0, 1, gauss_legendre(3)) - 1.0 / 6.0) < 1e-14);
  CHECK(std::abs(integrate([](double x) { return std::exp(x); }, 0, 1, gauss_legendre(16)) - (std::numbers::e - 1.0)) <
        1e-12);
  CHECK(integrate([](double) { return 1.0; }, 3.0, 3.0, gauss_legendre(4)) == 0.0);
}

TEST_CASE("affine invariance and interval additivity") {
  const auto rule = gauss_legendre(16);
  for (auto [a, b] : {std::pair{-3.0, 7.5}, {0.0, 1e-3}, {-100.0, 250.0}, {2.0, 2.5}}) {
    CHECK(std::abs(integrate([](double) { return 1.0; }, a, b, rule) - (b - a)) < 1e-14 * std::max(1.0, b - a));
  }
  const auto f = [](double x) { return std::exp(x); };
  const double whole = integrate(f, -1.0, 2.0, rule);
  const double parts = integrate(f, -1.0, 0.3, rule) + integrate(f, 0.3, 2.0, rule);
  CHECK(std::abs(whole - parts) < 1e-9);
}

TEST_CASE("cached rules are shared and identical") {
  const auto& a = gauss_legendre_cached(16);
  const auto& b = gauss_legendre_cached(16);
  CHECK(&a == &b);
  const auto fresh = gauss_legendre(16);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(a.nodes()[i] == fresh.nodes()[i]);
    CHECK(a.weights()[i] == fresh.weights()[i]);
  }
}
