#include "bdop/quadrature.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

using namespace bdop;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("gauss-legendre nodes integrate polynomials of degree 2p-1 exactly") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int p : {2, 3, 5, 8, 16, 32, 64}) {
    const int degree = 2 * p - 1;
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (double& v : c) v = coeff(gen);
    auto poly = [&c](double t) {
      double v = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
      return v;
    };
    // Antiderivative evaluated at the ends.
    double expected = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      expected += c[i] / (static_cast<double>(i) + 1.0) *
                  (std::pow(0.9, static_cast<double>(i) + 1) -
                   std::pow(-0.3, static_cast<double>(i) + 1));
    }
    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::gauss_legendre_composite;
    rule.panels = 1;
    rule.nodes_per_panel = p;
    CHECK(integrate(poly, -0.3, 0.9, rule) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("composite rule converges on smooth transcendental integrands") {
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::gauss_legendre_composite;
  rule.panels = 16;
  rule.nodes_per_panel = 12;
  CHECK(integrate([](double t) { return std::exp(t); }, 0.0, 1.0, rule) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  CHECK(integrate([](double t) { return std::sin(t); }, 0.0, M_PI, rule) ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("adaptive rule reaches the requested tolerance on a peaked integrand") {
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::adaptive;
  rule.panels = 2;
  rule.nodes_per_panel = 8;
  rule.abs_tol = 1e-11;
  // Narrow Gaussian bump: integral over [0,1] of exp(-((t-0.3)/0.01)^2).
  const double expected = 0.01 * std::sqrt(M_PI);  // tails beyond [0,1] are ~1e-190
  const double got = integrate(
      [](double t) {
        const double u = (t - 0.3) / 0.01;
        return std::exp(-u * u);
      },
      0.0, 1.0, rule);
  CHECK(got == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("adaptive rule honours reversed bounds and empty intervals") {
  QuadratureRule rule;
  CHECK(integrate([](double t) { return t; }, 0.7, 0.7, rule) == 0.0);
  CHECK(integrate([](double t) { return t * t; }, 1.0, 0.0, rule) ==
        doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("integrate_segments splits at interior breakpoints") {
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::adaptive;
  rule.abs_tol = 1e-12;
  // |t - 1/3| is not smooth; aligning a boundary there keeps each panel smooth.
  const double got = integrate_segments(
      [](double t) { return std::fabs(t - 1.0 / 3.0); }, {0.0, 1.0 / 3.0, 1.0}, rule);
  const double expected = (1.0 / 9.0 + 4.0 / 9.0) / 2.0;
  CHECK(got == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("rule validation") {
  QuadratureRule rule;
  rule.panels = 0;
  CHECK_THROWS_AS(rule.validate(), std::invalid_argument);
  rule.panels = 1;
  rule.nodes_per_panel = 1;
  CHECK_THROWS_AS(rule.validate(), std::invalid_argument);
  rule.nodes_per_panel = 65;
  CHECK_THROWS_AS(rule.validate(), std::invalid_argument);
  rule.nodes_per_panel = 16;
  rule.abs_tol = 0.0;
  CHECK_THROWS_AS(rule.validate(), std::invalid_argument);
}

TEST_CASE("non-convergence reports the achieved error estimate") {
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::adaptive;
  rule.panels = 1;
  rule.nodes_per_panel = 2;
  rule.abs_tol = 1e-300;  // unreachable on a non-polynomial integrand
  try {
    integrate([](double t) { return std::sqrt(std::fabs(t)); }, -1.0, 1.0, rule);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.achieved_error() > 0.0);
  }
}

TEST_SUITE_END();
