#include "bdop/limits.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bdop/quadrature.hpp"
#include "bdop/specfun.hpp"

namespace bdop {

namespace {

// Series window wide enough that the closed form never runs with a badly
// cancelling numerator; at |eps| = 1e-2 twelve alternating terms leave a
// truncation error around 1e-26.
constexpr double kSeriesHalfWidth = 1e-2;

double nu_series(double eps) {
  // nu(1 + e) = 1/2 + e/6 - e^2/12 + e^3/20 - ..., term j: (-1)^{j+1} e^j /
  // ((j+1)(j+2)).
  double nu = 0.5;
  double term = eps;
  for (int j = 1; j <= 12; ++j) {
    nu += term / ((j + 1.0) * (j + 2.0));
    term *= -eps;
  }
  return nu;
}

}  // namespace

NuResult nu_closed_form(double r) {
  if (std::isnan(r) || r < 0.0)
    throw std::domain_error("nu_closed_form: r must be >= 0 or +inf");
  if (r == 0.0) return {0.0, r, NuResult::Path::closed_form};
  if (std::isinf(r)) return {1.0, r, NuResult::Path::closed_form};
  const double eps = r - 1.0;
  if (std::fabs(eps) < kSeriesHalfWidth)
    return {nu_series(eps), r, NuResult::Path::closed_form};
  // r^2 - r(1 + ln r) = r (eps - log1p(eps)); the right-hand arrangement does
  // not cancel, the literal left-hand one loses ~|eps|^-1 digits.
  const double nu = r * (eps - std::log1p(eps)) / (eps * eps);
  return {nu, r, NuResult::Path::closed_form};
}

NuResult nu_from_integral(double w_left, double w_right) {
  if (!(w_left >= 0.0) || !(w_right >= 0.0))
    throw std::domain_error("nu_from_integral: one-sided limits must be >= 0");
  if (w_left == 0.0 && w_right == 0.0)
    throw std::domain_error("nu_from_integral: both one-sided limits are zero");
  const double r = w_left == 0.0 ? std::numeric_limits<double>::infinity()
                                 : w_right / w_left;
  // One-sided zero: the integrand is constant almost everywhere.
  if (w_left == 0.0) return {1.0, r, NuResult::Path::u_integral};
  if (w_right == 0.0) return {0.0, r, NuResult::Path::u_integral};

  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::adaptive;
  rule.panels = 4;
  rule.nodes_per_panel = 24;
  rule.abs_tol = 1e-12;
  const double nu = integrate(
      [w_left, w_right](double u) {
        return w_right * (1.0 - u) / (w_left * u + w_right * (1.0 - u));
      },
      0.0, 1.0, rule);
  return {nu, r, NuResult::Path::u_integral};
}

NuResult nu_from_gaussian(double w_left, double w_right, double x) {
  if (!(w_left >= 0.0) || !(w_right >= 0.0))
    throw std::domain_error("nu_from_gaussian: one-sided limits must be >= 0");
  if (w_left == 0.0 && w_right == 0.0)
    throw std::domain_error("nu_from_gaussian: both one-sided limits are zero");
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("nu_from_gaussian: x must lie in (0, 1)");
  const double r = w_left == 0.0 ? std::numeric_limits<double>::infinity()
                                 : w_right / w_left;
  const double var = x * (1.0 - x);
  const double sigma = std::sqrt(var);

  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::gauss_legendre_composite;
  rule.panels = 96;
  rule.nodes_per_panel = 16;
  // Truncation at 8 sigma leaves < 1e-15 of Gaussian mass outside.
  const double nu = integrate(
      [&](double alpha) {
        const double psi_m = normal_cdf(-alpha, 0.0, var);  // Psi(-alpha)
        const double top = w_right * (1.0 - psi_m);
        return top / (w_left * psi_m + top) * normal_pdf(alpha, 0.0, var);
      },
      -8.0 * sigma, 8.0 * sigma, rule);
  return {nu, r, NuResult::Path::gaussian_integral};
}

double predicted_limit(const PiecewiseFunction& f, const PiecewiseFunction& w, double x) {
  const JumpData fj = f.one_sided_limits(x);
  const JumpData wj = w.one_sided_limits(x);
  if (wj.left == 0.0 && wj.right == 0.0)
    throw std::domain_error(
        "predicted_limit: weight has both one-sided limits zero at x");
  const double nu = wj.left == 0.0 ? nu_from_integral(wj.left, wj.right).nu
                                   : nu_closed_form(wj.right / wj.left).nu;
  return (1.0 - nu) * fj.left + nu * fj.right;
}

double lupas_limit_function(const PiecewiseFunction& f, double x, double alpha) {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("lupas_limit_function: x must lie in (0, 1)");
  const JumpData j = f.one_sided_limits(x);
  const double psi_m = normal_cdf(-alpha, 0.0, x * (1.0 - x));
  return psi_m * j.left + (1.0 - psi_m) * j.right;
}

StandardizedBetaParams::StandardizedBetaParams(double r1_, double r2_) : r1(r1_), r2(r2_) {
  if (!(r1 > 0.0) || !(r2 > 0.0))
    throw std::domain_error("StandardizedBetaParams: r1, r2 must be > 0");
}

double standardized_beta_pdf(const StandardizedBetaParams& p, double y) {
  const double s = p.r1 + p.r2;
  const double root = std::sqrt(s);
  const double t = p.r1 / s + y / root;
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double ln_pdf = (p.r1 - 1.0) * std::log(t) + (p.r2 - 1.0) * std::log1p(-t) -
                        ln_beta(p.r1, p.r2);
  return std::exp(ln_pdf) / root;
}

std::vector<ScaleError> appendix_convergence_check(double gamma,
                                                   const std::vector<double>& scales,
                                                   const std::vector<double>& grid) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::domain_error("appendix_convergence_check: gamma must lie in (0, 1)");
  for (std::size_t i = 1; i < scales.size(); ++i) {
    if (!(scales[i] > scales[i - 1]))
      throw std::invalid_argument("appendix_convergence_check: scales must increase");
  }
  const double target_var = gamma * (1.0 - gamma);
  std::vector<ScaleError> table;
  table.reserve(scales.size());
  for (double s : scales) {
    const StandardizedBetaParams params(gamma * s, (1.0 - gamma) * s);
    double sup = 0.0;
    for (double y : grid) {
      const double err =
          std::fabs(standardized_beta_pdf(params, y) - normal_pdf(y, 0.0, target_var));
      if (err > sup) sup = err;
    }
    table.push_back({s, sup});
  }
  return table;
}

}  // namespace bdop
