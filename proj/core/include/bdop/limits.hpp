#pragma once

#include <vector>

#include "bdop/piecewise.hpp"

namespace bdop {

/// The jump weight deciding how the limit of the weighted Durrmeyer operator
/// splits between f(x-) and f(x+). Determined entirely by the weight's jump
/// ratio r = w(x+)/w(x-); nu(1) = 1/2, nu is increasing from 0 to 1.
struct NuResult {
  enum class Path { closed_form, u_integral, gaussian_integral };
  double nu;
  double r;  // extended real: +inf allowed
  Path path;
};

/// nu = (r^2 - r(1 + ln r)) / (r - 1)^2 with continuous extensions nu(0) = 0,
/// nu(1) = 1/2, nu(+inf) = 1. Near r = 1 the 0/0 form is replaced by the
/// Taylor series nu(1+e) = 1/2 + e/6 - e^2/12 + e^3/20 - ... (coefficients
/// (-1)^{j+1}/((j+1)(j+2))). Throws std::domain_error for negative finite r.
NuResult nu_closed_form(double r);

/// nu as the u-integral int_0^1 w_+ (1-u) / (w_- u + w_+ (1-u)) du, by
/// adaptive quadrature. Handles the one-sided-zero cases exactly (0 or 1).
/// Throws std::domain_error when both limits are zero.
NuResult nu_from_integral(double w_left, double w_right);

/// nu as the Gaussian integral int g(alpha) dPsi(alpha) with
/// g = w_+ (1 - Psi(-a)) / (w_- Psi(-a) + w_+ (1 - Psi(-a))) and Psi the CDF
/// of N(0, x(1-x)), truncated at 8 standard deviations. The substitution
/// u = Psi(-alpha) makes this x-independent; computing it for two x values is
/// a numerical check of that substitution.
NuResult nu_from_gaussian(double w_left, double w_right, double x);

/// Predicted limit of M_{n,w}(f)(x): (1 - nu) f(x-) + nu f(x+), with nu from
/// the closed form at r = w(x+)/w(x-) (u-integral when w(x-) = 0).
double predicted_limit(const PiecewiseFunction& f, const PiecewiseFunction& w, double x);

/// Limit of the Lupas operator along k_n(alpha) = xn + alpha sqrt(n):
/// Psi(-alpha) f(x-) + (1 - Psi(-alpha)) f(x+), variance x(1-x).
double lupas_limit_function(const PiecewiseFunction& f, double x, double alpha);

/// Parameters of the standardized Beta variable
/// Y = sqrt(r1+r2) (Beta(r1,r2) - r1/(r1+r2)); its pdf tends to the
/// N(0, gamma(1-gamma)) density as r1, r2 grow with r1/(r1+r2) -> gamma.
struct StandardizedBetaParams {
  double r1;
  double r2;

  StandardizedBetaParams(double r1_, double r2_);
  double ratio() const { return r1 / (r1 + r2); }
};

/// pdf of Y at y: (1/sqrt(r1+r2)) f_Beta(r1/(r1+r2) + y/sqrt(r1+r2));
/// zero outside the transformed support. Log-space evaluation.
double standardized_beta_pdf(const StandardizedBetaParams& p, double y);

/// For each scale s: sup over the grid of |standardized Beta pdf at
/// (r1, r2) = (gamma s, (1-gamma) s) minus the N(0, gamma(1-gamma)) pdf|.
struct ScaleError {
  double scale;
  double sup_error;
};
std::vector<ScaleError> appendix_convergence_check(double gamma,
                                                   const std::vector<double>& scales,
                                                   const std::vector<double>& grid);

}  // namespace bdop
