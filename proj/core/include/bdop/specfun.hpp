#pragma once

#include <vector>

namespace bdop {

/// Index of an extended Bernstein basis polynomial p_{n,k}. The index k is a
/// real number in [0, n]; integer k recovers the classical binomial basis.
struct BasisIndex {
  int n;     // degree, n >= 1
  double k;  // extended index, 0 <= k <= n

  BasisIndex(int n_, double k_);
};

/// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms), relative
/// error below 1e-13 across [1e-6, 1e7]. Throws std::domain_error for x <= 0.
double ln_gamma(double x);

/// ln B(a, b) for a, b > 0. For large arguments the Stirling-corrected form is
/// used so the three ln Gamma terms do not cancel catastrophically.
double ln_beta(double a, double b);

/// Regularized incomplete beta I_z(a, b), i.e. the Beta(a, b) CDF at z.
/// Continued fraction (modified Lentz); the symmetry I_z(a,b) = 1 - I_{1-z}(b,a)
/// is applied when z > a/(a+b) to stay in the fast-converging region.
double reg_inc_beta(double z, double a, double b);

/// Extended Bernstein basis p_{n,k}(t) = Gamma(n+1)/(Gamma(k+1)Gamma(n-k+1))
/// t^k (1-t)^{n-k} on [0, 1], zero outside. Evaluated in log space, safe for
/// n up to 1e6.
///
/// Endpoint convention for the 0^0 ambiguity: continuous limit, so
/// p_{n,0}(0) = 1, p_{n,k}(0) = 0 for k > 0, and symmetrically at t = 1.
/// For fractional k no other convention is in circulation; this one keeps the
/// partition of unity exact at the endpoints.
double bernstein_basis(const BasisIndex& idx, double t);

/// Density and CDF of N(mean, variance). variance must be > 0.
double normal_pdf(double z, double mean, double variance);
double normal_cdf(double z, double mean, double variance);

/// Binomial(n, p) probabilities on the index window that carries essentially
/// all the mass: every k with pmf(k) >= rel_cutoff * max_k pmf(k). Computed by
/// the ratio recurrence outward from the mode, so no term under- or overflows.
/// The neglected tail mass is far below any tolerance used in this library.
struct BinomialWindow {
  int k_lo = 0;
  int k_hi = 0;
  std::vector<double> pmf;  // pmf[k - k_lo] for k in [k_lo, k_hi]

  double at(int k) const { return (k < k_lo || k > k_hi) ? 0.0 : pmf[static_cast<std::size_t>(k - k_lo)]; }
};
BinomialWindow binomial_pmf_window(int n, double p, double rel_cutoff = 1e-20);

}  // namespace bdop
