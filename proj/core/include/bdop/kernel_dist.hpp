#pragma once

#include <cstdint>
#include <vector>

namespace bdop {

/// The law of K_n(x, .) dt through its mixture representation: draw
/// C ~ Bin(n, x), then X ~ Beta(C+1, n-C+1). Its CDF is
/// sum_k p_{n,k}(x) I_z(k+1, n-k+1).
struct KernelDistribution {
  int n;
  double x;

  KernelDistribution(int n_, double x_);
};

struct Seed {
  std::uint64_t value = 0;
};

/// Exact CDF of the mixture at z (0 below the support, 1 above). The
/// incomplete-Beta terms are evaluated through the identity
/// I_z(k+1, n-k+1) = P(Bin(n+1, z) >= k+1), which costs one pmf-window pass
/// per z instead of one continued fraction per (z, k).
double mixture_cdf(const KernelDistribution& d, double z);

/// CDF of sqrt(n) (X_n - x) at s, i.e. mixture_cdf at x + s/sqrt(n).
double standardized_cdf(const KernelDistribution& d, double s);

/// Closed-form mean and variance of the mixture:
///   mean = (nx + 1) / (n + 2)
///   var  = E[Var(X|C)] + Var(E[X|C])
///        = [n(n-1)x(1-x) + n + 1] / ((n+2)^2 (n+3)) + n x(1-x) / (n+2)^2
/// n * var tends to 2x(1-x).
struct MixtureMoments {
  double mean;
  double variance;
};
MixtureMoments mixture_moments(const KernelDistribution& d);

/// count independent draws of X_n, deterministic for a given seed.
std::vector<double> sample(const KernelDistribution& d, Seed seed, int count);

}  // namespace bdop
