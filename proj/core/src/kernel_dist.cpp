#include "bdop/kernel_dist.hpp"

#include <cmath>
#include <stdexcept>

#include "bdop/rng.hpp"
#include "bdop/specfun.hpp"
#include "bdop/summation.hpp"

namespace bdop {

KernelDistribution::KernelDistribution(int n_, double x_) : n(n_), x(x_) {
  if (n < 1) throw std::domain_error("KernelDistribution: n must be >= 1");
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("KernelDistribution: x must lie in (0, 1)");
}

double mixture_cdf(const KernelDistribution& d, double z) {
  if (z <= 0.0) return 0.0;
  if (z >= 1.0) return 1.0;
  const int n = d.n;
  const BinomialWindow wx = binomial_pmf_window(n, d.x);
  const BinomialWindow wz = binomial_pmf_window(n + 1, z);

  // Survival of Bin(n+1, z) on the z-window, suffix sums from the top.
  std::vector<double> survival(wz.pmf.size() + 1, 0.0);
  double total = 0.0;
  for (std::size_t i = wz.pmf.size(); i-- > 0;) {
    total += wz.pmf[i];
    survival[i] = total;
  }

  NeumaierSum s;
  for (int k = wx.k_lo; k <= wx.k_hi; ++k) {
    const int j = k + 1;  // I_z(k+1, n-k+1) = P(Bin(n+1, z) >= k+1)
    double tail;
    if (j < wz.k_lo) {
      tail = total;  // everything in the window, i.e. ~1
    } else if (j > wz.k_hi) {
      tail = 0.0;
    } else {
      tail = survival[static_cast<std::size_t>(j - wz.k_lo)];
    }
    s.add(wx.at(k) * tail);
  }
  return s.value();
}

double standardized_cdf(const KernelDistribution& d, double s) {
  return mixture_cdf(d, d.x + s / std::sqrt(static_cast<double>(d.n)));
}

MixtureMoments mixture_moments(const KernelDistribution& d) {
  const double n = d.n;
  const double np2 = n + 2.0;
  const double v = d.x * (1.0 - d.x);
  const double mean = (n * d.x + 1.0) / np2;
  const double within = (n * (n - 1.0) * v + n + 1.0) / (np2 * np2 * (n + 3.0));
  const double between = n * v / (np2 * np2);
  return {mean, within + between};
}

std::vector<double> sample(const KernelDistribution& d, Seed seed, int count) {
  if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
  Rng rng(seed.value);
  // The pmf window is fixed for the whole batch; draw k by inversion on its
  // cumulative sums, then the Beta(k+1, n-k+1) variate.
  const BinomialWindow w = binomial_pmf_window(d.n, d.x, 1e-18);
  std::vector<double> cumulative(w.pmf.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < w.pmf.size(); ++i) {
    acc += w.pmf[i];
    cumulative[i] = acc;
  }

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double u = rng.uniform() * acc;
    std::size_t lo = 0, hi = cumulative.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (cumulative[mid] < u) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    const int k = w.k_lo + static_cast<int>(lo);
    out.push_back(rng.beta(k + 1.0, d.n - k + 1.0));
  }
  return out;
}

}  // namespace bdop
