#pragma once

#include <cstdint>
#include <random>

namespace bdop {

/// Deterministic random stream. All variate algorithms are implemented here
/// on top of raw mt19937_64 output, because the standard pins the engine's
/// sequence but not the library distributions' algorithms; this keeps results
/// reproducible for a given seed across toolchains.
///
/// Not thread-safe; parallel work takes one stream per task via stream().
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent substream for (seed, stream_index), splitmix64-mixed.
  static Rng stream(std::uint64_t seed, std::uint64_t stream_index);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal (Marsaglia polar, spare cached).
  double normal();

  /// Gamma(shape, 1) for shape >= 1 (Marsaglia-Tsang squeeze).
  double gamma(double shape);

  /// Beta(a, b) for a, b >= 1, as the two-Gamma ratio.
  double beta(double a, double b);

  /// Binomial(n, p) by inversion over the pmf window.
  int binomial(int n, double p);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// splitmix64 mixing step; also usable as a standalone seed scrambler.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace bdop
