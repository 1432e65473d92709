#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace bdop {

/// How to evaluate an integral that has no closed form. Composite rules split
/// [a, b] into `panels` equal panels with a `nodes_per_panel`-point
/// Gauss-Legendre rule on each; the adaptive kind bisects panels until the
/// local refinement estimate meets abs_tol.
struct QuadratureRule {
  enum class Kind { gauss_legendre_composite, adaptive };
  Kind kind = Kind::adaptive;
  int panels = 8;            // >= 1
  int nodes_per_panel = 16;  // in [2, 64]; exact for polynomials of degree 2*nodes-1
  double abs_tol = 1e-11;

  void validate() const;
};

/// Adaptive quadrature gave up before reaching abs_tol; achieved_error() is
/// the error estimate it did reach.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, double achieved)
      : std::runtime_error(msg), achieved_(achieved) {}
  double achieved_error() const { return achieved_; }

 private:
  double achieved_;
};

/// Gauss-Legendre nodes and weights on [-1, 1]. Cached, thread-safe.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int n_points);

/// Integral of f over [a, b] under the rule. Throws QuadratureError when the
/// adaptive kind cannot reach rule.abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureRule& rule);

/// Same, with the integration split at the given interior points first (panel
/// edges aligned to integrand breakpoints keep each panel integrand smooth).
double integrate_segments(const std::function<double(double)>& f,
                          const std::vector<double>& boundaries,
                          const QuadratureRule& rule);

}  // namespace bdop
