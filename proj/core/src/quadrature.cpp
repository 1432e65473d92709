#include "bdop/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>

namespace bdop {

namespace {

constexpr int kMaxNodes = 64;

// Newton iteration on the Legendre polynomial P_n; standard gauleg scheme.
GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p0 / pp;
      if (std::fabs(z - z1) < 1e-15) break;
    }
    gl.nodes[i] = -z;
    gl.nodes[n - 1 - i] = z;
    gl.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    gl.weights[n - 1 - i] = gl.weights[i];
  }
  return gl;
}

double panel_gl(const std::function<double(double)>& f, double a, double b,
                const GaussLegendre& gl) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    s += gl.weights[i] * f(mid + half * gl.nodes[i]);
  }
  return s * half;
}

// Bisection-refinement adaptive: accept a panel when the coarse/refined
// difference is under the local tolerance budget.
double adaptive_panel(const std::function<double(double)>& f, double a, double b,
                      double coarse, double tol, const GaussLegendre& gl, int depth,
                      double& achieved) {
  const double mid = 0.5 * (a + b);
  const double left = panel_gl(f, a, mid, gl);
  const double right = panel_gl(f, mid, b, gl);
  const double refined = left + right;
  const double err = std::fabs(refined - coarse);
  if (err <= tol || depth >= 48) {
    achieved += err;
    return refined;
  }
  return adaptive_panel(f, a, mid, left, 0.5 * tol, gl, depth + 1, achieved) +
         adaptive_panel(f, mid, b, right, 0.5 * tol, gl, depth + 1, achieved);
}

}  // namespace

void QuadratureRule::validate() const {
  if (panels < 1) throw std::invalid_argument("QuadratureRule: panels must be >= 1");
  if (nodes_per_panel < 2 || nodes_per_panel > kMaxNodes)
    throw std::invalid_argument("QuadratureRule: nodes_per_panel must lie in [2, 64]");
  if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureRule: abs_tol must be > 0");
}

const GaussLegendre& gauss_legendre(int n_points) {
  if (n_points < 2 || n_points > kMaxNodes)
    throw std::invalid_argument("gauss_legendre: point count must lie in [2, 64]");
  static std::array<GaussLegendre, kMaxNodes + 1> cache;
  static std::array<std::once_flag, kMaxNodes + 1> flags;
  std::call_once(flags[static_cast<std::size_t>(n_points)],
                 [n_points] { cache[static_cast<std::size_t>(n_points)] = compute_gauss_legendre(n_points); });
  return cache[static_cast<std::size_t>(n_points)];
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureRule& rule) {
  rule.validate();
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const GaussLegendre& gl = gauss_legendre(rule.nodes_per_panel);

  if (rule.kind == QuadratureRule::Kind::gauss_legendre_composite) {
    double s = 0.0;
    const double h = (b - a) / rule.panels;
    for (int i = 0; i < rule.panels; ++i) {
      s += panel_gl(f, a + i * h, a + (i + 1) * h, gl);
    }
    return sign * s;
  }

  double s = 0.0;
  double achieved = 0.0;
  const double h = (b - a) / rule.panels;
  for (int i = 0; i < rule.panels; ++i) {
    const double lo = a + i * h;
    const double hi = a + (i + 1) * h;
    const double coarse = panel_gl(f, lo, hi, gl);
    s += adaptive_panel(f, lo, hi, coarse, rule.abs_tol / rule.panels, gl, 0, achieved);
  }
  if (achieved > rule.abs_tol) {
    throw QuadratureError("adaptive quadrature did not reach the requested tolerance",
                          achieved);
  }
  return sign * s;
}

double integrate_segments(const std::function<double(double)>& f,
                          const std::vector<double>& boundaries,
                          const QuadratureRule& rule) {
  if (boundaries.size() < 2)
    throw std::invalid_argument("integrate_segments: need at least two boundaries");
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    s += integrate(f, boundaries[i], boundaries[i + 1], rule);
  }
  return s;
}

}  // namespace bdop
