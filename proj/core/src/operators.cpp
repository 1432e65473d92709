#include "bdop/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bdop/specfun.hpp"
#include "bdop/summation.hpp"

namespace bdop {

namespace {

double beta_log_pdf(double a, double b, double t) {
  double s = -ln_beta(a, b);
  if (a != 1.0) s += (a - 1.0) * std::log(t);
  if (b != 1.0) s += (b - 1.0) * std::log1p(-t);
  return s;
}

double beta_pdf(double a, double b, double t) {
  if (t <= 0.0 || t >= 1.0) {
    if (t == 0.0 && a == 1.0) return b;  // finite edge value, only hit by callers probing edges
    if (t == 1.0 && b == 1.0) return a;
    return 0.0;
  }
  return std::exp(beta_log_pdf(a, b, t));
}

std::vector<double> poly_mul(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> r(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

// Expectation of a polynomial against Beta(a, b), restricted to [lo, hi].
double poly_beta_expectation(const std::vector<double>& coeffs, double a, double b,
                             double lo, double hi) {
  double s = 0.0;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m] == 0.0) continue;
    s += coeffs[m] * detail::beta_partial_moment(a, b, static_cast<int>(m), lo, hi);
  }
  return s;
}

// Quadrature of g(t) * beta_pdf(a, b, t) over [lo, hi].
double quad_beta_expectation(const std::function<double(double)>& g, double a, double b,
                             double lo, double hi, const QuadratureRule& q) {
  return integrate([&](double t) { return g(t) * beta_pdf(a, b, t); }, lo, hi, q);
}

// Merged piece boundaries of two functions; every segment lies inside one
// piece of each.
std::vector<double> merged_boundaries(const PiecewiseFunction& f,
                                      const PiecewiseFunction& w) {
  std::vector<double> b;
  b.push_back(0.0);
  b.insert(b.end(), f.breakpoints().begin(), f.breakpoints().end());
  b.insert(b.end(), w.breakpoints().begin(), w.breakpoints().end());
  b.push_back(1.0);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

std::size_t piece_index_at(const PiecewiseFunction& f, double t) {
  const auto& bp = f.breakpoints();
  return static_cast<std::size_t>(std::upper_bound(bp.begin(), bp.end(), t) - bp.begin());
}

}  // namespace

OperatorPoint::OperatorPoint(int n_, double x_) : n(n_), x(x_) {
  if (n < 1) throw std::domain_error("OperatorPoint: n must be >= 1");
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("OperatorPoint: x must lie in (0, 1)");
}

double bernstein_op(const PiecewiseFunction& f, const OperatorPoint& p) {
  const BinomialWindow w = binomial_pmf_window(p.n, p.x);
  NeumaierSum s;
  for (int k = w.k_lo; k <= w.k_hi; ++k) {
    s.add(w.at(k) * f(static_cast<double>(k) / p.n));
  }
  return s.value();
}

double durrmeyer_kernel(const OperatorPoint& p, double t) {
  if (t < 0.0 || t > 1.0) return 0.0;
  const BinomialWindow wx = binomial_pmf_window(p.n, p.x);
  // p_{n,k}(t) as a function of k is the Bin(n, t) pmf.
  if (t == 0.0) return (p.n + 1.0) * wx.at(0);
  if (t == 1.0) return (p.n + 1.0) * wx.at(p.n);
  const BinomialWindow wt = binomial_pmf_window(p.n, t);
  const int lo = std::max(wx.k_lo, wt.k_lo);
  const int hi = std::min(wx.k_hi, wt.k_hi);
  NeumaierSum s;
  for (int k = lo; k <= hi; ++k) s.add(wx.at(k) * wt.at(k));
  return (p.n + 1.0) * s.value();
}

namespace detail {

double beta_partial_moment(double a, double b, int m, double lo, double hi) {
  double shift = 1.0;
  for (int j = 0; j < m; ++j) shift *= (a + j) / (a + b + j);
  const double upper = hi >= 1.0 ? 1.0 : reg_inc_beta(hi, a + m, b);
  const double lower = lo <= 0.0 ? 0.0 : reg_inc_beta(lo, a + m, b);
  return shift * (upper - lower);
}

double beta_expectation(const PiecewiseFunction& f, double a, double b,
                        const QuadratureRule& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const double lo = f.piece_lo(i);
    const double hi = f.piece_hi(i);
    if (const auto* poly = std::get_if<PolyPiece>(&f.piece(i))) {
      s += poly_beta_expectation(poly->coeffs, a, b, lo, hi);
    } else {
      const PieceExpr& piece = f.piece(i);
      s += quad_beta_expectation([&](double t) { return eval_piece(piece, t); }, a, b,
                                 lo, hi, q);
    }
  }
  return s;
}

double beta_expectation_product(const PiecewiseFunction& f, const PiecewiseFunction& w,
                                double a, double b, const QuadratureRule& q) {
  const std::vector<double> bounds = merged_boundaries(f, w);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double lo = bounds[i];
    const double hi = bounds[i + 1];
    const double mid = 0.5 * (lo + hi);
    const PieceExpr& fp = f.piece(piece_index_at(f, mid));
    const PieceExpr& wp = w.piece(piece_index_at(w, mid));
    const auto* f_poly = std::get_if<PolyPiece>(&fp);
    const auto* w_poly = std::get_if<PolyPiece>(&wp);
    if (f_poly && w_poly) {
      s += poly_beta_expectation(poly_mul(f_poly->coeffs, w_poly->coeffs), a, b, lo, hi);
    } else {
      s += quad_beta_expectation(
          [&](double t) { return eval_piece(fp, t) * eval_piece(wp, t); }, a, b, lo, hi,
          q);
    }
  }
  return s;
}

}  // namespace detail

double durrmeyer_op(const PiecewiseFunction& f, const OperatorPoint& p,
                    const QuadratureRule& q) {
  const BinomialWindow w = binomial_pmf_window(p.n, p.x);
  NeumaierSum s;
  for (int k = w.k_lo; k <= w.k_hi; ++k) {
    s.add(w.at(k) * detail::beta_expectation(f, k + 1.0, p.n - k + 1.0, q));
  }
  return s.value();
}

double weighted_durrmeyer_op(const PiecewiseFunction& f, const PiecewiseFunction& w,
                             const OperatorPoint& p, const QuadratureRule& q) {
  const BinomialWindow win = binomial_pmf_window(p.n, p.x);
  NeumaierSum s;
  for (int k = win.k_lo; k <= win.k_hi; ++k) {
    const double a = k + 1.0;
    const double b = p.n - k + 1.0;
    const double den = detail::beta_expectation(w, a, b, q);
    if (!(den > 1e-300)) {
      throw DegenerateWeightError(
          "weighted_durrmeyer_op: weight projection underflowed at k = " +
          std::to_string(k));
    }
    const double num = detail::beta_expectation_product(f, w, a, b, q);
    s.add(win.at(k) * (num / den));
  }
  return s.value();
}

double lupas_op(const PiecewiseFunction& f, int n, double y, const QuadratureRule& q) {
  if (n < 1) throw std::domain_error("lupas_op: n must be >= 1");
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("lupas_op: y must lie in [0, 1]");
  return detail::beta_expectation(f, n * y + 1.0, n * (1.0 - y) + 1.0, q);
}

double lupas_moment(int n, double y, int m) {
  if (n < 1) throw std::domain_error("lupas_moment: n must be >= 1");
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("lupas_moment: y must lie in [0, 1]");
  if (m < 0) throw std::domain_error("lupas_moment: m must be >= 0");
  double prod = 1.0;
  for (int j = 0; j < m; ++j) prod *= (n * y + 1.0 + j) / (n + 2.0 + j);
  return prod;
}

}  // namespace bdop
