#pragma once

#include <stdexcept>

#include "bdop/piecewise.hpp"
#include "bdop/quadrature.hpp"

namespace bdop {

/// Evaluation point of an operator: degree n and x in the open unit interval.
struct OperatorPoint {
  int n;
  double x;

  OperatorPoint(int n_, double x_);
};

/// A Beta-projection denominator integral underflowed: the weight is
/// effectively zero against some basis function and the weighted operator is
/// not well defined there.
class DegenerateWeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classical Bernstein operator: sum_k p_{n,k}(x) f(k/n).
double bernstein_op(const PiecewiseFunction& f, const OperatorPoint& p);

/// Durrmeyer kernel K_n(x, t) = (n+1) sum_k p_{n,k}(x) p_{n,k}(t).
/// Zero for t outside [0, 1].
double durrmeyer_kernel(const OperatorPoint& p, double t);

/// Bernstein-Durrmeyer operator M_n(f)(x) = int_0^1 f(t) K_n(x, t) dt.
///
/// The Beta projections int f p_{n,k} are computed exactly for step and
/// polynomial pieces (incomplete-Beta differences and monomial moment
/// products); only transcendental pieces go through q, with panels aligned to
/// the breakpoints of f. This keeps quadrature error out of the limit
/// experiments entirely for the function classes they use.
double durrmeyer_op(const PiecewiseFunction& f, const OperatorPoint& p,
                    const QuadratureRule& q);

/// Weighted Bernstein-Durrmeyer operator
/// M_{n,w}(f)(x) = sum_k p_{n,k}(x) * int f p_{n,k} w / int p_{n,k} w.
/// Requires w >= 0 with every denominator strictly positive; throws
/// DegenerateWeightError when a denominator falls below 1e-300.
double weighted_durrmeyer_op(const PiecewiseFunction& f, const PiecewiseFunction& w,
                             const OperatorPoint& p, const QuadratureRule& q);

/// Lupas Beta operator L_n(f)(y): the expectation of f under
/// Beta(ny + 1, n(1-y) + 1). y may be any real in [0, 1], not just k/n.
double lupas_op(const PiecewiseFunction& f, int n, double y, const QuadratureRule& q);

/// m-th raw moment of Beta(ny+1, n(1-y)+1):
/// prod_{j=0}^{m-1} (ny + 1 + j) / (n + 2 + j). Exact oracle for lupas_op on
/// monomials.
double lupas_moment(int n, double y, int m);

namespace detail {
/// E[f(B)] for B ~ Beta(a, b); exact for step/polynomial pieces, quadrature
/// otherwise. Exposed for tests and the limits module.
double beta_expectation(const PiecewiseFunction& f, double a, double b,
                        const QuadratureRule& q);
/// E[(f*w)(B)] with segment-wise exact polynomial products.
double beta_expectation_product(const PiecewiseFunction& f, const PiecewiseFunction& w,
                                double a, double b, const QuadratureRule& q);
/// int_lo^hi t^m dBeta(a,b): moment-shift product times an incomplete-Beta
/// difference at (a + m, b).
double beta_partial_moment(double a, double b, int m, double lo, double hi);
}  // namespace detail

}  // namespace bdop
