#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace bdop {

/// One smooth piece on an open subinterval of (0, 1). Pieces are either
/// polynomials (in the global t coordinate) or affine compositions of exp and
/// sin. Polynomial and constant pieces admit exact integration against Beta
/// weights; the transcendental pieces fall back to quadrature.
struct PolyPiece {
  std::vector<double> coeffs;  // c0 + c1 t + c2 t^2 + ...
};
struct ExpPiece {
  double scale, offset, rate;  // scale * exp(offset + rate * t)
};
struct SinPiece {
  double scale, offset, rate;  // scale * sin(offset + rate * t)
};
using PieceExpr = std::variant<PolyPiece, ExpPiece, SinPiece>;

double eval_piece(const PieceExpr& piece, double t);

/// One-sided limits of a piecewise function at an interior point, plus the
/// jump ratio right/left used for weight functions.
struct JumpData {
  double left = 0.0;
  double right = 0.0;

  bool is_jump() const { return left != right; }
  /// right/left as an extended real: +inf when left == 0 and right > 0.
  double ratio() const;
};

/// A function of bounded variation on [0, 1] represented as finitely many
/// smooth pieces separated by breakpoints in (0, 1). One-sided limits at
/// breakpoints are exact piece-formula evaluations, never numerical limits.
///
/// Value at a breakpoint: the explicitly set point value if any, otherwise
/// the right limit. This convention never affects integrals or the limit
/// theorems; it only pins down pointwise evaluation.
class PiecewiseFunction {
 public:
  /// breakpoints strictly increasing, all in (0, 1); pieces.size() must be
  /// breakpoints.size() + 1 (piece i lives on (b_{i-1}, b_i) with b_{-1} = 0,
  /// b_last = 1).
  PiecewiseFunction(std::vector<double> breakpoints, std::vector<PieceExpr> pieces);

  static PiecewiseFunction constant(double c);
  static PiecewiseFunction polynomial(std::vector<double> coeffs);
  static PiecewiseFunction step(double at, double left, double right);

  /// Sets the explicit value at an existing breakpoint; returns *this.
  PiecewiseFunction& set_value_at(double breakpoint, double value);

  /// Evaluates at t in [0, 1]. Throws std::domain_error outside.
  double operator()(double t) const;

  /// Exact one-sided limits at x in (0, 1); left == right when x is not a
  /// breakpoint.
  JumpData one_sided_limits(double x) const;

  std::size_t piece_count() const { return pieces_.size(); }
  const PieceExpr& piece(std::size_t i) const { return pieces_[i]; }
  double piece_lo(std::size_t i) const { return i == 0 ? 0.0 : breakpoints_[i - 1]; }
  double piece_hi(std::size_t i) const {
    return i == breakpoints_.size() ? 1.0 : breakpoints_[i];
  }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  /// Upper bound for |f| on the closure of piece i (coefficient bound for
  /// polynomials, envelope bound for exp/sin).
  double piece_bound(std::size_t i) const;

  /// Finite upper bound for the total variation: piece variation bounds plus
  /// jump magnitudes. Certifies the bounded-variation hypothesis.
  double variation_upper_bound() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<PieceExpr> pieces_;
  std::vector<std::optional<double>> point_values_;  // parallel to breakpoints_
};

}  // namespace bdop
