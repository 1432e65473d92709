#include "bdop/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bdop {

namespace {

double poly_eval(const std::vector<double>& c, double t) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

struct PieceEval {
  double t;
  double operator()(const PolyPiece& p) const { return poly_eval(p.coeffs, t); }
  double operator()(const ExpPiece& p) const { return p.scale * std::exp(p.offset + p.rate * t); }
  double operator()(const SinPiece& p) const { return p.scale * std::sin(p.offset + p.rate * t); }
};

struct PieceBound {
  double lo, hi;
  double operator()(const PolyPiece& p) const {
    double b = 0.0;
    const double m = std::max(std::fabs(lo), std::fabs(hi));
    double pw = 1.0;
    for (double c : p.coeffs) {
      b += std::fabs(c) * pw;
      pw *= std::max(m, 1.0);
    }
    return b;
  }
  double operator()(const ExpPiece& p) const {
    return std::fabs(p.scale) * std::exp(p.offset + std::max(p.rate * lo, p.rate * hi));
  }
  double operator()(const SinPiece& p) const { return std::fabs(p.scale); }
};

// sup |d/dt piece| on [lo, hi], coefficient-level bound.
struct PieceSlopeBound {
  double lo, hi;
  double operator()(const PolyPiece& p) const {
    double b = 0.0;
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) b += i * std::fabs(p.coeffs[i]);
    return b;
  }
  double operator()(const ExpPiece& p) const {
    return std::fabs(p.scale * p.rate) * std::exp(p.offset + std::max(p.rate * lo, p.rate * hi));
  }
  double operator()(const SinPiece& p) const { return std::fabs(p.scale * p.rate); }
};

}  // namespace

double eval_piece(const PieceExpr& piece, double t) {
  return std::visit(PieceEval{t}, piece);
}

double JumpData::ratio() const {
  if (left == 0.0) {
    return right > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return right / left;
}

PiecewiseFunction::PiecewiseFunction(std::vector<double> breakpoints,
                                     std::vector<PieceExpr> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.size() != breakpoints_.size() + 1)
    throw std::invalid_argument("PiecewiseFunction: need one piece per subinterval");
  double prev = 0.0;
  for (double b : breakpoints_) {
    if (!(b > prev && b < 1.0))
      throw std::invalid_argument(
          "PiecewiseFunction: breakpoints must be strictly increasing inside (0, 1)");
    prev = b;
  }
  point_values_.resize(breakpoints_.size());
}

PiecewiseFunction PiecewiseFunction::constant(double c) {
  return PiecewiseFunction({}, {PolyPiece{{c}}});
}

PiecewiseFunction PiecewiseFunction::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  return PiecewiseFunction({}, {PolyPiece{std::move(coeffs)}});
}

PiecewiseFunction PiecewiseFunction::step(double at, double left, double right) {
  return PiecewiseFunction({at}, {PolyPiece{{left}}, PolyPiece{{right}}});
}

PiecewiseFunction& PiecewiseFunction::set_value_at(double breakpoint, double value) {
  const auto it = std::find(breakpoints_.begin(), breakpoints_.end(), breakpoint);
  if (it == breakpoints_.end())
    throw std::invalid_argument("set_value_at: not a breakpoint of this function");
  point_values_[static_cast<std::size_t>(it - breakpoints_.begin())] = value;
  return *this;
}

double PiecewiseFunction::operator()(double t) const {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error("PiecewiseFunction: argument must lie in [0, 1]");
  // upper_bound: index of the first breakpoint > t == index of the piece whose
  // open interval contains t (or whose left endpoint is t).
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
  if (i > 0 && breakpoints_[i - 1] == t) {
    if (point_values_[i - 1]) return *point_values_[i - 1];
    return eval_piece(pieces_[i], t);  // right limit
  }
  return eval_piece(pieces_[i], t);
}

JumpData PiecewiseFunction::one_sided_limits(double x) const {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("one_sided_limits: point must lie in (0, 1)");
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
  JumpData j;
  if (i > 0 && breakpoints_[i - 1] == x) {
    j.left = eval_piece(pieces_[i - 1], x);
    j.right = eval_piece(pieces_[i], x);
  } else {
    j.left = j.right = eval_piece(pieces_[i], x);
  }
  return j;
}

double PiecewiseFunction::piece_bound(std::size_t i) const {
  return std::visit(PieceBound{piece_lo(i), piece_hi(i)}, pieces_[i]);
}

double PiecewiseFunction::variation_upper_bound() const {
  double total = 0.0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    total += std::visit(PieceSlopeBound{piece_lo(i), piece_hi(i)}, pieces_[i]) *
             (piece_hi(i) - piece_lo(i));
  }
  for (double b : breakpoints_) {
    const JumpData j = one_sided_limits(b);
    total += std::fabs(j.right - j.left);
  }
  return total;
}

}  // namespace bdop
