#include "bdop/stats.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace bdop {

CdfFunction CdfFunction::exact(std::function<double(double)> eval) {
  return CdfFunction(Kind::exact, std::move(eval), {});
}

CdfFunction CdfFunction::empirical(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("CdfFunction: empty sample");
  std::sort(samples.begin(), samples.end());
  auto sorted = std::make_shared<std::vector<double>>(samples);
  const double m = static_cast<double>(sorted->size());
  auto eval = [sorted, m](double z) {
    return static_cast<double>(std::upper_bound(sorted->begin(), sorted->end(), z) -
                               sorted->begin()) /
           m;
  };
  return CdfFunction(Kind::empirical, std::move(eval), std::move(samples));
}

CdfFunction ecdf(std::vector<double> samples) {
  return CdfFunction::empirical(std::move(samples));
}

double CdfFunction::operator()(double z) const { return eval_(z); }

double CdfFunction::left_limit(double z) const {
  if (kind_ == Kind::exact) return eval_(z);
  const double m = static_cast<double>(jumps_.size());
  return static_cast<double>(std::lower_bound(jumps_.begin(), jumps_.end(), z) -
                             jumps_.begin()) /
         m;
}

double ks_distance(const CdfFunction& a, const CdfFunction& b,
                   const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("ks_distance: grid must be nonempty");
  double sup = 0.0;
  // Both CDFs are right-continuous with left limits, so the sup over the reals
  // is attained among right values and left limits at the candidate points.
  auto consider = [&](double z) {
    const double right = std::fabs(a(z) - b(z));
    const double left = std::fabs(a.left_limit(z) - b.left_limit(z));
    const double d = std::max(right, left);
    if (d > sup) sup = d;
  };
  for (double z : grid) consider(z);
  for (double z : a.jump_points()) consider(z);
  for (double z : b.jump_points()) consider(z);
  return sup;
}

bool assert_decreasing_trend(const ConvergenceTable& t, double slack) {
  if (t.rows.size() < 2)
    throw std::invalid_argument("assert_decreasing_trend: need at least two rows");
  if (!(slack >= 0.0))
    throw std::invalid_argument("assert_decreasing_trend: slack must be >= 0");
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    if (t.rows[i].n <= t.rows[i - 1].n)
      throw std::invalid_argument("assert_decreasing_trend: rows must be sorted by n");
    if (t.rows[i].distance > t.rows[i - 1].distance * (1.0 + slack)) return false;
  }
  return true;
}

}  // namespace bdop
