#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bdop {

/// An evaluable CDF, either exact (continuous formula) or empirical (step
/// function of a sample). Empirical CDFs expose their jump points so sup
/// distances can look at both sides of each step.
class CdfFunction {
 public:
  enum class Kind { exact, empirical };

  static CdfFunction exact(std::function<double(double)> eval);
  /// Right-continuous step CDF of the sample. Throws std::invalid_argument on
  /// an empty sample.
  static CdfFunction empirical(std::vector<double> samples);

  double operator()(double z) const;
  /// Left limit at z; equals operator() for exact CDFs.
  double left_limit(double z) const;

  Kind kind() const { return kind_; }
  const std::vector<double>& jump_points() const { return jumps_; }

 private:
  CdfFunction(Kind kind, std::function<double(double)> eval, std::vector<double> jumps)
      : kind_(kind), eval_(std::move(eval)), jumps_(std::move(jumps)) {}

  Kind kind_;
  std::function<double(double)> eval_;
  std::vector<double> jumps_;  // sorted sample values (empirical only)
};

/// Alias for CdfFunction::empirical.
CdfFunction ecdf(std::vector<double> samples);

/// sup over the grid (and over the jump points of either CDF, both sides of
/// each step) of |a - b|. The grid must be sorted and nonempty.
double ks_distance(const CdfFunction& a, const CdfFunction& b,
                   const std::vector<double>& grid);

struct ConvergenceRow {
  long n;
  double distance;
};

/// Distances indexed by n, rows sorted ascending in n; serializes to CSV in
/// the experiment module.
struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::string target_description;
};

/// True iff each successive distance <= previous * (1 + slack). slack absorbs
/// round-off wobble when the distances sit near machine precision.
bool assert_decreasing_trend(const ConvergenceTable& t, double slack);

}  // namespace bdop
