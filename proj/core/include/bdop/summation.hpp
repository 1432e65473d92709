#pragma once

#include <cmath>

namespace bdop {

/// Neumaier compensated summation. Used where a plain left-to-right sum of a
/// few thousand terms would eat into a 1e-12 tolerance.
class NeumaierSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace bdop
