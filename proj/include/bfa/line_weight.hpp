#pragma once
// Scalar central weights on the real line (dual side of Heisenberg groups):
// w(x + y) <= w(x) w(y) checked over finite grids.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bfa/dual.hpp"

namespace bfa {

// Either the closed-form family tau_a(x) = (1 + |x|)^a or a sampled weight.
// Sampled weights interpolate linearly in log-value between grid points
// (geometric interpolation survives refinement better than linear) and
// extend by the boundary value outside the grid, flagged as extrapolation.
class LineWeight {
public:
  static LineWeight tau_a(double a) {
    if (!(a >= 0.0)) throw DomainError("tau_a exponent a must be >= 0");
    LineWeight w;
    w.is_tau_ = true;
    w.a_ = a;
    return w;
  }

  static LineWeight sampled(std::vector<double> grid, std::vector<double> values,
                            double delta) {
    if (grid.size() != values.size() || grid.empty())
      throw DomainError("sampled line weight needs matching, nonempty grid and values");
    if (!std::is_sorted(grid.begin(), grid.end()))
      throw DomainError("sampled line weight grid must be sorted");
    if (!(delta > 0.0)) throw DomainError("sampled line weight needs delta > 0");
    for (double v : values)
      if (!(v >= delta)) throw DomainError("sampled value below the declared lower bound");
    LineWeight w;
    w.grid_ = std::move(grid);
    w.values_ = std::move(values);
    w.delta_ = delta;
    return w;
  }

  bool is_tau() const { return is_tau_; }
  double a() const { return a_; }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double delta() const { return is_tau_ ? 1.0 : delta_; }

  double eval(double x, bool* extrapolated = nullptr) const {
    if (extrapolated) *extrapolated = false;
    if (is_tau_) return std::pow(1.0 + std::abs(x), a_);
    if (x <= grid_.front()) {
      if (extrapolated && x < grid_.front()) *extrapolated = true;
      return values_.front();
    }
    if (x >= grid_.back()) {
      if (extrapolated && x > grid_.back()) *extrapolated = true;
      return values_.back();
    }
    auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - grid_.begin());
    std::size_t lo = hi - 1;
    double t = (x - grid_[lo]) / (grid_[hi] - grid_[lo]);
    return std::exp((1.0 - t) * std::log(values_[lo]) + t * std::log(values_[hi]));
  }

private:
  LineWeight() = default;
  bool is_tau_ = false;
  double a_ = 0.0;
  std::vector<double> grid_;
  std::vector<double> values_;
  double delta_ = 1.0;
};

struct LineViolation {
  double x = 0.0, y = 0.0;
  double ratio = 0.0;  // w(x+y) / (w(x) w(y))
};

struct LineReport {
  std::vector<LineViolation> violations;
  std::size_t checked_pairs = 0;
  std::size_t extrapolated_sums = 0;  // sums evaluated past the sample range
  std::string grid;

  bool ok() const { return violations.empty(); }
};

// Checks w(x+y) <= w(x) w(y) (1 + 1e-12) over all unordered grid pairs.
inline LineReport verify_line_weight(const LineWeight& w, const std::vector<double>& grid) {
  if (grid.empty()) throw DomainError("verify_line_weight needs a nonempty grid");
  LineReport report;
  report.grid = std::to_string(grid.size()) + " points in [" +
                std::to_string(*std::min_element(grid.begin(), grid.end())) + ", " +
                std::to_string(*std::max_element(grid.begin(), grid.end())) + "]";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i; j < grid.size(); ++j) {
      ++report.checked_pairs;
      bool extra = false;
      double lhs = w.eval(grid[i] + grid[j], &extra);
      if (extra) ++report.extrapolated_sums;
      double ratio = lhs / (w.eval(grid[i]) * w.eval(grid[j]));
      if (ratio > 1.0 + 1e-12) report.violations.push_back({grid[i], grid[j], ratio});
    }
  }
  return report;
}

inline std::vector<double> uniform_grid(double lo, double step, double hi) {
  if (!(step > 0.0) || !(hi >= lo)) throw DomainError("bad grid specification");
  std::vector<double> out;
  for (double x = lo; x <= hi + step * 1e-9; x += step) out.push_back(x);
  return out;
}

}  // namespace bfa
