#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lpvar {

// Breakpoints closer than this are merged during canonicalization.
inline constexpr double kBreakpointMergeTol = 1e-12;

// A real step function on (0,1], stored in canonical form: strictly
// increasing breakpoints 0 = b_0 < ... < b_m = 1 and finite cell values
// v_1..v_m, where v_i holds on the half-open cell (b_{i-1}, b_i].
// Canonical form merges breakpoints within kBreakpointMergeTol and adjacent
// cells with equal values, so each a.e.-equivalence class has one
// representation and equality is plain member comparison.
class StepFunction {
 public:
  StepFunction();  // the zero function
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  static StepFunction constant(double value);
  static StepFunction indicator(double lo, double hi);    // 1 on (lo, hi]
  static StepFunction prefix_indicator(double omega);     // 1 on (0, omega]

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t cell_count() const { return values_.size(); }

  double value_at(double t) const;  // t in (0,1]
  double max_abs_value() const;
  bool is_zero() const;

  bool operator==(const StepFunction&) const = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;

  void canonicalize();
};

// Exact pointwise combination sum_i coeffs[i]*fs[i] on the common refinement.
StepFunction linear_combine(std::span<const double> coeffs,
                            std::span<const StepFunction> fs);

StepFunction operator+(const StepFunction& a, const StepFunction& b);
StepFunction operator-(const StepFunction& a, const StepFunction& b);
StepFunction operator*(double c, const StepFunction& f);

}  // namespace lpvar
