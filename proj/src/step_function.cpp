#include "lpvar/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lpvar {

StepFunction::StepFunction() : breakpoints_{0.0, 1.0}, values_{0.0} {}

StepFunction::StepFunction(std::vector<double> breakpoints,
                           std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty() || breakpoints_.size() != values_.size() + 1) {
    throw std::invalid_argument(
        "StepFunction: need m+1 breakpoints for m >= 1 values");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i])) {
      throw std::invalid_argument("StepFunction: non-finite breakpoint at index " +
                                  std::to_string(i));
    }
  }
  if (std::fabs(breakpoints_.front()) > kBreakpointMergeTol) {
    throw std::invalid_argument("StepFunction: first breakpoint must be 0");
  }
  if (std::fabs(breakpoints_.back() - 1.0) > kBreakpointMergeTol) {
    throw std::invalid_argument("StepFunction: last breakpoint must be 1");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (breakpoints_[i + 1] - breakpoints_[i] <= -kBreakpointMergeTol) {
      throw std::invalid_argument(
          "StepFunction: breakpoints not increasing at index " +
          std::to_string(i + 1));
    }
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw std::invalid_argument("StepFunction: non-finite value at index " +
                                  std::to_string(i));
    }
  }
  canonicalize();
}

void StepFunction::canonicalize() {
  // Pin the endpoints and drop cells narrower than the merge tolerance: a
  // tiny interior cell is absorbed by its right neighbour, a tiny final cell
  // by its left neighbour.
  std::vector<double> nb;
  std::vector<double> nv;
  nb.reserve(breakpoints_.size());
  nv.reserve(values_.size());
  nb.push_back(0.0);
  const std::size_t m = values_.size();
  for (std::size_t i = 1; i <= m; ++i) {
    const double b =
        (i == m) ? 1.0 : std::min(std::max(breakpoints_[i], 0.0), 1.0);
    if (b - nb.back() < kBreakpointMergeTol) {
      if (i < m) continue;
      nb.back() = 1.0;
      break;
    }
    nb.push_back(b);
    nv.push_back(values_[i - 1] == 0.0 ? 0.0 : values_[i - 1]);
  }

  // Merge adjacent cells with equal values.
  breakpoints_.clear();
  values_.clear();
  breakpoints_.push_back(nb.front());
  for (std::size_t c = 0; c < nv.size(); ++c) {
    if (!values_.empty() && nv[c] == values_.back()) {
      breakpoints_.back() = nb[c + 1];
    } else {
      values_.push_back(nv[c]);
      breakpoints_.push_back(nb[c + 1]);
    }
  }
}

StepFunction StepFunction::constant(double value) {
  return StepFunction({0.0, 1.0}, {value});
}

StepFunction StepFunction::indicator(double lo, double hi) {
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
    throw std::domain_error("StepFunction::indicator: need 0 <= lo < hi <= 1");
  }
  std::vector<double> b{0.0};
  std::vector<double> v;
  if (lo > 0.0) {
    b.push_back(lo);
    v.push_back(0.0);
  }
  b.push_back(hi);
  v.push_back(1.0);
  if (hi < 1.0) {
    b.push_back(1.0);
    v.push_back(0.0);
  }
  return StepFunction(std::move(b), std::move(v));
}

StepFunction StepFunction::prefix_indicator(double omega) {
  if (!(omega > 0.0 && omega <= 1.0)) {
    throw std::domain_error(
        "StepFunction::prefix_indicator: omega must lie in (0,1]");
  }
  return indicator(0.0, omega);
}

double StepFunction::value_at(double t) const {
  if (!(t > 0.0 && t <= 1.0)) {
    throw std::domain_error("StepFunction::value_at: t must lie in (0,1]");
  }
  auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double StepFunction::max_abs_value() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::fabs(v));
  return m;
}

bool StepFunction::is_zero() const {
  return values_.size() == 1 && values_[0] == 0.0;
}

StepFunction linear_combine(std::span<const double> coeffs,
                            std::span<const StepFunction> fs) {
  if (coeffs.empty() || coeffs.size() != fs.size()) {
    throw std::invalid_argument(
        "linear_combine: coefficient and function lists must be nonempty and "
        "of equal length");
  }

  std::vector<double> grid;
  for (const auto& f : fs) {
    grid.insert(grid.end(), f.breakpoints().begin(), f.breakpoints().end());
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  // Segment contributions via a difference array over the shared grid.
  const std::size_t cells = grid.size() - 1;
  std::vector<long double> diff(cells + 1, 0.0L);
  for (std::size_t n = 0; n < fs.size(); ++n) {
    const auto& bp = fs[n].breakpoints();
    const auto& vals = fs[n].values();
    for (std::size_t c = 0; c < vals.size(); ++c) {
      const double contribution = coeffs[n] * vals[c];
      if (contribution == 0.0) continue;
      const auto lo = static_cast<std::size_t>(
          std::lower_bound(grid.begin(), grid.end(), bp[c]) - grid.begin());
      const auto hi = static_cast<std::size_t>(
          std::lower_bound(grid.begin(), grid.end(), bp[c + 1]) - grid.begin());
      diff[lo] += contribution;
      diff[hi] -= contribution;
    }
  }

  std::vector<double> values(cells);
  long double running = 0.0L;
  for (std::size_t c = 0; c < cells; ++c) {
    running += diff[c];
    values[c] = static_cast<double>(running);
  }
  return StepFunction(std::move(grid), std::move(values));
}

StepFunction operator+(const StepFunction& a, const StepFunction& b) {
  const double coeffs[] = {1.0, 1.0};
  const StepFunction fns[] = {a, b};
  return linear_combine(coeffs, fns);
}

StepFunction operator-(const StepFunction& a, const StepFunction& b) {
  const double coeffs[] = {1.0, -1.0};
  const StepFunction fns[] = {a, b};
  return linear_combine(coeffs, fns);
}

StepFunction operator*(double c, const StepFunction& f) {
  const double coeffs[] = {c};
  const StepFunction fns[] = {f};
  return linear_combine(coeffs, fns);
}

}  // namespace lpvar
