#include "lpvar/lpspace.hpp"

#include <cmath>
#include <stdexcept>

namespace lpvar {

double lp_norm_pow(const StepFunction& f, double p) {
  const auto& bp = f.breakpoints();
  const auto& vals = f.values();
  long double acc = 0.0L;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] == 0.0) continue;
    acc += static_cast<long double>(pow_abs(vals[i], p)) * (bp[i + 1] - bp[i]);
  }
  return static_cast<double>(acc);
}

double lp_norm(const StepFunction& f, double p) {
  return std::pow(lp_norm_pow(f, p), 1.0 / p);
}

double pairing(const StepFunction& x, const StepFunction& y) {
  const auto& bx = x.breakpoints();
  const auto& by = y.breakpoints();
  std::size_t i = 0;
  std::size_t j = 0;
  double prev = 0.0;
  long double acc = 0.0L;
  while (i < x.cell_count() && j < y.cell_count()) {
    const double next = std::min(bx[i + 1], by[j + 1]);
    acc += static_cast<long double>(x.values()[i]) * y.values()[j] *
           (next - prev);
    if (bx[i + 1] == next) ++i;
    if (by[j + 1] == next) ++j;
    prev = next;
  }
  return static_cast<double>(acc);
}

double distance_identity_check(double a, double b, const Exponent& e) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
    throw std::domain_error(
        "distance_identity_check: arguments must lie in (0,1)");
  }
  if (a == b) return 0.0;
  return lp_norm_pow(
      StepFunction::prefix_indicator(a) - StepFunction::prefix_indicator(b),
      e.p());
}

}  // namespace lpvar
