#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "lpvar/rng.hpp"
#include "lpvar/rv.hpp"
#include "lpvar/step_function.hpp"

namespace lpvar_test {

inline lpvar::StepFunction random_step(lpvar::SequenceRng& rng, int max_cells,
                                       double bound) {
  const int cells = 1 + rng.next_index(max_cells);
  std::vector<double> bp;
  bp.push_back(0.0);
  for (int i = 0; i < cells - 1; ++i) bp.push_back(rng.next_uniform());
  bp.push_back(1.0);
  std::sort(bp.begin(), bp.end());
  std::vector<double> vals(static_cast<std::size_t>(cells));
  for (auto& v : vals) v = rng.next_in(-bound, bound);
  return lpvar::StepFunction(std::move(bp), std::move(vals));
}

inline lpvar::StepFunction random_nonzero_step(lpvar::SequenceRng& rng,
                                               int max_cells, double bound,
                                               double p) {
  for (;;) {
    lpvar::StepFunction f = random_step(rng, max_cells, bound);
    if (lpvar::lp_norm(f, p) > 1e-6) return f;
  }
}

// Step function with breakpoints on the grid {j/2^level} and values that are
// integer multiples of 2^-value_bits; every arithmetic combination of such
// functions stays exactly representable.
inline lpvar::StepFunction random_dyadic_step(lpvar::SequenceRng& rng,
                                              int level, int value_bits,
                                              int value_range) {
  const int cells = 1 << level;
  std::vector<double> bp(static_cast<std::size_t>(cells) + 1);
  for (int j = 0; j <= cells; ++j) bp[j] = std::ldexp(double(j), -level);
  std::vector<double> vals(static_cast<std::size_t>(cells));
  for (auto& v : vals) {
    const int ticks = rng.next_index(2 * value_range + 1) - value_range;
    v = std::ldexp(double(ticks), -value_bits);
  }
  return lpvar::StepFunction(std::move(bp), std::move(vals));
}

// Simple variable whose partition is the dyadic grid at `level` and whose
// values are dyadic step functions.
inline lpvar::SimpleLpRV random_dyadic_simple(lpvar::SequenceRng& rng,
                                              int level, int value_level,
                                              int value_bits,
                                              int value_range) {
  const int cells = 1 << level;
  std::vector<lpvar::SimpleLpRV::Cell> out;
  out.reserve(static_cast<std::size_t>(cells));
  for (int j = 1; j <= cells; ++j) {
    const double lo = std::ldexp(double(j - 1), -level);
    const double hi = std::ldexp(double(j), -level);
    out.push_back({lpvar::IntervalUnion::single(lo, hi),
                   random_dyadic_step(rng, value_level, value_bits,
                                      value_range)});
  }
  return lpvar::SimpleLpRV(std::move(out));
}

}  // namespace lpvar_test
