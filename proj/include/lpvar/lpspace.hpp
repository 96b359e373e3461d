#pragma once

#include <cmath>

#include "lpvar/exponent.hpp"
#include "lpvar/interval_union.hpp"
#include "lpvar/step_function.hpp"

namespace lpvar {

// |v|^p via exp(p*log|v|), with v = 0 short-circuited to 0.
inline double pow_abs(double v, double p) {
  if (v == 0.0) return 0.0;
  return std::exp(p * std::log(std::fabs(v)));
}

// Integral of |f|^p over (0,1), exact per cell.
double lp_norm_pow(const StepFunction& f, double p);

double lp_norm(const StepFunction& f, double p);

inline double lp_norm(const StepFunction& f, const Exponent& e) {
  return lp_norm(f, e.p());
}

// The bilinear pairing: exact integral of x*y over the common refinement.
// Satisfies |pairing(x,y)| <= lp_norm(x,p) * lp_norm(y,q).
double pairing(const StepFunction& x, const StepFunction& y);

// Returns the p-th power of the distance between the prefix indicators at a
// and b; equals |a - b| identically.
double distance_identity_check(double a, double b, const Exponent& e);

}  // namespace lpvar
