#pragma once

#include <stdexcept>
#include <string>

namespace lpvar {

inline constexpr double kMinExponent = 1.0 + 1e-9;
inline constexpr double kMaxExponent = 1e9;

// Conjugate exponent pair (p, q) with 1/p + 1/q = 1 and p, q in (1, inf).
// q is always derived from p, never set independently.
class Exponent {
 public:
  double p() const { return p_; }
  double q() const { return q_; }

  friend Exponent conjugate(double p);

 private:
  Exponent(double p, double q) : p_(p), q_(q) {}

  double p_;
  double q_;
};

inline Exponent conjugate(double p) {
  if (!(p > kMinExponent && p < kMaxExponent)) {
    throw std::domain_error("conjugate: p must lie in (1 + 1e-9, 1e9), got " +
                            std::to_string(p));
  }
  return Exponent(p, p / (p - 1.0));
}

}  // namespace lpvar
