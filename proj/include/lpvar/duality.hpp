#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpvar/lpspace.hpp"

namespace lpvar {

// A continuous linear functional on L^p(0,1) that attains the norm of its
// reference element: apply(reference) = lp_norm(reference, p) and the
// representer has unit q-norm. Undefined for a (near-)zero reference.
class NormingFunctional {
 public:
  NormingFunctional(const StepFunction& reference, const Exponent& exponent);

  const StepFunction& reference() const { return reference_; }
  const StepFunction& representer() const { return representer_; }
  const Exponent& exponent() const { return exponent_; }

  double apply(const StepFunction& x) const { return pairing(x, representer_); }

 private:
  StepFunction reference_;
  StepFunction representer_;
  Exponent exponent_;
};

// Construction parameters of a reproducible family; used for serialization.
struct FamilyParams {
  std::string kind;      // "dyadic" or "prefix_indicators"
  int level = 0;
  int value_levels = 0;  // dyadic only
  double bound = 0.0;    // dyadic only
};

// An ordered finite family of step functions together with a declared
// density radius: every target inside the family's coverage class lies
// within density_radius of some member.
class DenseFamily {
 public:
  DenseFamily(std::vector<StepFunction> members, double density_radius,
              double value_bound, const Exponent& e);

  // All step functions on the grid {j/2^level} with values on the
  // (2*value_levels+1)-point uniform grid of [-bound, bound].
  // density_radius = bound / value_levels.
  static DenseFamily dyadic(int level, int value_levels, double bound,
                            const Exponent& e);

  // The prefix indicators 1 on (0, j/2^level], j = 1..2^level.
  // Covers every prefix indicator within density_radius = 2^(-level/p).
  static DenseFamily prefix_indicators(int level, const Exponent& e);

  const std::vector<StepFunction>& members() const { return members_; }
  double density_radius() const { return density_radius_; }
  double value_bound() const { return value_bound_; }
  const std::optional<FamilyParams>& params() const { return params_; }

 private:
  std::vector<StepFunction> members_;
  double density_radius_;
  double value_bound_;
  std::optional<FamilyParams> params_;
};

// max_j |pairing(x, representer_j)| over the family's norming functionals.
// Never exceeds lp_norm(x, p) by more than rounding; reaches at least
// lp_norm(x, p) - 2*density_radius when x is inside the family's coverage.
double norm_via_sup(const StepFunction& x, const DenseFamily& fam,
                    const Exponent& e);

struct ModulusCheck {
  double lhs;    // |pairing(prefix(a) - prefix(b), y)|
  double bound;  // lp_norm(y, q) * |a-b|^(1/p)
};

ModulusCheck weak_modulus_check(double a, double b, const StepFunction& y,
                                const Exponent& e);

}  // namespace lpvar
