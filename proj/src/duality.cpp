#include "lpvar/duality.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lpvar {

namespace {

constexpr double kZeroNormTol = 1e-12;
constexpr double kMaxFamilyMembers = 1e6;

}  // namespace

NormingFunctional::NormingFunctional(const StepFunction& reference,
                                     const Exponent& exponent)
    : reference_(reference), representer_(), exponent_(exponent) {
  const double norm = lp_norm(reference, exponent.p());
  if (norm <= kZeroNormTol) {
    throw std::invalid_argument(
        "NormingFunctional: reference has (near-)zero norm; no functional is "
        "canonical for 0");
  }
  // Y = sign(x) |x|^(p-1) / ||x||^(p-1): pairs with x to ||x||_p and has unit
  // q-norm.
  const double scale = pow_abs(norm, exponent.p() - 1.0);
  std::vector<double> values(reference.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = reference.values()[i];
    values[i] =
        v == 0.0
            ? 0.0
            : std::copysign(pow_abs(v, exponent.p() - 1.0) / scale, v);
  }
  representer_ = StepFunction(reference.breakpoints(), std::move(values));
}

DenseFamily::DenseFamily(std::vector<StepFunction> members,
                         double density_radius, double value_bound,
                         const Exponent& e)
    : members_(std::move(members)),
      density_radius_(density_radius),
      value_bound_(value_bound) {
  if (members_.empty()) {
    throw std::invalid_argument("DenseFamily: members must be nonempty");
  }
  if (!(density_radius_ > 0.0) || !(value_bound_ > 0.0)) {
    throw std::invalid_argument(
        "DenseFamily: density radius and value bound must be positive");
  }
  for (const auto& m : members_) {
    if (lp_norm(m, e.p()) > value_bound_ + density_radius_) {
      throw std::invalid_argument(
          "DenseFamily: member norm exceeds value_bound + density_radius");
    }
  }
}

DenseFamily DenseFamily::dyadic(int level, int value_levels, double bound,
                                const Exponent& e) {
  if (level < 1 || value_levels < 1 || !(bound > 0.0)) {
    throw std::domain_error(
        "DenseFamily::dyadic: need level >= 1, value_levels >= 1, bound > 0");
  }
  const int cells = 1 << level;
  const int value_count = 2 * value_levels + 1;
  const double member_count =
      std::pow(static_cast<double>(value_count), static_cast<double>(cells));
  if (!(member_count <= kMaxFamilyMembers)) {
    throw std::length_error(
        "DenseFamily::dyadic: (2L+1)^(2^k) members exceed the cap of 1e6; "
        "reduce level or value_levels");
  }

  std::vector<double> grid(static_cast<std::size_t>(cells) + 1);
  for (int j = 0; j <= cells; ++j) grid[j] = std::ldexp(double(j), -level);
  std::vector<double> value_grid(value_count);
  for (int t = 0; t < value_count; ++t) {
    value_grid[t] = -bound + t * (bound / value_levels);
  }

  const auto total = static_cast<std::size_t>(member_count);
  std::vector<StepFunction> members;
  members.reserve(total);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<double> values(cells);
    std::size_t digits = n;
    for (int c = 0; c < cells; ++c) {
      values[c] = value_grid[digits % value_count];
      digits /= value_count;
    }
    members.emplace_back(grid, std::move(values));
  }
  DenseFamily fam(std::move(members), bound / value_levels, bound, e);
  fam.params_ = FamilyParams{"dyadic", level, value_levels, bound};
  return fam;
}

DenseFamily DenseFamily::prefix_indicators(int level, const Exponent& e) {
  if (level < 1 || level > 30) {
    throw std::domain_error(
        "DenseFamily::prefix_indicators: level must lie in [1, 30]");
  }
  const int count = 1 << level;
  std::vector<StepFunction> members;
  members.reserve(count);
  for (int j = 1; j <= count; ++j) {
    members.push_back(
        StepFunction::prefix_indicator(std::ldexp(double(j), -level)));
  }
  const double delta = std::pow(2.0, -static_cast<double>(level) / e.p());
  DenseFamily fam(std::move(members), delta, 1.0, e);
  fam.params_ = FamilyParams{"prefix_indicators", level, 0, 0.0};
  return fam;
}

double norm_via_sup(const StepFunction& x, const DenseFamily& fam,
                    const Exponent& e) {
  double best = 0.0;
  bool any = false;
  for (const auto& member : fam.members()) {
    if (lp_norm(member, e.p()) <= kZeroNormTol) continue;
    any = true;
    best = std::max(best,
                    std::fabs(NormingFunctional(member, e).apply(x)));
  }
  if (!any) {
    throw std::domain_error(
        "norm_via_sup: no family member has positive norm");
  }
  return best;
}

ModulusCheck weak_modulus_check(double a, double b, const StepFunction& y,
                                const Exponent& e) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
    throw std::domain_error("weak_modulus_check: a, b must lie in (0,1)");
  }
  double lhs = 0.0;
  if (a != b) {
    lhs = std::fabs(pairing(StepFunction::prefix_indicator(a) -
                                StepFunction::prefix_indicator(b),
                            y));
  }
  const double bound =
      lp_norm(y, e.q()) * std::pow(std::fabs(a - b), 1.0 / e.p());
  return {lhs, bound};
}

}  // namespace lpvar
