#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "lpvar/rv.hpp"

namespace lpvar {

// An open norm ball {f : ||f - center||_p < radius}.
struct BallEvent {
  BallEvent(StepFunction center, double radius, Exponent exponent);

  StepFunction center;
  double radius;
  Exponent exponent;
};

// A finite boolean combination of open balls. Immutable shared tree.
class Event {
 public:
  Event(BallEvent ball);  // NOLINT(google-explicit-constructor)
  static Event ball(StepFunction center, double radius, const Exponent& e);

  friend Event operator|(const Event& a, const Event& b);  // union
  friend Event operator&(const Event& a, const Event& b);  // intersection
  friend Event operator~(const Event& a);                  // complement

  // Membership by direct norm evaluation, strict at the boundary.
  bool contains(const StepFunction& f) const;

  IntervalUnion preimage(const LpRandomVariable& xi) const;

  std::string describe() const;

 private:
  struct Node;
  explicit Event(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

struct MCEstimate {
  MCEstimate(double estimate, std::int64_t samples, std::uint64_t seed);

  double estimate;
  double std_error;  // sqrt(estimate * (1 - estimate) / samples)
  std::int64_t samples;
  std::uint64_t seed;
};

// Probability of the event under the law of xi, via the exact preimage.
double pushforward_exact(const LpRandomVariable& xi, const Event& event);

// Seeded Monte Carlo estimate of the same probability; deterministic for
// fixed (seed, samples) regardless of evaluation order.
MCEstimate pushforward_mc(const LpRandomVariable& xi, const Event& event,
                          std::int64_t samples, std::uint64_t seed);

// Probability that the prefix-indicator process lands in the centered ball
// of radius epsilon; equals epsilon^p.
double small_ball_probability(double epsilon, const Exponent& e);

}  // namespace lpvar
