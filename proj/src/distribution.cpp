#include "lpvar/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "lpvar/format.hpp"
#include "lpvar/rng.hpp"

namespace lpvar {

BallEvent::BallEvent(StepFunction center_, double radius_, Exponent exponent_)
    : center(std::move(center_)), radius(radius_), exponent(exponent_) {
  if (!(radius > 0.0)) {
    throw std::domain_error("BallEvent: radius must be positive");
  }
}

struct Event::Node {
  enum class Op { Ball, Union, Intersection, Complement };

  explicit Node(BallEvent b) : op(Op::Ball), ball(std::move(b)) {}
  Node(Op o, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r)
      : op(o), lhs(std::move(l)), rhs(std::move(r)) {}

  Op op;
  std::optional<BallEvent> ball;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

Event::Event(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Event::Event(BallEvent ball)
    : node_(std::make_shared<const Node>(std::move(ball))) {}

Event Event::ball(StepFunction center, double radius, const Exponent& e) {
  return Event(BallEvent(std::move(center), radius, e));
}

Event operator|(const Event& a, const Event& b) {
  return Event(std::make_shared<const Event::Node>(
      Event::Node::Op::Union, a.node_, b.node_));
}

Event operator&(const Event& a, const Event& b) {
  return Event(std::make_shared<const Event::Node>(
      Event::Node::Op::Intersection, a.node_, b.node_));
}

Event operator~(const Event& a) {
  return Event(std::make_shared<const Event::Node>(
      Event::Node::Op::Complement, a.node_, nullptr));
}

bool Event::contains(const StepFunction& f) const {
  switch (node_->op) {
    case Node::Op::Ball: {
      const BallEvent& b = *node_->ball;
      return lp_norm(f - b.center, b.exponent.p()) < b.radius;
    }
    case Node::Op::Union:
      return Event(node_->lhs).contains(f) || Event(node_->rhs).contains(f);
    case Node::Op::Intersection:
      return Event(node_->lhs).contains(f) && Event(node_->rhs).contains(f);
    case Node::Op::Complement:
      return !Event(node_->lhs).contains(f);
  }
  return false;
}

IntervalUnion Event::preimage(const LpRandomVariable& xi) const {
  switch (node_->op) {
    case Node::Op::Ball: {
      const BallEvent& b = *node_->ball;
      return ball_preimage(xi, b.center, b.radius, b.exponent);
    }
    case Node::Op::Union:
      return set_union(Event(node_->lhs).preimage(xi),
                       Event(node_->rhs).preimage(xi));
    case Node::Op::Intersection:
      return set_intersection(Event(node_->lhs).preimage(xi),
                              Event(node_->rhs).preimage(xi));
    case Node::Op::Complement:
      return set_complement(Event(node_->lhs).preimage(xi));
  }
  return IntervalUnion();
}

std::string Event::describe() const {
  switch (node_->op) {
    case Node::Op::Ball: {
      const BallEvent& b = *node_->ball;
      std::string center = b.center.cell_count() == 1
                               ? "const:" + format_double(b.center.values()[0])
                               : "step:" + std::to_string(b.center.cell_count()) +
                                     "cells";
      return "ball(p=" + format_double(b.exponent.p()) +
             ";radius=" + format_double(b.radius) + ";center=" + center + ")";
    }
    case Node::Op::Union:
      return "(" + Event(node_->lhs).describe() + "|" +
             Event(node_->rhs).describe() + ")";
    case Node::Op::Intersection:
      return "(" + Event(node_->lhs).describe() + "&" +
             Event(node_->rhs).describe() + ")";
    case Node::Op::Complement:
      return "~" + Event(node_->lhs).describe();
  }
  return "";
}

MCEstimate::MCEstimate(double estimate_, std::int64_t samples_,
                       std::uint64_t seed_)
    : estimate(estimate_),
      std_error(std::sqrt(estimate_ * (1.0 - estimate_) / samples_)),
      samples(samples_),
      seed(seed_) {}

double pushforward_exact(const LpRandomVariable& xi, const Event& event) {
  return std::clamp(event.preimage(xi).measure(), 0.0, 1.0);
}

MCEstimate pushforward_mc(const LpRandomVariable& xi, const Event& event,
                          std::int64_t samples, std::uint64_t seed) {
  if (samples < 100) {
    throw std::domain_error("pushforward_mc: at least 100 samples required");
  }
  const CounterRng rng(seed);
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    if (event.contains(xi.evaluate(rng.uniform(static_cast<std::uint64_t>(i))))) {
      ++hits;
    }
  }
  return MCEstimate(static_cast<double>(hits) / samples, samples, seed);
}

double small_ball_probability(double epsilon, const Exponent& e) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error(
        "small_ball_probability: epsilon must lie in (0,1)");
  }
  return pushforward_exact(
      LpRandomVariable::indicator_process(),
      Event::ball(StepFunction::constant(0.0), epsilon, e));
}

}  // namespace lpvar
