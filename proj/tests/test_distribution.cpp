#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "lpvar/distribution.hpp"
#include "lpvar/rng.hpp"
#include "test_support.hpp"

using namespace lpvar;

TEST_SUITE_BEGIN("distribution");

TEST_CASE("exact pushforward of centered balls") {
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  const Exponent two = conjugate(2.0);
  const Event small = Event::ball(StepFunction::constant(0.0), 0.5, two);
  CHECK(std::fabs(pushforward_exact(chi, small) - 0.25) <= 1e-12);

  CHECK(pushforward_exact(chi, small | ~small) == 1.0);

  const Event near_one = Event::ball(StepFunction::constant(1.0), 0.5, two);
  CHECK(std::fabs(pushforward_exact(chi, near_one) - 0.25) <= 1e-12);
}

TEST_CASE("event membership matches the preimage") {
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  const Exponent two = conjugate(2.0);
  const Event ev =
      (Event::ball(StepFunction::constant(0.0), 0.6, two) &
       ~Event::ball(StepFunction::constant(0.0), 0.3, two)) |
      Event::ball(StepFunction::constant(1.0), 0.4, two);
  const IntervalUnion pre = ev.preimage(chi);
  const CounterRng omegas(17);
  for (int s = 0; s < 2000; ++s) {
    const double w = omegas.uniform(s);
    CHECK(ev.contains(chi.evaluate(w)) == pre.contains(w));
  }
}

TEST_CASE("monte carlo estimates") {
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  const Exponent two = conjugate(2.0);
  SUBCASE("agrees with the exact value at the seeded default") {
    const Event ev = Event::ball(StepFunction::constant(0.0), 0.5, two);
    const MCEstimate mc = pushforward_mc(chi, ev, 100000, 42);
    CHECK(std::fabs(mc.estimate - 0.25) <= 4.0 * mc.std_error);
    CHECK(mc.samples == 100000);
    CHECK(mc.seed == 42);
  }
  SUBCASE("whole space") {
    const Event everything = Event::ball(StepFunction::constant(0.0), 100.0, two);
    const MCEstimate mc = pushforward_mc(chi, everything, 1000, 7);
    CHECK(mc.estimate == 1.0);
    CHECK(mc.std_error == 0.0);
  }
  SUBCASE("sample floor") {
    const Event ev = Event::ball(StepFunction::constant(0.0), 0.5, two);
    CHECK_THROWS_AS(pushforward_mc(chi, ev, 50, 1), std::domain_error);
  }
  SUBCASE("deterministic for a fixed seed") {
    const Event ev = Event::ball(StepFunction::constant(0.0), 0.7, two);
    const MCEstimate a = pushforward_mc(chi, ev, 5000, 99);
    const MCEstimate b = pushforward_mc(chi, ev, 5000, 99);
    CHECK(a.estimate == b.estimate);
  }
  SUBCASE("std_error formula") {
    const Event ev = Event::ball(StepFunction::constant(0.0), 0.5, two);
    const MCEstimate mc = pushforward_mc(chi, ev, 2500, 3);
    CHECK(std::fabs(mc.std_error - std::sqrt(mc.estimate *
                                             (1.0 - mc.estimate) / 2500.0)) <=
          1e-12);
  }
}

TEST_CASE("monte carlo consistency across seeded events") {
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  SequenceRng rng(101);
  int agreeing = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const double p = 1.5 + 0.5 * (trial % 4);
    const Exponent e = conjugate(p);
    const double eps = rng.next_in(0.35, 0.95);
    const Event ev = Event::ball(StepFunction::constant(0.0), eps, e);
    const double exact = pushforward_exact(chi, ev);
    const MCEstimate mc =
        pushforward_mc(chi, ev, 100000, 1000 + static_cast<std::uint64_t>(trial));
    if (std::fabs(mc.estimate - exact) <= 4.0 * mc.std_error) ++agreeing;
  }
  CHECK(agreeing >= 19);
}

TEST_CASE("additivity over disjoint events") {
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  const Exponent two = conjugate(2.0);
  const Event low = Event::ball(StepFunction::constant(0.0), 0.5, two);
  const Event high = Event::ball(StepFunction::constant(1.0), 0.5, two);
  const double whole = pushforward_exact(chi, low | high);
  const double parts =
      pushforward_exact(chi, low) + pushforward_exact(chi, high);
  CHECK(std::fabs(whole - parts) <= 1e-12);
}

TEST_CASE("monotonicity in the radius") {
  SequenceRng rng(102);
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  for (int trial = 0; trial < 50; ++trial) {
    const Exponent e = conjugate(rng.next_in(1.2, 4.0));
    const StepFunction center = lpvar_test::random_step(rng, 6, 1.5);
    const double r1 = rng.next_in(0.05, 1.0);
    const double r2 = r1 + rng.next_in(0.0, 1.0);
    CHECK(pushforward_exact(chi, Event::ball(center, r1, e)) <=
          pushforward_exact(chi, Event::ball(center, r2, e)) + 1e-15);
  }
}

TEST_CASE("small-ball probability closed form") {
  CHECK(std::fabs(small_ball_probability(0.5, conjugate(2.0)) - 0.25) <= 1e-12);
  CHECK(std::fabs(small_ball_probability(0.9, conjugate(3.0)) - 0.729) <= 1e-12);
  CHECK(std::fabs(small_ball_probability(0.99, conjugate(1.5)) -
                  std::pow(0.99, 1.5)) <= 1e-12);
  CHECK_THROWS_AS(small_ball_probability(0.0, conjugate(2.0)),
                  std::domain_error);
  CHECK_THROWS_AS(small_ball_probability(1.0, conjugate(2.0)),
                  std::domain_error);

  for (double p : {1.5, 2.0, 3.0}) {
    const Exponent e = conjugate(p);
    for (int i = 1; i <= 99; ++i) {
      const double eps = i / 100.0;
      CHECK(std::fabs(small_ball_probability(eps, e) - std::pow(eps, p)) <=
            1e-12);
    }
  }
}

TEST_CASE("ball events validate their radius") {
  CHECK_THROWS_AS(Event::ball(StepFunction(), 0.0, conjugate(2.0)),
                  std::domain_error);
  CHECK_THROWS_AS(Event::ball(StepFunction(), -1.0, conjugate(2.0)),
                  std::domain_error);
}

TEST_SUITE_END();
