#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "lpvar/duality.hpp"
#include "lpvar/rng.hpp"
#include "test_support.hpp"

using namespace lpvar;

TEST_SUITE_BEGIN("duality");

TEST_CASE("norming functional attains the norm") {
  const Exponent two = conjugate(2.0);
  const StepFunction x = StepFunction::indicator(0.0, 0.25);
  const NormingFunctional functional(x, two);
  CHECK(functional.representer() == 2.0 * x);
  CHECK(std::fabs(functional.apply(x) - 0.5) <= 1e-12);
  CHECK(std::fabs(lp_norm(functional.representer(), two.q()) - 1.0) <= 1e-12);
}

TEST_CASE("constants are self-norming") {
  for (double p : {1.5, 2.0, 3.0}) {
    const Exponent e = conjugate(p);
    const NormingFunctional pos(StepFunction::constant(1.0), e);
    CHECK(pos.representer() == StepFunction::constant(1.0));
    CHECK(std::fabs(pos.apply(StepFunction::constant(1.0)) - 1.0) <= 1e-12);

    const NormingFunctional neg(StepFunction::constant(-1.0), e);
    CHECK(neg.representer() == StepFunction::constant(-1.0));
    CHECK(std::fabs(neg.apply(StepFunction::constant(-1.0)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("zero reference is rejected") {
  CHECK_THROWS_AS(NormingFunctional(StepFunction(), conjugate(2.0)),
                  std::invalid_argument);
}

TEST_CASE("norming invariants on a random corpus") {
  SequenceRng rng(21);
  for (int i = 0; i < 500; ++i) {
    for (double p : {1.5, 2.0, 3.0}) {
      const Exponent e = conjugate(p);
      const StepFunction x = lpvar_test::random_nonzero_step(rng, 32, 10.0, p);
      const NormingFunctional f(x, e);
      CHECK(std::fabs(f.apply(x) - lp_norm(x, p)) <= 1e-10);
      CHECK(std::fabs(lp_norm(f.representer(), e.q()) - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("dyadic family enumeration") {
  const Exponent two = conjugate(2.0);
  CHECK(DenseFamily::dyadic(1, 1, 1.0, two).members().size() == 9);
  const DenseFamily fam = DenseFamily::dyadic(2, 2, 1.0, two);
  CHECK(fam.members().size() == 625);
  CHECK(fam.density_radius() == 0.5);
  CHECK_THROWS_AS(DenseFamily::dyadic(8, 4, 1.0, two), std::length_error);
  CHECK_THROWS_AS(DenseFamily::dyadic(0, 1, 1.0, two), std::domain_error);
}

TEST_CASE("family members reproduce their own norm via the sup") {
  const Exponent two = conjugate(2.0);
  const DenseFamily fam = DenseFamily::dyadic(1, 1, 1.0, two);
  for (const auto& member : fam.members()) {
    const double sup = norm_via_sup(member, fam, two);
    CHECK(std::fabs(sup - lp_norm(member, two)) <= 1e-10);
  }
}

TEST_CASE("norm_via_sup bounds") {
  for (double p : {1.5, 2.0, 3.0}) {
    const Exponent e = conjugate(p);
    const DenseFamily fam = DenseFamily::prefix_indicators(8, e);
    const double delta = fam.density_radius();
    CHECK(std::fabs(delta - std::pow(2.0, -8.0 / p)) <= 1e-15);

    const StepFunction x = StepFunction::prefix_indicator(0.3);
    const double sup = norm_via_sup(x, fam, e);
    const double norm = lp_norm(x, p);
    CHECK(sup <= norm + 1e-10);
    CHECK(sup >= norm - 2.0 * delta);
  }
}

TEST_CASE("norm_via_sup of the zero function") {
  const Exponent two = conjugate(2.0);
  const DenseFamily fam = DenseFamily::prefix_indicators(3, two);
  CHECK(norm_via_sup(StepFunction(), fam, two) == 0.0);
}

TEST_CASE("a family of zero members has no functionals") {
  const Exponent two = conjugate(2.0);
  const DenseFamily fam({StepFunction()}, 1.0, 1.0, two);
  CHECK_THROWS_AS(norm_via_sup(StepFunction::constant(1.0), fam, two),
                  std::domain_error);
}

TEST_CASE("norm_via_sup never exceeds the norm") {
  SequenceRng rng(33);
  const Exponent e = conjugate(1.5);
  const DenseFamily fam = DenseFamily::dyadic(2, 2, 1.0, e);
  for (int i = 0; i < 100; ++i) {
    const StepFunction x = lpvar_test::random_step(rng, 16, 3.0);
    CHECK(norm_via_sup(x, fam, e) <= lp_norm(x, e.p()) + 1e-10);
  }
}

TEST_CASE("statistical density of the dyadic family") {
  const Exponent e = conjugate(2.0);
  const DenseFamily fam = DenseFamily::dyadic(2, 2, 1.0, e);
  SequenceRng rng(55);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> vals(4);
    for (auto& v : vals) v = rng.next_in(-1.0, 1.0);
    const StepFunction x({0.0, 0.25, 0.5, 0.75, 1.0}, std::move(vals));
    double closest = 1e300;
    for (const auto& member : fam.members()) {
      closest = std::min(closest, lp_norm(x - member, e.p()));
    }
    CHECK(closest <= fam.density_radius());
  }
}

TEST_CASE("weak modulus bound") {
  const Exponent two = conjugate(2.0);

  const auto same = weak_modulus_check(0.4, 0.4, StepFunction::constant(2.0), two);
  CHECK(same.lhs == 0.0);
  CHECK(same.bound == 0.0);

  const auto wide = weak_modulus_check(0.1, 0.9, StepFunction::constant(1.0), two);
  CHECK(std::fabs(wide.lhs - 0.8) <= 1e-12);
  CHECK(std::fabs(wide.bound - std::sqrt(0.8)) <= 1e-12);

  const auto half = weak_modulus_check(0.25, 0.75,
                                       StepFunction::indicator(0.0, 0.5), two);
  CHECK(std::fabs(half.lhs - 0.25) <= 1e-12);
  CHECK(std::fabs(half.bound - 0.5) <= 1e-12);
}

TEST_CASE("weak modulus bound holds on a grid") {
  SequenceRng rng(66);
  std::vector<StepFunction> ys;
  for (int i = 0; i < 10; ++i) ys.push_back(lpvar_test::random_step(rng, 12, 5.0));

  const Exponent two = conjugate(2.0);
  for (int i = 1; i <= 50; ++i) {
    for (int j = 1; j <= 50; ++j) {
      const double a = i / 51.0;
      const double b = j / 51.0;
      for (const auto& y : ys) {
        const auto check = weak_modulus_check(a, b, y, two);
        CHECK(check.lhs <= check.bound + 1e-12);
      }
    }
  }

  // sparser sweep over the other exponents
  for (double p : {1.5, 3.0}) {
    const Exponent e = conjugate(p);
    for (int i = 1; i <= 50; ++i) {
      for (int j = 1; j <= 50; j += 5) {
        const auto check = weak_modulus_check(i / 51.0, j / 51.0, ys[j % 10], e);
        CHECK(check.lhs <= check.bound + 1e-12);
      }
    }
  }
}

TEST_SUITE_END();
