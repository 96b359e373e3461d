#pragma once

#include <span>

#include "lpvar/rv.hpp"

namespace lpvar {

enum class ExpectationMethod { ExactSimple, Quadrature };

struct ExpectationResult {
  StepFunction expectation;
  ExpectationMethod method = ExpectationMethod::ExactSimple;
  int node_count = 0;               // 0 on the exact path
  double max_dual_residual = -1.0;  // -1 until a dual check fills it
};

// Integral of omega -> ||xi(omega)||_p over (0,1). Exact sum for simple
// variables, composite midpoint rule with `nodes` nodes otherwise.
double norm_integral(const LpRandomVariable& xi, int nodes, const Exponent& e);

// The averaged value of xi: the exact cell-weighted sum for simple
// variables, the midpoint-rule average (1/M) * sum xi((i-1/2)/M) otherwise.
ExpectationResult expectation(const LpRandomVariable& xi, int nodes);

// max over test functions Y of |Q(Y) - pairing(candidate, Y)|, where Q(Y)
// integrates omega -> pairing(xi(omega), Y) (exact sum for simple variables,
// midpoint rule otherwise). Vanishes iff candidate acts like the expectation
// of xi on the chosen tests.
double dual_residual(const LpRandomVariable& xi, const StepFunction& candidate,
                     std::span<const StepFunction> tests, int nodes);

struct FubiniComparison {
  double quadrature;   // midpoint rule for the iterated integral
  double closed_form;  // exact integral of (1-t) * y(t)
};

// Compares the two orders of integration of the kernel 1_(0,omega](t) * y(t):
// quadrature of omega -> pairing of the indicator process with y, against the
// exact integral of (1-t) y(t) dt.
FubiniComparison fubini_check(const StepFunction& y, int nodes);

}  // namespace lpvar
