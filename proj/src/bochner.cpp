#include "lpvar/bochner.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lpvar {

namespace {

double midpoint_node(int i, int nodes) {
  return (static_cast<double>(i) - 0.5) / nodes;
}

void require_nodes(int nodes, const char* op) {
  if (nodes < 2) {
    throw std::domain_error(std::string(op) +
                            ": at least 2 quadrature nodes required");
  }
}

// A variable without a prefix-indicator component equals its simple part
// almost everywhere, so the exact cell-sum path applies. This keeps the
// expectation exactly linear over combinations of simple variables.
bool exact_path(const LpRandomVariable& xi) {
  return xi.prefix_coefficient() == 0.0;
}

}  // namespace

double norm_integral(const LpRandomVariable& xi, int nodes,
                     const Exponent& e) {
  if (exact_path(xi)) {
    long double acc = 0.0L;
    for (const auto& cell : xi.step_part().cells()) {
      acc += static_cast<long double>(cell.set.measure()) *
             lp_norm(cell.value, e.p());
    }
    return static_cast<double>(acc);
  }
  require_nodes(nodes, "norm_integral");
  long double acc = 0.0L;
  for (int i = 1; i <= nodes; ++i) {
    acc += lp_norm(xi.evaluate(midpoint_node(i, nodes)), e.p());
  }
  return static_cast<double>(acc / nodes);
}

ExpectationResult expectation(const LpRandomVariable& xi, int nodes) {
  if (exact_path(xi)) {
    const auto& cells = xi.step_part().cells();
    std::vector<double> weights;
    std::vector<StepFunction> values;
    weights.reserve(cells.size());
    values.reserve(cells.size());
    for (const auto& cell : cells) {
      weights.push_back(cell.set.measure());
      values.push_back(cell.value);
    }
    return {linear_combine(weights, values), ExpectationMethod::ExactSimple, 0,
            -1.0};
  }
  require_nodes(nodes, "expectation");
  std::vector<double> weights(static_cast<std::size_t>(nodes), 1.0 / nodes);
  std::vector<StepFunction> samples;
  samples.reserve(static_cast<std::size_t>(nodes));
  for (int i = 1; i <= nodes; ++i) {
    samples.push_back(xi.evaluate(midpoint_node(i, nodes)));
  }
  return {linear_combine(weights, samples), ExpectationMethod::Quadrature,
          nodes, -1.0};
}

double dual_residual(const LpRandomVariable& xi, const StepFunction& candidate,
                     std::span<const StepFunction> tests, int nodes) {
  if (tests.empty()) {
    throw std::domain_error("dual_residual: at least one test function required");
  }
  require_nodes(nodes, "dual_residual");

  std::vector<long double> integrated(tests.size(), 0.0L);
  if (exact_path(xi)) {
    for (const auto& cell : xi.step_part().cells()) {
      const long double weight = cell.set.measure();
      for (std::size_t t = 0; t < tests.size(); ++t) {
        integrated[t] += weight * pairing(cell.value, tests[t]);
      }
    }
  } else {
    for (int i = 1; i <= nodes; ++i) {
      const StepFunction sample = xi.evaluate(midpoint_node(i, nodes));
      for (std::size_t t = 0; t < tests.size(); ++t) {
        integrated[t] += pairing(sample, tests[t]);
      }
    }
    for (auto& q : integrated) q /= nodes;
  }

  double worst = 0.0;
  for (std::size_t t = 0; t < tests.size(); ++t) {
    worst = std::max(worst,
                     std::fabs(static_cast<double>(integrated[t]) -
                               pairing(candidate, tests[t])));
  }
  return worst;
}

FubiniComparison fubini_check(const StepFunction& y, int nodes) {
  require_nodes(nodes, "fubini_check");
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  long double acc = 0.0L;
  for (int i = 1; i <= nodes; ++i) {
    acc += pairing(chi.evaluate(midpoint_node(i, nodes)), y);
  }
  const double quadrature = static_cast<double>(acc / nodes);

  long double exact = 0.0L;
  const auto& bp = y.breakpoints();
  for (std::size_t i = 0; i < y.cell_count(); ++i) {
    // integral of (1-t) over (bp[i], bp[i+1]]
    const double width = bp[i + 1] - bp[i];
    exact += static_cast<long double>(y.values()[i]) * width *
             (1.0 - (bp[i] + bp[i + 1]) / 2.0);
  }
  return {quadrature, static_cast<double>(exact)};
}

}  // namespace lpvar
