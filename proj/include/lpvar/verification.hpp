#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpvar/exponent.hpp"

namespace lpvar {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double observed = 0.0;   // key measured quantity
  double threshold = 0.0;  // limit it is compared against
  std::string detail;      // free-form, no commas
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
};

// Runs the full verification suite; deterministic given the seed.
VerificationReport run_verification(std::uint64_t seed);

std::string report_to_json_text(const VerificationReport& report);
std::string report_to_csv_text(const VerificationReport& report);

// Shared measurement helpers, also used by the CLI subcommands.

// Largest distance between the level-k dyadic approximation and the
// indicator process over a uniform omega grid plus all dyadic breakpoints.
double dyadic_sup_error(int level, const Exponent& e, int grid_points);

// Largest |expectation(t) - (1 - t)| over the cell midpoints of the
// midpoint-rule expectation of the indicator process.
double expectation_sup_error(int nodes);

}  // namespace lpvar
