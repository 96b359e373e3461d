#include "lpvar/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include <json.hpp>

#include "lpvar/bochner.hpp"
#include "lpvar/distribution.hpp"
#include "lpvar/duality.hpp"
#include "lpvar/format.hpp"
#include "lpvar/lpspace.hpp"
#include "lpvar/rng.hpp"
#include "lpvar/rv.hpp"
#include "lpvar/serialization.hpp"

namespace lpvar {

namespace {

const double kExponents[] = {1.5, 2.0, 3.0};
const double kRadii[] = {0.1, 0.3, 0.5, 0.9};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

StepFunction random_step(SequenceRng& rng, int max_cells, double bound) {
  const int cells = 1 + rng.next_index(max_cells);
  std::vector<double> bp;
  bp.reserve(static_cast<std::size_t>(cells) + 1);
  bp.push_back(0.0);
  for (int i = 0; i < cells - 1; ++i) bp.push_back(rng.next_uniform());
  bp.push_back(1.0);
  std::sort(bp.begin(), bp.end());
  std::vector<double> vals(static_cast<std::size_t>(cells));
  for (auto& v : vals) v = rng.next_in(-bound, bound);
  return StepFunction(std::move(bp), std::move(vals));
}

StepFunction random_nonzero_step(SequenceRng& rng, int max_cells,
                                 double bound, double p) {
  for (;;) {
    StepFunction f = random_step(rng, max_cells, bound);
    if (lp_norm(f, p) > 1e-6) return f;
  }
}

CriterionResult ball_probability_closed_form() {
  const auto start = std::chrono::steady_clock::now();
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  double max_err = 0.0;
  for (double p : kExponents) {
    const Exponent e = conjugate(p);
    for (double eps : kRadii) {
      const double exact = pushforward_exact(
          chi, Event::ball(StepFunction::constant(0.0), eps, e));
      max_err = std::max(max_err, std::fabs(exact - std::pow(eps, p)));
    }
  }
  const bool in_time = seconds_since(start) < 1.0;
  return {1,
          "ball_probability_closed_form",
          max_err <= 1e-12 && in_time,
          max_err,
          1e-12,
          "max |probability - eps^p| over 12 (p;eps) cases; runtime limit 1s"};
}

CriterionResult ball_probability_monte_carlo(std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  int agreeing = 0;
  for (double p : kExponents) {
    const Exponent e = conjugate(p);
    for (double eps : kRadii) {
      const MCEstimate mc = pushforward_mc(
          chi, Event::ball(StepFunction::constant(0.0), eps, e), 100000, seed);
      if (std::fabs(mc.estimate - std::pow(eps, p)) <= 4.0 * mc.std_error) {
        ++agreeing;
      }
    }
  }
  const bool in_time = seconds_since(start) < 5.0;
  return {2,
          "ball_probability_monte_carlo",
          agreeing >= 11 && in_time,
          static_cast<double>(agreeing),
          11.0,
          "cases with |estimate - eps^p| <= 4 std_error out of 12; n=100000; "
          "runtime limit 5s"};
}

CriterionResult expectation_closed_form() {
  const auto start = std::chrono::steady_clock::now();
  // The averaged value does not involve the exponent, so one computation
  // covers every p.
  const double worst = expectation_sup_error(4096);
  const bool in_time = seconds_since(start) < 5.0;
  return {3,
          "expectation_closed_form",
          worst <= 1e-3 && in_time,
          worst,
          1e-3,
          "sup |E(t) - (1-t)| at cell midpoints; 4096 nodes; exponent-free "
          "computation covers p in {1.5;2;3}; runtime limit 5s"};
}

CriterionResult expectation_dual_residual() {
  const LpRandomVariable chi = LpRandomVariable::indicator_process();

  std::vector<double> bp(257);
  std::vector<double> vals(256);
  for (int i = 0; i <= 256; ++i) bp[i] = std::ldexp(double(i), -8);
  for (int i = 1; i <= 256; ++i) vals[i - 1] = 1.0 - (i - 0.5) / 256.0;
  const StepFunction candidate(std::move(bp), std::move(vals));

  std::vector<StepFunction> tests;
  tests.reserve(16);
  for (int i = 1; i <= 16; ++i) {
    tests.push_back(StepFunction::prefix_indicator(i / 16.0));
  }

  const double residual = dual_residual(chi, candidate, tests, 4096);

  // Independent check of the integrated pairings: for the prefix indicator
  // of length c the exact iterated integral is c - c^2/2.
  double oracle_gap = 0.0;
  for (int i = 1; i <= 16; ++i) {
    const double c = i / 16.0;
    const FubiniComparison fc = fubini_check(tests[i - 1], 4096);
    oracle_gap = std::max(oracle_gap,
                          std::fabs(fc.quadrature - (c - c * c / 2.0)));
  }

  return {4,
          "expectation_dual_residual",
          residual <= 2e-3 && oracle_gap <= 2e-3,
          residual,
          2e-3,
          "dual residual of the 256-cell candidate against 16 prefix tests; "
          "iterated-integral oracle gap " +
              format_double(oracle_gap)};
}

CriterionResult dyadic_approximation_rate() {
  double worst_excess = -1.0;
  for (int k = 1; k <= 10; ++k) {
    for (double p : kExponents) {
      const Exponent e = conjugate(p);
      const double sup = dyadic_sup_error(k, e, 10000);
      const double bound = std::pow(2.0, -double(k) / p);
      worst_excess = std::max(worst_excess, sup - bound);
    }
  }
  return {5,
          "dyadic_approximation_rate",
          worst_excess <= 1e-12,
          worst_excess,
          1e-12,
          "max over k=1..10 and p of sup error minus 2^(-k/p); grid 10^4 "
          "points plus dyadic breakpoints"};
}

CriterionResult indicator_distance_identity(std::uint64_t seed) {
  SequenceRng rng(seed ^ 0x6001u);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.next_uniform();
    const double b = rng.next_uniform();
    for (double p : kExponents) {
      const double d = distance_identity_check(a, b, conjugate(p));
      worst = std::max(worst, std::fabs(d - std::fabs(a - b)));
    }
  }
  return {6,
          "indicator_distance_identity",
          worst <= 1e-12,
          worst,
          1e-12,
          "max |dist^p - |a-b|| over 1000 seeded pairs and 3 exponents"};
}

CriterionResult holder_inequality(std::uint64_t seed) {
  SequenceRng rng(seed ^ 0x7002u);
  double worst_excess = -1.0;
  for (int i = 0; i < 1000; ++i) {
    const StepFunction x = random_step(rng, 32, 10.0);
    const StepFunction y = random_step(rng, 32, 10.0);
    const double pair = std::fabs(pairing(x, y));
    for (double p : kExponents) {
      const Exponent e = conjugate(p);
      worst_excess = std::max(
          worst_excess, pair - lp_norm(x, e.p()) * lp_norm(y, e.q()));
    }
  }
  return {7,
          "holder_inequality",
          worst_excess <= 1e-12,
          worst_excess,
          1e-12,
          "max |pairing| minus norm product over 1000 seeded pairs and 3 "
          "exponents"};
}

CriterionResult norming_functionals(std::uint64_t seed) {
  SequenceRng rng(seed ^ 0x8003u);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    for (double p : kExponents) {
      const Exponent e = conjugate(p);
      const StepFunction x = random_nonzero_step(rng, 32, 10.0, p);
      const NormingFunctional functional(x, e);
      worst = std::max(
          worst, std::fabs(functional.apply(x) - lp_norm(x, e.p())));
      worst = std::max(
          worst, std::fabs(lp_norm(functional.representer(), e.q()) - 1.0));
    }
  }
  return {8,
          "norming_functionals",
          worst <= 1e-10,
          worst,
          1e-10,
          "max deviation of attained norm and representer q-norm over 500 "
          "seeded references and 3 exponents"};
}

CriterionResult norm_as_sup_bounds(std::uint64_t seed) {
  SequenceRng rng(seed ^ 0x9004u);
  double worst_violation = -1.0;
  for (double p : kExponents) {
    const Exponent e = conjugate(p);
    const DenseFamily fam = DenseFamily::prefix_indicators(8, e);
    const double delta = fam.density_radius();
    for (int i = 0; i < 200; ++i) {
      const StepFunction x = StepFunction::prefix_indicator(rng.next_uniform());
      const double norm = lp_norm(x, e.p());
      const double sup = norm_via_sup(x, fam, e);
      worst_violation = std::max(worst_violation, (norm - 2.0 * delta) - sup);
      worst_violation = std::max(worst_violation, sup - (norm + 1e-10));
    }
  }
  return {9,
          "norm_as_sup_bounds",
          worst_violation <= 0.0,
          worst_violation,
          0.0,
          "max violation of norm-2delta <= sup <= norm+1e-10 for 200 "
          "in-coverage targets per exponent; level-8 prefix family"};
}

CriterionResult norm_integrability() {
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  double worst = 0.0;
  std::string detail = "|integral - p/(p+1)| per exponent at 1e5 nodes:";
  for (double p : kExponents) {
    const Exponent e = conjugate(p);
    const double value = norm_integral(chi, 100000, e);
    const double oracle = p / (p + 1.0);
    const double flagged = 1.0 / (p + 1.0);
    worst = std::max(worst, std::fabs(value - oracle));
    detail += " p=" + format_double(p) + " gap=" +
              format_double(std::fabs(value - oracle)) +
              " (flagged alternative 1/(p+1)=" + format_double(flagged) +
              " off by " + format_double(std::fabs(value - flagged)) + ");";
  }
  return {10, "norm_integrability", worst <= 1e-5, worst, 1e-5, detail};
}

CriterionResult disjointification_contract() {
  const Exponent e = conjugate(2.0);
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  double worst_ratio = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const double eps = std::ldexp(1.0, -k);
    const int level = static_cast<int>(std::floor(k * e.p())) + 1;
    const DenseFamily fam = DenseFamily::prefix_indicators(level, e);
    const SimpleLpRV truncated = pettis_disjointify(chi, fam, k, e);
    long double bad = 0.0L;
    for (const auto& cell : truncated.cells()) {
      const IntervalUnion close = ball_preimage(chi, cell.value, eps, e);
      bad += set_difference(cell.set, close).measure();
    }
    worst_ratio = std::max(worst_ratio, static_cast<double>(bad) / eps);
  }
  return {11,
          "disjointification_contract",
          worst_ratio < 1.0,
          worst_ratio,
          1.0,
          "max over k=1..6 (p=2) of measure{error >= 2^-k} / 2^-k; matched "
          "prefix family"};
}

std::vector<CriterionResult> run_core(std::uint64_t seed) {
  std::vector<CriterionResult> results;
  results.push_back(ball_probability_closed_form());
  results.push_back(ball_probability_monte_carlo(seed));
  results.push_back(expectation_closed_form());
  results.push_back(expectation_dual_residual());
  results.push_back(dyadic_approximation_rate());
  results.push_back(indicator_distance_identity(seed));
  results.push_back(holder_inequality(seed));
  results.push_back(norming_functionals(seed));
  results.push_back(norm_as_sup_bounds(seed));
  results.push_back(norm_integrability());
  results.push_back(disjointification_contract());
  return results;
}

}  // namespace

double dyadic_sup_error(int level, const Exponent& e, int grid_points) {
  const LpRandomVariable chi = LpRandomVariable::indicator_process();
  const LpRandomVariable approx =
      LpRandomVariable::simple(dyadic_approximation(level));
  std::vector<double> omegas;
  omegas.reserve(static_cast<std::size_t>(grid_points) + (1u << level));
  for (int i = 1; i <= grid_points; ++i) {
    omegas.push_back(static_cast<double>(i) / (grid_points + 1));
  }
  for (int j = 1; j < (1 << level); ++j) {
    omegas.push_back(std::ldexp(double(j), -level));
  }
  double worst = 0.0;
  for (double w : omegas) {
    worst = std::max(
        worst, lp_norm(approx.evaluate(w) - chi.evaluate(w), e.p()));
  }
  return worst;
}

double expectation_sup_error(int nodes) {
  const ExpectationResult res =
      expectation(LpRandomVariable::indicator_process(), nodes);
  const auto& bp = res.expectation.breakpoints();
  double worst = 0.0;
  for (std::size_t i = 0; i < res.expectation.cell_count(); ++i) {
    const double mid = bp[i] + (bp[i + 1] - bp[i]) / 2.0;
    worst = std::max(
        worst, std::fabs(res.expectation.values()[i] - (1.0 - mid)));
  }
  return worst;
}

bool VerificationReport::all_passed() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.passed; });
}

VerificationReport run_verification(std::uint64_t seed) {
  VerificationReport first{seed, run_core(seed)};
  const std::string text_a = report_to_json_text(first);
  const VerificationReport second{seed, run_core(seed)};
  const std::string text_b = report_to_json_text(second);

  first.criteria.push_back(
      {12,
       "report_reproducibility",
       text_a == text_b,
       text_a == text_b ? 1.0 : 0.0,
       1.0,
       "two full runs with the same seed serialized byte-identically"});
  return first;
}

std::string report_to_json_text(const VerificationReport& report) {
  Json criteria = Json::array();
  for (const auto& c : report.criteria) {
    criteria.push_back(Json{{"id", c.id},
                            {"name", c.name},
                            {"passed", c.passed},
                            {"observed", c.observed},
                            {"threshold", c.threshold},
                            {"detail", c.detail}});
  }
  const Json j{{"seed", report.seed},
               {"all_passed", report.all_passed()},
               {"criteria", criteria}};
  return j.dump(2) + "\n";
}

std::string report_to_csv_text(const VerificationReport& report) {
  std::string out = "id,name,passed,observed,threshold,detail\n";
  for (const auto& c : report.criteria) {
    out += std::to_string(c.id) + "," + c.name + "," +
           (c.passed ? "true" : "false") + "," + format_double(c.observed) +
           "," + format_double(c.threshold) + "," + c.detail + "\n";
  }
  return out;
}

}  // namespace lpvar
