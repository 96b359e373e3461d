#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpvar/bochner.hpp"
#include "lpvar/distribution.hpp"
#include "lpvar/duality.hpp"
#include "lpvar/format.hpp"
#include "lpvar/lpspace.hpp"
#include "lpvar/rng.hpp"
#include "lpvar/rv.hpp"
#include "lpvar/serialization.hpp"
#include "lpvar/verification.hpp"

namespace {

using lpvar::format_double;
using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  double p = 2.0;
  double epsilon = 0.5;
  int k = 10;
  int nodes = 4096;
  std::int64_t samples = 100000;
  std::uint64_t seed = 42;
  std::string output_path;
  std::string format = "csv";
};

std::string config_echo(const RunConfig& cfg,
                        const std::vector<std::string>& keys) {
  std::string line = "command=" + cfg.command;
  for (const auto& key : keys) {
    if (key == "p") line += " p=" + format_double(cfg.p);
    if (key == "epsilon") line += " epsilon=" + format_double(cfg.epsilon);
    if (key == "k") line += " k=" + std::to_string(cfg.k);
    if (key == "nodes") line += " nodes=" + std::to_string(cfg.nodes);
    if (key == "samples") line += " samples=" + std::to_string(cfg.samples);
    if (key == "seed") line += " seed=" + std::to_string(cfg.seed);
  }
  line += " format=" + cfg.format;
  return line;
}

Json config_json(const RunConfig& cfg, const std::vector<std::string>& keys) {
  Json j;
  j["command"] = cfg.command;
  for (const auto& key : keys) {
    if (key == "p") j["p"] = cfg.p;
    if (key == "epsilon") j["epsilon"] = cfg.epsilon;
    if (key == "k") j["k"] = cfg.k;
    if (key == "nodes") j["nodes"] = cfg.nodes;
    if (key == "samples") j["samples"] = cfg.samples;
    if (key == "seed") j["seed"] = cfg.seed;
  }
  j["format"] = cfg.format;
  return j;
}

// Writes the report to the configured path, or does nothing when the path is
// empty (the stdout summary already carries the result).
int emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) return 0;
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "lpvar: cannot open output path '%s'\n",
                 cfg.output_path.c_str());
    return 2;
  }
  out << text;
  if (!out) {
    std::fprintf(stderr, "lpvar: failed writing '%s'\n",
                 cfg.output_path.c_str());
    return 2;
  }
  return 0;
}

int run_problem2(const RunConfig& cfg) {
  const lpvar::Exponent e = lpvar::conjugate(cfg.p);
  const lpvar::LpRandomVariable chi =
      lpvar::LpRandomVariable::indicator_process();
  const lpvar::Event event =
      lpvar::Event::ball(lpvar::StepFunction::constant(0.0), cfg.epsilon, e);

  const double exact = lpvar::small_ball_probability(cfg.epsilon, e);
  const lpvar::MCEstimate mc =
      lpvar::pushforward_mc(chi, event, cfg.samples, cfg.seed);

  std::printf("exact %s\n", format_double(exact).c_str());
  std::printf("mc_estimate %s\n", format_double(mc.estimate).c_str());
  std::printf("mc_std_error %s\n", format_double(mc.std_error).c_str());

  const std::vector<std::string> keys{"p", "epsilon", "samples", "seed"};
  std::string text;
  if (cfg.format == "csv") {
    text = "# " + config_echo(cfg, keys) + "\n";
    text += "event,exact,estimate,std_error,samples,seed\n";
    text += event.describe() + "," + format_double(exact) + "," +
            format_double(mc.estimate) + "," + format_double(mc.std_error) +
            "," + std::to_string(mc.samples) + "," + std::to_string(mc.seed) +
            "\n";
  } else {
    Json j;
    j["config"] = config_json(cfg, keys);
    j["event"] = event.describe();
    j["exact"] = exact;
    j["mc"] = lpvar::to_json(mc);
    text = j.dump(2) + "\n";
  }
  return emit(cfg, text);
}

int run_expectation(const RunConfig& cfg) {
  const lpvar::ExpectationResult res = lpvar::expectation(
      lpvar::LpRandomVariable::indicator_process(), cfg.nodes);

  const auto& bp = res.expectation.breakpoints();
  double max_err = 0.0;
  std::string rows = "t,expectation,reference,abs_err\n";
  Json jrows = Json::array();
  for (std::size_t i = 0; i < res.expectation.cell_count(); ++i) {
    const double mid = bp[i] + (bp[i + 1] - bp[i]) / 2.0;
    const double value = res.expectation.values()[i];
    const double reference = 1.0 - mid;
    const double err = std::fabs(value - reference);
    max_err = std::max(max_err, err);
    if (cfg.format == "csv") {
      rows += format_double(mid) + "," + format_double(value) + "," +
              format_double(reference) + "," + format_double(err) + "\n";
    } else {
      jrows.push_back(Json{{"t", mid},
                           {"expectation", value},
                           {"reference", reference},
                           {"abs_err", err}});
    }
  }
  std::printf("max_abs_err %s over %zu cells\n",
              format_double(max_err).c_str(), res.expectation.cell_count());

  const std::vector<std::string> keys{"p", "nodes"};
  std::string text;
  if (cfg.format == "csv") {
    text = "# " + config_echo(cfg, keys) + "\n" + rows;
  } else {
    Json j;
    j["config"] = config_json(cfg, keys);
    j["max_abs_err"] = max_err;
    j["rows"] = jrows;
    text = j.dump(2) + "\n";
  }
  return emit(cfg, text);
}

int run_approx(const RunConfig& cfg) {
  const lpvar::Exponent e = lpvar::conjugate(cfg.p);
  std::string rows = "k,sup_error,bound,within\n";
  Json jrows = Json::array();
  bool all_within = true;
  for (int level = 1; level <= cfg.k; ++level) {
    const double sup = lpvar::dyadic_sup_error(level, e, 10000);
    const double bound = std::pow(2.0, -double(level) / cfg.p);
    const bool within = sup <= bound + 1e-12;
    all_within = all_within && within;
    std::printf("k=%d sup_error=%s bound=%s\n", level,
                format_double(sup).c_str(), format_double(bound).c_str());
    if (cfg.format == "csv") {
      rows += std::to_string(level) + "," + format_double(sup) + "," +
              format_double(bound) + "," + (within ? "true" : "false") + "\n";
    } else {
      jrows.push_back(Json{{"k", level},
                           {"sup_error", sup},
                           {"bound", bound},
                           {"within", within}});
    }
  }

  const std::vector<std::string> keys{"p", "k"};
  std::string text;
  if (cfg.format == "csv") {
    text = "# " + config_echo(cfg, keys) + "\n" + rows;
  } else {
    Json j;
    j["config"] = config_json(cfg, keys);
    j["rows"] = jrows;
    text = j.dump(2) + "\n";
  }
  const int code = emit(cfg, text);
  return code != 0 ? code : (all_within ? 0 : 1);
}

int run_duality(const RunConfig& cfg) {
  const lpvar::Exponent e = lpvar::conjugate(cfg.p);
  const lpvar::DenseFamily fam = lpvar::DenseFamily::prefix_indicators(8, e);
  const double delta = fam.density_radius();
  lpvar::SequenceRng rng(cfg.seed ^ 0xD0A1u);

  std::string rows = "check,index,a,b,observed,limit_low,limit_high,within\n";
  Json jrows = Json::array();
  bool all_within = true;

  for (int i = 0; i < 20; ++i) {
    const double a = rng.next_uniform();
    const lpvar::StepFunction x = lpvar::StepFunction::prefix_indicator(a);
    const double norm = lpvar::lp_norm(x, e.p());
    const double sup = lpvar::norm_via_sup(x, fam, e);
    const double low = norm - 2.0 * delta;
    const double high = norm + 1e-10;
    const bool within = sup >= low && sup <= high;
    all_within = all_within && within;
    if (cfg.format == "csv") {
      rows += "norm_sup," + std::to_string(i) + "," + format_double(a) + ",," +
              format_double(sup) + "," + format_double(low) + "," +
              format_double(high) + "," + (within ? "true" : "false") + "\n";
    } else {
      jrows.push_back(Json{{"check", "norm_sup"},
                           {"index", i},
                           {"a", a},
                           {"observed", sup},
                           {"limit_low", low},
                           {"limit_high", high},
                           {"within", within}});
    }
  }

  const lpvar::StepFunction weights[] = {
      lpvar::StepFunction::constant(1.0),
      lpvar::StepFunction::prefix_indicator(0.25),
      lpvar::StepFunction::prefix_indicator(0.5),
      lpvar::StepFunction::prefix_indicator(0.75)};
  for (int i = 0; i < 20; ++i) {
    const double a = rng.next_uniform();
    const double b = rng.next_uniform();
    const auto check = lpvar::weak_modulus_check(a, b, weights[i % 4], e);
    const double high = check.bound + 1e-12;
    const bool within = check.lhs <= high;
    all_within = all_within && within;
    if (cfg.format == "csv") {
      rows += "modulus," + std::to_string(i) + "," + format_double(a) + "," +
              format_double(b) + "," + format_double(check.lhs) + ",0," +
              format_double(high) + "," + (within ? "true" : "false") + "\n";
    } else {
      jrows.push_back(Json{{"check", "modulus"},
                           {"index", i},
                           {"a", a},
                           {"b", b},
                           {"observed", check.lhs},
                           {"limit_low", 0.0},
                           {"limit_high", high},
                           {"within", within}});
    }
  }

  std::printf("norm_sup and modulus checks %s\n",
              all_within ? "all within bounds" : "OUT OF BOUNDS");

  const std::vector<std::string> keys{"p", "seed"};
  std::string text;
  if (cfg.format == "csv") {
    text = "# " + config_echo(cfg, keys) + "\n" + rows;
  } else {
    Json j;
    j["config"] = config_json(cfg, keys);
    j["rows"] = jrows;
    text = j.dump(2) + "\n";
  }
  const int code = emit(cfg, text);
  return code != 0 ? code : (all_within ? 0 : 1);
}

int run_verify(const RunConfig& cfg) {
  const lpvar::VerificationReport report = lpvar::run_verification(cfg.seed);
  for (const auto& c : report.criteria) {
    std::printf("[%s] %02d %s observed=%s threshold=%s\n",
                c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                format_double(c.observed).c_str(),
                format_double(c.threshold).c_str());
  }

  std::string text;
  if (cfg.format == "csv") {
    text = "# " + config_echo(cfg, {"seed"}) + "\n" +
           lpvar::report_to_csv_text(report);
  } else {
    text = lpvar::report_to_json_text(report);
  }
  const int code = emit(cfg, text);
  return code != 0 ? code : (report.all_passed() ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{
      "lpvar: exact step-function calculus, duality, and random variables "
      "taking values in Lp(0,1)"};
  app.require_subcommand(1);

  const auto add_common = [&cfg](CLI::App* cmd) {
    cmd->add_option("--out", cfg.output_path,
                    "write the report to this path (stdout summary only when "
                    "omitted)");
    cmd->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };
  const auto add_seed = [&cfg](CLI::App* cmd) {
    cmd->add_option("--seed", cfg.seed,
                    "random seed (env fallback LPVAR_SEED; the flag wins)")
        ->envname("LPVAR_SEED")
        ->capture_default_str();
  };

  CLI::App* problem2 = app.add_subcommand(
      "problem2",
      "probability that the indicator process lands in the centered ball of "
      "radius epsilon: exact value and Monte Carlo estimate");
  problem2->add_option("--p", cfg.p, "exponent p in (1, inf)")
      ->capture_default_str();
  problem2->add_option("--epsilon", cfg.epsilon, "ball radius in (0,1)")
      ->capture_default_str();
  problem2
      ->add_option("--samples", cfg.samples, "Monte Carlo samples (>= 100)")
      ->capture_default_str();
  add_seed(problem2);
  add_common(problem2);

  CLI::App* expectation = app.add_subcommand(
      "expectation",
      "midpoint-rule expectation of the indicator process against 1-t");
  expectation->add_option("--p", cfg.p, "exponent p in (1, inf)")
      ->capture_default_str();
  expectation->add_option("--nodes", cfg.nodes, "quadrature nodes (>= 2)")
      ->capture_default_str();
  add_common(expectation);

  CLI::App* approx = app.add_subcommand(
      "approx", "dyadic approximation sup errors against the 2^(-k/p) rate");
  approx->add_option("--p", cfg.p, "exponent p in (1, inf)")
      ->capture_default_str();
  approx->add_option("--k", cfg.k, "largest dyadic level (1..30)")
      ->capture_default_str();
  add_common(approx);

  CLI::App* duality = app.add_subcommand(
      "duality", "norm-as-sup bounds and weak modulus checks");
  duality->add_option("--p", cfg.p, "exponent p in (1, inf)")
      ->capture_default_str();
  add_seed(duality);
  add_common(duality);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full verification suite; nonzero exit on failure");
  add_seed(verify);
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (problem2->parsed()) {
      cfg.command = "problem2";
      return run_problem2(cfg);
    }
    if (expectation->parsed()) {
      cfg.command = "expectation";
      return run_expectation(cfg);
    }
    if (approx->parsed()) {
      cfg.command = "approx";
      return run_approx(cfg);
    }
    if (duality->parsed()) {
      cfg.command = "duality";
      return run_duality(cfg);
    }
    cfg.command = "verify";
    return run_verify(cfg);
  } catch (const std::exception& err) {
    std::fprintf(stderr, "lpvar: %s\n", err.what());
    return 1;
  }
}
