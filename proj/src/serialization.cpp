#include "lpvar/serialization.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "lpvar/format.hpp"

namespace lpvar {

namespace {

std::vector<double> number_array(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw std::invalid_argument(std::string("missing or non-array field \"") +
                                field + "\"");
  }
  std::vector<double> out;
  out.reserve(j[field].size());
  for (const auto& entry : j[field]) {
    if (!entry.is_number()) {
      throw std::invalid_argument(std::string("non-numeric entry in \"") +
                                  field + "\"");
    }
    out.push_back(entry.get<double>());
  }
  return out;
}

}  // namespace

Json to_json(const StepFunction& f) {
  return Json{{"breakpoints", f.breakpoints()}, {"values", f.values()}};
}

StepFunction step_function_from_json(const nlohmann::json& j) {
  return StepFunction(number_array(j, "breakpoints"), number_array(j, "values"));
}

Json to_json(const Exponent& e) { return Json{{"p", e.p()}}; }

Exponent exponent_from_json(const nlohmann::json& j) {
  if (!j.contains("p") || !j["p"].is_number()) {
    throw std::invalid_argument("missing or non-numeric field \"p\"");
  }
  return conjugate(j["p"].get<double>());
}

Json to_json(const SimpleLpRV& rv) {
  Json cells = Json::array();
  for (const auto& cell : rv.cells()) {
    Json set = Json::array();
    for (const auto& iv : cell.set.intervals()) {
      set.push_back(Json::array({iv.lo, iv.hi}));
    }
    cells.push_back(Json{{"set", set}, {"value", to_json(cell.value)}});
  }
  return Json{{"cells", cells}};
}

SimpleLpRV simple_rv_from_json(const nlohmann::json& j) {
  if (!j.contains("cells") || !j["cells"].is_array()) {
    throw std::invalid_argument("missing or non-array field \"cells\"");
  }
  std::vector<SimpleLpRV::Cell> cells;
  for (const auto& cj : j["cells"]) {
    if (!cj.contains("set") || !cj["set"].is_array()) {
      throw std::invalid_argument("cell missing array field \"set\"");
    }
    std::vector<IntervalUnion::Interval> intervals;
    for (const auto& ij : cj["set"]) {
      if (!ij.is_array() || ij.size() != 2 || !ij[0].is_number() ||
          !ij[1].is_number()) {
        throw std::invalid_argument("interval must be a [lo, hi] number pair");
      }
      intervals.push_back({ij[0].get<double>(), ij[1].get<double>()});
    }
    if (!cj.contains("value")) {
      throw std::invalid_argument("cell missing field \"value\"");
    }
    cells.push_back({IntervalUnion(std::move(intervals)),
                     step_function_from_json(cj["value"])});
  }
  return SimpleLpRV(std::move(cells));
}

Json to_json(const DenseFamily& fam) {
  if (!fam.params()) {
    throw std::invalid_argument(
        "DenseFamily: only parameterized families serialize");
  }
  const FamilyParams& p = *fam.params();
  Json j{{"kind", p.kind}, {"level", p.level}};
  if (p.kind == "dyadic") {
    j["value_levels"] = p.value_levels;
    j["bound"] = p.bound;
  }
  return j;
}

DenseFamily dense_family_from_json(const nlohmann::json& j,
                                   const Exponent& e) {
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("missing or non-string field \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "dyadic") {
    return DenseFamily::dyadic(j.at("level").get<int>(),
                               j.at("value_levels").get<int>(),
                               j.at("bound").get<double>(), e);
  }
  if (kind == "prefix_indicators") {
    return DenseFamily::prefix_indicators(j.at("level").get<int>(), e);
  }
  throw std::invalid_argument("unknown family kind \"" + kind + "\"");
}

Json to_json(const ExpectationResult& r) {
  return Json{
      {"method", r.method == ExpectationMethod::ExactSimple ? "exact_simple"
                                                            : "quadrature"},
      {"node_count", r.node_count},
      {"max_dual_residual", r.max_dual_residual},
      {"expectation", to_json(r.expectation)}};
}

std::string expectation_to_csv(const ExpectationResult& r) {
  std::string out = "t,value\n";
  const auto& bp = r.expectation.breakpoints();
  for (std::size_t i = 0; i < r.expectation.cell_count(); ++i) {
    const double mid = bp[i] + (bp[i + 1] - bp[i]) / 2.0;
    out += format_double(mid) + "," +
           format_double(r.expectation.values()[i]) + "\n";
  }
  return out;
}

Json to_json(const MCEstimate& est) {
  return Json{{"estimate", est.estimate},
              {"std_error", est.std_error},
              {"samples", est.samples},
              {"seed", est.seed}};
}

}  // namespace lpvar
