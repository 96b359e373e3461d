#pragma once

#include <string>

#include <json.hpp>

#include "lpvar/bochner.hpp"
#include "lpvar/distribution.hpp"
#include "lpvar/duality.hpp"
#include "lpvar/rv.hpp"

namespace lpvar {

using Json = nlohmann::ordered_json;

// {"breakpoints":[0,...,1],"values":[...]}. Loads reject invalid input with
// a message naming the first violated invariant.
Json to_json(const StepFunction& f);
StepFunction step_function_from_json(const nlohmann::json& j);

// {"p": value}; q is derived on load, never stored.
Json to_json(const Exponent& e);
Exponent exponent_from_json(const nlohmann::json& j);

// {"cells":[{"set":[[lo,hi],...],"value":{...}},...]}. Round-trips are
// bit-stable after canonicalization.
Json to_json(const SimpleLpRV& rv);
SimpleLpRV simple_rv_from_json(const nlohmann::json& j);

// Parameter tuple only; families built from raw member lists do not
// serialize.
Json to_json(const DenseFamily& fam);
DenseFamily dense_family_from_json(const nlohmann::json& j, const Exponent& e);

Json to_json(const ExpectationResult& r);

// (t, value) rows sampled at cell midpoints.
std::string expectation_to_csv(const ExpectationResult& r);

Json to_json(const MCEstimate& est);

}  // namespace lpvar
