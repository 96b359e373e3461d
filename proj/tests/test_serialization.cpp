#include <algorithm>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "lpvar/serialization.hpp"
#include "test_support.hpp"

using namespace lpvar;

TEST_SUITE_BEGIN("serialization");

TEST_CASE("step function round trips are bit-stable") {
  SequenceRng rng(201);
  for (int i = 0; i < 100; ++i) {
    const StepFunction f = lpvar_test::random_step(rng, 24, 10.0);
    const std::string text = to_json(f).dump();
    const StepFunction back =
        step_function_from_json(nlohmann::json::parse(text));
    CHECK(back == f);
  }
}

TEST_CASE("step function loads report the first violated invariant") {
  CHECK_THROWS_WITH_AS(
      step_function_from_json(nlohmann::json::parse(R"({"values":[1]})")),
      "missing or non-array field \"breakpoints\"", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      step_function_from_json(
          nlohmann::json::parse(R"({"breakpoints":[0,1],"values":[]})")),
      "StepFunction: need m+1 breakpoints for m >= 1 values",
      std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      step_function_from_json(
          nlohmann::json::parse(R"({"breakpoints":[0.5,1],"values":[2]})")),
      "StepFunction: first breakpoint must be 0", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      step_function_from_json(nlohmann::json::parse(
          R"({"breakpoints":[0,0.8,0.2,1],"values":[1,2,3]})")),
      "StepFunction: breakpoints not increasing at index 2",
      std::invalid_argument);
  CHECK_THROWS_AS(
      step_function_from_json(
          nlohmann::json::parse(R"({"breakpoints":[0,"x"],"values":[1]})")),
      std::invalid_argument);
}

TEST_CASE("exponent serializes as p only") {
  const Json j = to_json(conjugate(1.5));
  CHECK(j.size() == 1);
  CHECK(j["p"] == 1.5);
  const Exponent back = exponent_from_json(j);
  CHECK(back.p() == 1.5);
  CHECK(back.q() == 3.0);
}

TEST_CASE("simple variable round trips are bit-stable") {
  SequenceRng rng(202);
  for (int i = 0; i < 20; ++i) {
    const SimpleLpRV rv = lpvar_test::random_dyadic_simple(rng, 3, 2, 10, 800);
    const std::string text = to_json(rv).dump();
    const SimpleLpRV back = simple_rv_from_json(nlohmann::json::parse(text));
    REQUIRE(back.cells().size() == rv.cells().size());
    for (std::size_t c = 0; c < rv.cells().size(); ++c) {
      CHECK(back.cells()[c].set == rv.cells()[c].set);
      CHECK(back.cells()[c].value == rv.cells()[c].value);
    }
    CHECK(to_json(back).dump() == text);
  }
}

TEST_CASE("simple variable loads are validated") {
  CHECK_THROWS_AS(simple_rv_from_json(nlohmann::json::parse(R"({"cells":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      simple_rv_from_json(nlohmann::json::parse(
          R"({"cells":[{"set":[[0,0.5]],)"
          R"("value":{"breakpoints":[0,1],"values":[1]}}]})")),
      std::invalid_argument);
}

TEST_CASE("dense families serialize as parameter tuples") {
  const Exponent two = conjugate(2.0);
  const DenseFamily dyadic = DenseFamily::dyadic(2, 2, 1.0, two);
  const Json dj = to_json(dyadic);
  CHECK(dj["kind"] == "dyadic");
  const DenseFamily dyadic_back = dense_family_from_json(dj, two);
  CHECK(dyadic_back.members().size() == dyadic.members().size());
  CHECK(dyadic_back.density_radius() == dyadic.density_radius());

  const DenseFamily prefixes = DenseFamily::prefix_indicators(4, two);
  const DenseFamily prefixes_back =
      dense_family_from_json(to_json(prefixes), two);
  CHECK(prefixes_back.members().size() == 16);

  const DenseFamily custom({StepFunction::constant(1.0)}, 0.5, 1.0, two);
  CHECK_THROWS_AS(to_json(custom), std::invalid_argument);
}

TEST_CASE("expectation results export") {
  const ExpectationResult res = expectation(
      LpRandomVariable::simple(dyadic_approximation(2)), 2);
  const Json j = to_json(res);
  CHECK(j["method"] == "exact_simple");
  CHECK(j["node_count"] == 0);
  CHECK(j["max_dual_residual"] == -1.0);

  const std::string csv = expectation_to_csv(res);
  CHECK(csv.substr(0, 8) == "t,value\n");
  CHECK(std::count(csv.begin(), csv.end(), '\n') ==
        1 + static_cast<long>(res.expectation.cell_count()));
}

TEST_SUITE_END();
