// Copyright 2026 The hocpm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include "hocpm/presets.hpp"
#include "hocpm/random.hpp"
#include "hocpm/serialize.hpp"
#include "hocpm/suite.hpp"

using namespace hocpm;

namespace {

const SemiringDescriptor C = SemiringDescriptor::gaussian_rational();
const GroupAction Z2 = GroupAction({2}, C, {Automorphism::involution()});

std::vector<SemiringDescriptor> menu() {
  return {SemiringDescriptor::boolean(),           SemiringDescriptor::natural(),
          SemiringDescriptor::rational(),          C,
          SemiringDescriptor::split_complex_rational(), SemiringDescriptor::finite_field(2, 3),
          SemiringDescriptor::finite_field(3, 2),  SemiringDescriptor::finite_field(5, 1)};
}

// text -> json -> object -> json -> text is the identity on our own output
template <typename ToJson, typename FromJson>
void check_text_roundtrip(const json& j, ToJson to, FromJson from) {
  const std::string text = j.dump();
  CHECK(to(from(parse_json(text))).dump() == text);
}

}  // namespace

TEST_CASE("values and matrices round-trip") {
  Rng rng(7, 40);
  for (const auto& sr : menu()) {
    CHECK(semiring_from_json(semiring_to_json(sr)) == sr);
    for (int t = 0; t < 50; ++t) {
      const auto x = random_value(rng, sr);
      CHECK(value_from_json(sr, value_to_json(x)) == x);
      const Matrix m = random_matrix(rng, sr, 1 + rng.below(3), 1 + rng.below(3));
      CHECK(matrix_from_json(matrix_to_json(m)) == m);
      check_text_roundtrip(matrix_to_json(m), matrix_to_json, [](const json& j) { return matrix_from_json(j); });
    }
  }
}

TEST_CASE("untagged matrices take the fallback semiring") {
  const json j = parse_json(R"({"rows": 1, "cols": 2, "entries": ["3+4i", 2]})");
  CHECK(matrix_from_json(j, &C) == Matrix::from_strings(C, 1, 2, {"3+4i", "2"}));
  CHECK_THROWS_AS(matrix_from_json(j), ParseError);
}

TEST_CASE("actions round-trip") {
  for (const auto& [label, action] : default_action_matrix()) {
    CAPTURE(label);
    CHECK(action_from_json(action_to_json(action)) == action);
    check_text_roundtrip(action_to_json(action), action_to_json, action_from_json);
  }
}

TEST_CASE("environments round-trip") {
  const GroupAction zz = action_product(Z2, Z2);
  const Matrix good = Matrix::from_strings(C, 1, 4, {"1", "i", "-i", "1"});
  const std::vector<EnvStructure> envs = {
      EnvStructure::standard_trace(Z2),
      EnvStructure::caps(zz, 2),
      EnvStructure::explicit_generators(Z2, {{2, {good}}}),
      env_preset("double-dilation", zz),
      env_preset("double-mixing", zz),
  };
  for (const auto& env : envs) {
    CAPTURE(env.describe());
    const EnvStructure back = env_from_json(env_to_json(env));
    CHECK(env_to_json(back).dump() == env_to_json(env).dump());
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto& a = env.effects(n);
      const auto& b = back.effects(n);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
    }
  }
}

TEST_CASE("explicit generators are checked unless asked not to") {
  json j = env_to_json(EnvStructure::explicit_generators(Z2, {{2, {Matrix::from_strings(C, 1, 4, {"1", "0", "0", "1"})}}}));
  j["generators"]["2"][0]["entries"] = json::array({"1", "i", "0", "0"});
  CHECK_THROWS_AS(env_from_json(j), EnvAxiomError);
  j["check"] = false;
  CHECK(env_from_json(j).generators(2).size() == 1);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_json("{\"rows\": "), ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"semiring": {"kind": "rational"}, "rows": 2, "cols": 2, "entries": ["1"]})")),
                  ParseError);
  CHECK_THROWS_AS(semiring_from_json(parse_json(R"({"kind": "octonion"})")), ParseError);
  CHECK_THROWS_AS(env_from_json(parse_json(R"({"rule": "mystery"})")), ParseError);
  CHECK_THROWS_AS(action_from_json(parse_json(R"({"orders": "two"})")), ParseError);
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteOptions{}), ParseError);
}

TEST_CASE("suite reports are deterministic for a seed") {
  SuiteOptions o;
  o.seed = 11;
  o.samples = 5;
  const std::string a = suite_report_to_json(run_suite("smat-laws", o)).dump();
  const std::string b = suite_report_to_json(run_suite("smat-laws", o)).dump();
  CHECK(a == b);
  o.seed = 12;
  const SuiteReport other = run_suite("smat-laws", o);
  CHECK(other.ok());
  CHECK(suite_report_to_json(other).dump() != a);
}
