// Copyright 2026 The Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ys/generate.hpp"
#include "ys/json_io.hpp"

using namespace ys;

TEST_CASE("rational strings") {
  CHECK(rational_to_string(parse_rational("4/8")) == "1/2");
  CHECK(rational_to_string(parse_rational("3")) == "3");
  CHECK(rational_to_string(parse_rational("-2/4")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("valuation round trips for every family") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = random_instance(rng);
    for (const auto& a : inst.agents) {
      Json j = valuation_to_json(a.valuation);
      ValuationSpec back = valuation_from_json(j, inst.m);
      CHECK(valuation_to_json(back) == j);
      // Semantically identical too.
      QueryCounter qc;
      for (unsigned mask = 0; mask < (1u << inst.m); ++mask) {
        Bundle s(static_cast<std::size_t>(inst.m), mask);
        CHECK(value(a.valuation, s, qc) == value(back, s, qc));
      }
    }
  }
}

TEST_CASE("criterion round trip") {
  Criterion c;
  c.kind = CriterionKind::kPMean;
  c.p = Rational(-1, 2);
  Json j = criterion_to_json(c);
  Criterion back = criterion_from_json(j);
  CHECK(back.kind == CriterionKind::kPMean);
  CHECK(back.p == c.p);
  CHECK(criterion_to_json(back) == j);

  Criterion fs;
  fs.kind = CriterionKind::kFairShare;
  fs.shares = {Rational(1, 2), 2};
  CHECK(criterion_to_json(criterion_from_json(criterion_to_json(fs))) ==
        criterion_to_json(fs));
}

TEST_CASE("instance file round trip is the identity") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    InstanceFile f;
    f.instance = random_instance(rng);
    f.criterion = random_criterion(rng, f.instance);
    Json j = instance_to_json(f);
    InstanceFile back = instance_from_json(j);
    CHECK(instance_to_json(back) == j);
  }
}

TEST_CASE("unknown fields are rejected") {
  Json j = Json::parse(R"({"m": 1, "agents": [], "extra": 1})");
  CHECK_THROWS_AS(instance_from_json(j), std::invalid_argument);

  Json v = Json::parse(
      R"({"type": "capped_relevant", "relevant": [0], "cap": 1, "x": 2})");
  CHECK_THROWS_AS(valuation_from_json(v, 1), std::invalid_argument);

  Json c = Json::parse(R"({"criterion": "leximin", "bogus": true})");
  CHECK_THROWS_AS(criterion_from_json(c), std::invalid_argument);
}

TEST_CASE("malformed content is diagnosed") {
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"agents": []})")),
                  std::invalid_argument);  // missing m
  Json bad_weight = Json::parse(
      R"({"m": 1, "agents": [{"valuation":
          {"type": "capped_relevant", "relevant": [0], "cap": 1},
          "weight": 2}]})");
  CHECK_THROWS_AS(instance_from_json(bad_weight), std::invalid_argument);
  Json out_of_range = Json::parse(
      R"({"m": 1, "agents": [{"valuation":
          {"type": "capped_relevant", "relevant": [3], "cap": 1},
          "weight": "2"}]})");
  CHECK_THROWS_AS(instance_from_json(out_of_range), std::invalid_argument);
}

TEST_CASE("bundles serialize as sorted index arrays") {
  Bundle b = make_bundle(5, {4, 0, 2});
  CHECK(bundle_to_json(b) == Json::array({0, 2, 4}));
}

TEST_CASE("fuzz report serializes") {
  FuzzReport r;
  r.trials = 10;
  r.seed = 7;
  Json j = fuzz_report_to_json(r);
  CHECK(j["trials"] == 10);
  CHECK(j["violations"].empty());
}
