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
#include "ys/valuation.hpp"

using namespace ys;

namespace {

ValuationSpec capped(int m, std::initializer_list<int> relevant, int cap) {
  ValuationSpec s;
  s.m = m;
  s.family = CappedRelevant{make_bundle(static_cast<std::size_t>(m), relevant),
                            cap};
  return s;
}

ValuationSpec explicit_spec(int m, std::vector<int> values) {
  ValuationSpec s;
  s.m = m;
  s.family = ExplicitTable{std::move(values)};
  return s;
}

}  // namespace

TEST_CASE("capped relevant values") {
  QueryCounter qc;
  auto s = capped(3, {0, 1}, 2);
  CHECK(value(s, make_bundle(3, {}), qc) == 0);
  CHECK(value(s, make_bundle(3, {0}), qc) == 1);
  CHECK(value(s, make_bundle(3, {0, 1, 2}), qc) == 2);
  auto all2 = capped(3, {0, 1, 2}, 2);  // v(S) = min(|S|, 2)
  CHECK(value(all2, make_bundle(3, {0, 1, 2}), qc) == 2);
  CHECK(qc.count == 4);
}

TEST_CASE("transversal matching rank") {
  ValuationSpec s;
  s.m = 2;
  s.family = Transversal{2, {{0, 0}, {1, 0}}};  // both goods share one slot
  QueryCounter qc;
  CHECK(value(s, make_bundle(2, {0, 1}), qc) == 1);
  CHECK(value(s, make_bundle(2, {0}), qc) == 1);
}

TEST_CASE("graphic rank") {
  ValuationSpec s;
  s.m = 3;
  s.family = Graphic{3, {{0, 1}, {1, 2}, {2, 0}}};  // triangle
  QueryCounter qc;
  CHECK(value(s, make_bundle(3, {0, 1, 2}), qc) == 2);
  CHECK(value(s, make_bundle(3, {0, 1}), qc) == 2);
  CHECK(value(s, make_bundle(3, {0}), qc) == 1);
}

TEST_CASE("marginal definition and preconditions") {
  QueryCounter qc;
  auto s = capped(2, {1}, 1);
  CHECK(marginal(s, make_bundle(2, {}), 1, qc) == 1);
  CHECK(marginal(s, make_bundle(2, {}), 0, qc) == 0);
  CHECK_THROWS_AS(marginal(s, make_bundle(2, {1}), 1, qc),
                  std::invalid_argument);

  ValuationSpec part;
  part.m = 2;
  part.family = PartitionFamily{{make_bundle(2, {0, 1})}, {1}};
  CHECK(marginal(part, make_bundle(2, {0}), 1, qc) == 0);
}

TEST_CASE("marginal counts as two value calls") {
  QueryCounter qc;
  auto s = capped(4, {0, 1, 2, 3}, 4);
  marginal(s, make_bundle(4, {0}), 1, qc);
  CHECK(qc.count == 2);
}

TEST_CASE("check_mrf accepts every structural family") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = random_instance(rng, 2, 6);
    for (const auto& a : inst.agents) {
      auto violation = check_mrf(a.valuation);
      std::string why = violation ? violation->describe() : std::string();
      CHECK_MESSAGE(!violation, why);
    }
  }
}

TEST_CASE("check_mrf finds explicit-table violations") {
  auto nonzero_empty = explicit_spec(1, {1, 1});
  auto v = check_mrf(nonzero_empty);
  REQUIRE(v);
  CHECK(v->kind == MrfViolation::Kind::EmptySetNonzero);

  // v(S) = |S|^2 on m = 2.
  auto squared = explicit_spec(2, {0, 1, 1, 4});
  v = check_mrf(squared);
  REQUIRE(v);
  CHECK(v->kind == MrfViolation::Kind::MarginalNotBinary);

  // Supermodular: the second good helps only alongside the first.
  auto supermodular = explicit_spec(2, {0, 1, 0, 2});
  v = check_mrf(supermodular);
  REQUIRE(v);

  CHECK_THROWS_AS(check_mrf(explicit_spec(1, {0, 1}), 0),
                  std::invalid_argument);
}

TEST_CASE("zero_out_if_invalid") {
  ValuationSpec part;
  part.m = 3;
  part.family = PartitionFamily{{make_bundle(3, {0, 1})}, {2}};
  QueryCounter qc;
  auto same = zero_out_if_invalid(part);
  CHECK(value(same, make_bundle(3, {0, 1}), qc) == 2);

  auto bad = explicit_spec(1, {1, 1});
  auto zeroed = zero_out_if_invalid(bad);
  CHECK(value(zeroed, make_bundle(1, {0}), qc) == 0);
  auto again = zero_out_if_invalid(zeroed);
  CHECK(value(again, make_bundle(1, {0}), qc) == 0);
}

TEST_CASE("indicator valuation f_T") {
  QueryCounter qc;
  auto zero = indicator_valuation(3, make_bundle(3, {}));
  CHECK(value(zero, make_bundle(3, {0, 1, 2}), qc) == 0);
  auto f = indicator_valuation(4, make_bundle(4, {1, 3}));
  CHECK(value(f, make_bundle(4, {1, 2}), qc) == 1);
  CHECK(!check_mrf(f));
}

TEST_CASE("exhaustive axioms at m <= 8 across families") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = random_instance(rng, 2, 6);
    const auto& spec = inst.agents[0].valuation;
    const int m = inst.m;
    QueryCounter qc;
    CHECK(value(spec, Bundle(static_cast<std::size_t>(m)), qc) == 0);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      Bundle s(static_cast<std::size_t>(m), mask);
      for (int g = 0; g < m; ++g) {
        if (s.test(static_cast<std::size_t>(g))) continue;
        int d = marginal(spec, s, g, qc);
        CHECK((d == 0 || d == 1));
        Bundle plus = s;
        plus.set(static_cast<std::size_t>(g));
        CHECK(value(spec, plus, qc) - value(spec, s, qc) == d);
      }
    }
  }
}

TEST_CASE("query counter is deterministic") {
  auto count_once = [] {
    std::mt19937_64 rng(5);
    Instance inst = random_instance(rng, 3, 6);
    QueryCounter qc;
    for (const auto& a : inst.agents)
      for (unsigned mask = 0; mask < (1u << inst.m); ++mask)
        value(a.valuation, Bundle(static_cast<std::size_t>(inst.m), mask), qc);
    return qc.count;
  };
  CHECK(count_once() == count_once());
}

TEST_CASE("validate_spec reports problems") {
  ValuationSpec s;
  s.m = 2;
  s.family = PartitionFamily{{make_bundle(2, {0, 1}), make_bundle(2, {1})},
                             {1, 1}};
  CHECK(!validate_spec(s).empty());  // overlapping categories

  auto short_table = explicit_spec(2, {0, 1});
  CHECK(!validate_spec(short_table).empty());

  auto fine = capped(2, {0}, 1);
  CHECK(validate_spec(fine).empty());
}
