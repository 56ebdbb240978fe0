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

namespace {

Instance additive_pair(int m, const Rational& w1, const Rational& w2) {
  Instance inst;
  inst.m = m;
  for (const Rational& w : {w1, w2}) {
    AgentSpec a;
    a.valuation.m = m;
    Bundle all(static_cast<std::size_t>(m));
    all.set();
    a.valuation.family = CappedRelevant{all, m};
    a.weight = w;
    inst.agents.push_back(std::move(a));
  }
  return inst;
}

}  // namespace

TEST_CASE("empty ground set") {
  Instance inst = additive_pair(0, 1, 1);
  auto r = run(inst, resolve_criterion(inst, CriterionKind::kLeximin));
  CHECK(r.utilities == UtilityVector{0, 0});
  CHECK(r.usw == 0);
  // Both agents still retire, one step each.
  CHECK(r.trace.size() == 2);
}

TEST_CASE("six unit goods, weights 2 and 8") {
  Instance inst = additive_pair(6, 2, 8);
  auto lex = run(inst, resolve_criterion(inst, CriterionKind::kLeximin));
  CHECK(lex.utilities == UtilityVector{2, 4});
  auto nash = run(inst, resolve_criterion(inst, CriterionKind::kNash));
  CHECK(nash.utilities == UtilityVector{1, 5});
}

TEST_CASE("single good, weights 1 and 2: leximin favors the lighter agent") {
  Instance inst = additive_pair(1, 1, 2);
  auto r = run(inst, resolve_criterion(inst, CriterionKind::kLeximin));
  CHECK(r.utilities == UtilityVector{1, 0});
}

TEST_CASE("capped pair with heavy weights gets (2,2) under every criterion") {
  Instance inst;
  inst.m = 4;
  for (const Rational& w : {Rational(10), Rational(1)}) {
    AgentSpec a;
    a.valuation.m = 4;
    Bundle all(4);
    all.set();
    a.valuation.family = CappedRelevant{all, 2};
    a.weight = w;
    a.priority = a.weight == 10 ? 1 : 2;
    a.fair_share = 1;
    inst.agents.push_back(std::move(a));
  }
  for (auto kind :
       {CriterionKind::kLorenz, CriterionKind::kLeximin,
        CriterionKind::kFairShare, CriterionKind::kNash,
        CriterionKind::kHarmonic}) {
    auto r = run(inst, resolve_criterion(inst, kind));
    CHECK(r.utilities == UtilityVector{2, 2});
    CHECK(r.usw == 4);
  }
  for (const Rational& p : {Rational(1), Rational(1, 2), Rational(-1),
                            Rational(-2)}) {
    auto r = run(inst, resolve_criterion(inst, CriterionKind::kPMean, p));
    CHECK(r.utilities == UtilityVector{2, 2});
  }
}

TEST_CASE("trace obeys the iteration and monotonicity contracts") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = random_instance(rng);
    Criterion c = random_criterion(rng, inst);
    RunOptions opts;
    opts.verify_invariants = true;
    auto r = run(inst, c, opts);
    const int n = static_cast<int>(inst.agents.size());
    CHECK(static_cast<int>(r.trace.size()) <= inst.m + n);
    int augments = 0;
    std::vector<bool> retired(static_cast<std::size_t>(n) + 1, false);
    for (const auto& step : r.trace) {
      CHECK(!retired[static_cast<std::size_t>(step.agent)]);
      if (step.augmented)
        ++augments;
      else
        retired[static_cast<std::size_t>(step.agent)] = true;
    }
    CHECK(augments == r.usw);
    for (std::size_t i = 0; i < r.utilities.size(); ++i)
      CHECK(r.utilities[i] ==
            static_cast<int>(r.allocation.bundles[i + 1].count()));
  }
}

TEST_CASE("bit-identical traces across runs") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    Instance inst = random_instance(rng);
    Criterion c = random_criterion(rng, inst);
    auto a = run(inst, c);
    auto b = run(inst, c);
    CHECK(run_result_to_json(a, c).dump() == run_result_to_json(b, c).dump());
  }
}

TEST_CASE("replay_check accepts fresh runs and flags corruption") {
  std::mt19937_64 rng(53);
  int corrupted_checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = random_instance(rng);
    Criterion c = random_criterion(rng, inst);
    auto r = run(inst, c);
    auto ok = replay_check(r, inst, c);
    std::string why = ok ? *ok : std::string();
    CHECK_MESSAGE(!ok, why);

    // Swap the chosen agent of one step to a different agent.
    if (inst.agents.size() >= 2 && !r.trace.empty()) {
      RunResult bad = r;
      auto& step = bad.trace[rng() % bad.trace.size()];
      step.agent = step.agent == 1 ? 2 : 1;
      CHECK(replay_check(bad, inst, c).has_value());
      ++corrupted_checked;
    }
  }
  CHECK(corrupted_checked > 0);
}

TEST_CASE("round-trip through JSON replays cleanly") {
  std::mt19937_64 rng(59);
  Instance inst = random_instance(rng);
  Criterion c = random_criterion(rng, inst);
  auto r = run(inst, c);
  auto j = run_result_to_json(r, c);
  auto j2 = Json::parse(j.dump());
  CHECK(j == j2);
}

TEST_CASE("mechanism zeroes out non-MRF reports") {
  Instance inst = additive_pair(2, 1, 1);
  ExplicitTable bad;
  bad.values = {0, 1, 0, 2};  // supermodular
  inst.agents[0].valuation.family = bad;
  auto r = run_mechanism(inst, resolve_criterion(inst,
                                                 CriterionKind::kLeximin));
  CHECK(r.utilities == UtilityVector{0, 2});
  CHECK(r.allocation.bundles[1].none());
}

TEST_CASE("validation lists problems instead of running") {
  Instance inst = additive_pair(2, 1, 1);
  inst.agents[1].weight = 0;
  auto c = resolve_criterion(inst, CriterionKind::kLeximin);
  CHECK(!validate(inst, c).empty());
  CHECK_THROWS_AS(run(inst, c), std::invalid_argument);

  Instance bad_priority = additive_pair(2, 1, 1);
  bad_priority.agents[0].priority = 1;
  bad_priority.agents[1].priority = 1;
  auto lorenz = resolve_criterion(bad_priority, CriterionKind::kLorenz);
  CHECK(!validate(bad_priority, lorenz).empty());
}

TEST_CASE("query limit aborts the run") {
  Instance inst = additive_pair(6, 1, 1);
  RunOptions opts;
  opts.query_limit = 5;
  CHECK_THROWS_AS(run(inst, resolve_criterion(inst, CriterionKind::kLeximin),
                      opts),
                  QueryLimitExceeded);
}
