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

#include <cmath>
#include <random>

#include "ys/criteria.hpp"

using namespace ys;

namespace {

Criterion leximin() { return {CriterionKind::kLeximin, 0, {}, {}}; }
Criterion nash() { return {CriterionKind::kNash, 0, {}, {}}; }

Criterion pmean(const Rational& p) {
  Criterion c;
  c.kind = CriterionKind::kPMean;
  c.p = p;
  return c;
}

}  // namespace

TEST_CASE("leximin gain prefers the lighter zero-utility agent") {
  std::vector<Rational> w = {1, 2};
  UtilityVector u = {0, 0};
  auto g1 = gain(leximin(), u, w, 1);
  auto g2 = gain(leximin(), u, w, 2);
  CHECK(compare(g1, g2) > 0);
  CHECK(select_agent({1, 2}, u, leximin(), w) == 1);
}

TEST_CASE("nash sentinels and finite comparison") {
  std::vector<Rational> w = {1, 1};
  auto top = gain(nash(), {0, 3}, w, 1);
  CHECK(top.cls == Gain::Class::kTop);
  auto fin = gain(nash(), {0, 3}, w, 2);
  CHECK(compare(top, fin) > 0);
  CHECK(compare(top, gain(nash(), {3, 0}, w, 2)) == 0);  // two tops tie

  // (1+1/1)^1 vs (1+1/2)^1.
  CHECK(compare(gain(nash(), {1, 2}, w, 1), gain(nash(), {1, 2}, w, 2)) > 0);

  // w_i=2, u_i=3 vs w_j=1, u_j=1: (4/3)^2 = 16/9 < 2.
  std::vector<Rational> w2 = {2, 1};
  CHECK(compare(gain(nash(), {3, 1}, w2, 1), gain(nash(), {3, 1}, w2, 2)) < 0);

  // Rational weights: clearing denominators must preserve the order.
  std::vector<Rational> w3 = {Rational(1, 2), 3};
  UtilityVector u3 = {1, 1};
  // (2)^(1/2) vs (2)^3: the heavier agent gains more.
  CHECK(compare(gain(nash(), u3, w3, 1), gain(nash(), u3, w3, 2)) < 0);
}

TEST_CASE("pmean gains") {
  std::vector<Rational> w = {3, 5};
  // p = 1: gain is exactly w_i.
  auto a = gain(pmean(1), {2, 4}, w, 1);
  auto b = gain(pmean(1), {2, 4}, w, 2);
  CHECK(compare(a, b) < 0);
  CHECK(select_agent({1, 2}, {2, 4}, pmean(1), w) == 2);

  // u = 0 maps to the top sentinel M * w_i, ranked by weight.
  auto t1 = gain(pmean(Rational(1, 2)), {0, 0}, w, 1);
  auto t2 = gain(pmean(Rational(1, 2)), {0, 0}, w, 2);
  CHECK(t1.cls == Gain::Class::kTop);
  CHECK(compare(t1, t2) < 0);

  // p = 1/2 with equal weights: sqrt increments shrink with utility.
  std::vector<Rational> eq = {1, 1};
  auto lo = gain(pmean(Rational(1, 2)), {1, 2}, eq, 1);
  auto hi = gain(pmean(Rational(1, 2)), {1, 2}, eq, 2);
  CHECK(compare(lo, hi) > 0);
  // Exact tie at identical utility and weight.
  CHECK(compare(lo, gain(pmean(Rational(1, 2)), {2, 1}, eq, 2)) == 0);

  // Negative p: sign(p) flips the difference, gain stays positive-ordered.
  auto na = gain(pmean(-1), {1, 3}, eq, 1);
  auto nb = gain(pmean(-1), {1, 3}, eq, 2);
  CHECK(compare(na, nb) > 0);

  CHECK_THROWS_AS(gain(pmean(0), {1, 1}, eq, 1), std::invalid_argument);
}

TEST_CASE("fair-share sentinel is a bottom") {
  Criterion c;
  c.kind = CriterionKind::kFairShare;
  c.shares = {0, Rational(1, 2)};
  std::vector<Rational> w = {1, 1};
  auto bot = gain(c, {0, 0}, w, 1);
  auto fin = gain(c, {0, 0}, w, 2);
  CHECK(bot.cls == Gain::Class::kBottom);
  CHECK(compare(bot, fin) < 0);
  CHECK(compare(bot, bot) == 0);
}

TEST_CASE("psi pareto dominance for every criterion") {
  std::vector<Rational> w = {1, 2, 3};
  UtilityVector hi = {2, 1, 3}, lo = {2, 1, 2};
  std::vector<Criterion> all;
  all.push_back(leximin());
  all.push_back(nash());
  all.push_back(pmean(1));
  all.push_back(pmean(Rational(1, 2)));
  all.push_back(pmean(-1));
  all.push_back(pmean(-2));
  Criterion lorenz;
  lorenz.kind = CriterionKind::kLorenz;
  lorenz.priority = {2, 3, 1};
  all.push_back(lorenz);
  Criterion fs;
  fs.kind = CriterionKind::kFairShare;
  fs.shares = {1, Rational(1, 2), 2};
  all.push_back(fs);
  Criterion harm;
  harm.kind = CriterionKind::kHarmonic;
  all.push_back(harm);
  for (const auto& c : all) {
    CHECK(psi_compare(c, hi, lo, w) > 0);
    CHECK(psi_compare(c, hi, hi, w) == 0);
  }
}

TEST_CASE("nash psi on the weighted six-good split") {
  std::vector<Rational> w = {2, 8};
  // 1^2 * 5^8 = 390625 > 2^2 * 4^8 = 262144.
  CHECK(psi_compare(nash(), {1, 5}, {2, 4}, w) > 0);
  // Fewer zero-utility agents wins outright.
  CHECK(psi_compare(nash(), {1, 1}, {0, 6}, w) > 0);
}

TEST_CASE("leximin psi compares weighted sorted vectors") {
  std::vector<Rational> w = {2, 8};
  // e-vectors: (1, 1/2) -> (1/2, 1) vs (1/2, 5/8) -> (1/2, 5/8).
  CHECK(psi_compare(leximin(), {2, 4}, {1, 5}, w) > 0);
}

TEST_CASE("pmean psi is exact on radical ties") {
  std::vector<Rational> w = {1, 1, 1};
  auto c = pmean(Rational(1, 2));
  // sqrt(2) + sqrt(8) = 3 sqrt(2): an exact tie no float should decide.
  CHECK(psi_compare(c, {2, 8, 1}, {2, 2, 5}, w) ==
        ((std::sqrt(2.0) + std::sqrt(8.0) + 1 >
          2 * std::sqrt(2.0) + std::sqrt(5.0))
             ? 1
             : -1));
  CHECK(psi_compare(c, {2, 8, 0}, {2, 2, 0}, w) != 0);
  // Same multiset of utilities: exact equality.
  CHECK(psi_compare(c, {2, 8, 1}, {8, 1, 2}, w) == 0);
}

TEST_CASE("harmonic psi is the weighted harmonic series") {
  CHECK(harmonic_number(0) == 0);
  CHECK(harmonic_number(3) == Rational(11, 6));
  std::vector<Rational> w = {1, 1};
  Criterion c;
  c.kind = CriterionKind::kHarmonic;
  // H(2)+H(2) = 3 > H(1)+H(3) = 1 + 11/6.
  CHECK(psi_compare(c, {2, 2}, {1, 3}, w) > 0);
}

TEST_CASE("ties break by least index") {
  std::vector<Rational> w = {1, 1, 1, 1, 1};
  CHECK(select_agent({2, 5}, {1, 0, 1, 1, 0}, leximin(), w) == 2);
  CHECK(select_agent({3}, {9, 9, 9, 9, 9}, leximin(), w) == 3);
}

TEST_CASE("gain comparison is a total order") {
  std::mt19937_64 rng(7);
  std::vector<Rational> w = {Rational(1, 2), 1, 2, 3};
  std::vector<Criterion> cs = {leximin(), nash(), pmean(Rational(1, 2)),
                               pmean(-2)};
  for (int trial = 0; trial < 2000; ++trial) {
    const Criterion& c = cs[rng() % cs.size()];
    UtilityVector u(4);
    for (auto& x : u) x = static_cast<int>(rng() % 5);
    int i = static_cast<int>(rng() % 4) + 1;
    int j = static_cast<int>(rng() % 4) + 1;
    int k = static_cast<int>(rng() % 4) + 1;
    Gain a = gain(c, u, w, i), b = gain(c, u, w, j), d = gain(c, u, w, k);
    CHECK(compare(a, b) == -compare(b, a));
    if (compare(a, b) >= 0 && compare(b, d) >= 0) CHECK(compare(a, d) >= 0);
  }
}

TEST_CASE("argmax is invariant under weight rescaling") {
  std::mt19937_64 rng(13);
  std::vector<Criterion> cs = {leximin(), nash(), pmean(Rational(1, 2)),
                               pmean(-1)};
  Criterion harm;
  harm.kind = CriterionKind::kHarmonic;
  cs.push_back(harm);
  const Rational scales[] = {Rational(1, 3), 2, Rational(7, 2)};
  for (int trial = 0; trial < 500; ++trial) {
    const Criterion& c = cs[rng() % cs.size()];
    std::vector<Rational> w(3);
    static const Rational pool[] = {Rational(1, 2), 1, 2, 3, 8};
    for (auto& x : w) x = pool[rng() % 5];
    UtilityVector u(3);
    for (auto& x : u) x = static_cast<int>(rng() % 4);
    int base = select_agent({1, 2, 3}, u, c, w);
    for (const auto& s : scales) {
      std::vector<Rational> scaled = w;
      for (auto& x : scaled) x *= s;
      CHECK(select_agent({1, 2, 3}, u, c, scaled) == base);
    }
  }
}

TEST_CASE("render_gain shows exact payloads") {
  std::vector<Rational> w = {2, 1};
  CHECK(render_gain(gain(nash(), {0, 1}, w, 1)) == "M");
  CHECK(render_gain(gain(leximin(), {1, 0}, w, 1)) ==
        "(-1/2,-2)~(-0.5,-2)");
  auto s = render_gain(gain(pmean(Rational(1, 2)), {0, 1}, w, 1));
  CHECK(s == "M*2");
}
