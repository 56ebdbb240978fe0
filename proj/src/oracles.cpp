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

#include "ys/oracles.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace ys {

namespace {

long long ipow_checked(long long base, int exp) {
  long long r = 1;
  for (int k = 0; k < exp; ++k) {
    if (r > kEnumerationLimit / base) return kEnumerationLimit + 1;
    r *= base;
  }
  return r;
}

// Calls fn(owner) for every assignment of goods to {0..n}.
template <typename Fn>
void for_each_assignment(int m, int n, Fn&& fn) {
  std::vector<int> owner(static_cast<std::size_t>(m), 0);
  for (;;) {
    fn(owner);
    int k = 0;
    while (k < m && owner[static_cast<std::size_t>(k)] == n) {
      owner[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == m) return;
    ++owner[static_cast<std::size_t>(k)];
  }
}

UtilityVector utilities_of(const Instance& inst, const std::vector<int>& owner,
                           QueryCounter& qc) {
  const int n = static_cast<int>(inst.agents.size());
  std::vector<Bundle> bundles(static_cast<std::size_t>(n) + 1,
                              Bundle(static_cast<std::size_t>(inst.m)));
  for (int g = 0; g < inst.m; ++g)
    bundles[static_cast<std::size_t>(owner[static_cast<std::size_t>(g)])].set(
        static_cast<std::size_t>(g));
  UtilityVector u(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    u[static_cast<std::size_t>(i) - 1] =
        value(inst.agents[static_cast<std::size_t>(i) - 1].valuation,
              bundles[static_cast<std::size_t>(i)], qc);
  return u;
}

void require_enumerable(int m, int n) {
  if (ipow_checked(n + 1, m) > kEnumerationLimit)
    throw EnumerationLimitExceeded("instance too large to enumerate");
}

std::vector<Rational> weights_of(const Instance& inst) {
  std::vector<Rational> w;
  for (const auto& a : inst.agents) w.push_back(a.weight);
  return w;
}

}  // namespace

std::set<UtilityVector> enumerate_utilities(const Instance& inst) {
  const int n = static_cast<int>(inst.agents.size());
  require_enumerable(inst.m, n);
  QueryCounter qc;
  std::set<UtilityVector> out;
  for_each_assignment(inst.m, n, [&](const std::vector<int>& owner) {
    out.insert(utilities_of(inst, owner, qc));
  });
  return out;
}

OptResult brute_force_optimum(const Instance& inst, const Criterion& c) {
  const int n = static_cast<int>(inst.agents.size());
  require_enumerable(inst.m, n);
  const auto weights = weights_of(inst);
  QueryCounter qc;
  std::map<UtilityVector, std::vector<int>> witnesses;
  for_each_assignment(inst.m, n, [&](const std::vector<int>& owner) {
    witnesses.emplace(utilities_of(inst, owner, qc), owner);
  });

  OptResult best;
  std::vector<const UtilityVector*> optimal;
  for (const auto& [u, owner] : witnesses) {
    if (optimal.empty()) {
      optimal.push_back(&u);
      continue;
    }
    int cmp = psi_compare(c, u, *optimal.front(), weights);
    if (cmp > 0) {
      optimal.clear();
      optimal.push_back(&u);
    } else if (cmp == 0) {
      optimal.push_back(&u);
    }
  }
  const UtilityVector* lead = optimal.front();
  for (const UtilityVector* u : optimal)
    if (lex_compare(*u, *lead) > 0) lead = u;
  best.best_utilities = *lead;
  best.best_count = static_cast<int>(optimal.size());
  best.witness = witnesses.at(*lead);
  return best;
}

int compute_mms(const Instance& inst, int agent) {
  const int n = static_cast<int>(inst.agents.size());
  if (agent < 1 || agent > n) throw std::invalid_argument("unknown agent");
  if (ipow_checked(std::max(n, 1), inst.m) > kEnumerationLimit)
    throw EnumerationLimitExceeded("instance too large for share computation");
  const auto& spec = inst.agents[static_cast<std::size_t>(agent) - 1].valuation;
  QueryCounter qc;
  int best = 0;
  // Partitions into n bundles: every good owned by an agent, none pooled.
  std::vector<int> owner(static_cast<std::size_t>(inst.m), 1);
  for (;;) {
    std::vector<Bundle> bundles(static_cast<std::size_t>(n) + 1,
                                Bundle(static_cast<std::size_t>(inst.m)));
    for (int g = 0; g < inst.m; ++g)
      bundles[static_cast<std::size_t>(owner[static_cast<std::size_t>(g)])]
          .set(static_cast<std::size_t>(g));
    int worst = value(spec, bundles[1], qc);
    for (int j = 2; j <= n; ++j)
      worst = std::min(worst, value(spec, bundles[static_cast<std::size_t>(j)],
                                    qc));
    best = std::max(best, worst);
    int k = 0;
    while (k < inst.m && owner[static_cast<std::size_t>(k)] == n) {
      owner[static_cast<std::size_t>(k)] = 1;
      ++k;
    }
    if (k == inst.m) break;
    ++owner[static_cast<std::size_t>(k)];
  }
  return best;
}

std::optional<std::string> check_mms_satisfaction(
    const UtilityVector& utilities, const std::vector<int>& mms) {
  for (std::size_t i = 0; i < utilities.size(); ++i)
    if (utilities[i] < mms[i])
      return "agent " + std::to_string(i + 1) + " got " +
             std::to_string(utilities[i]) + " < share " +
             std::to_string(mms[i]);
  return std::nullopt;
}

std::optional<std::string> check_efx(const Instance& inst,
                                     const Allocation& x) {
  const int n = x.num_agents();
  QueryCounter qc;
  for (int i = 1; i <= n; ++i) {
    const auto& spec = inst.agents[static_cast<std::size_t>(i) - 1].valuation;
    int own = value(spec, x.bundles[static_cast<std::size_t>(i)], qc);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const Bundle& other = x.bundles[static_cast<std::size_t>(j)];
      for (auto g = other.find_first(); g != Bundle::npos;
           g = other.find_next(g)) {
        Bundle reduced = other;
        reduced.reset(g);
        if (own < value(spec, reduced, qc))
          return "agent " + std::to_string(i) + " envies agent " +
                 std::to_string(j) + " even without good " +
                 std::to_string(static_cast<int>(g));
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_wef1(const Instance& inst,
                                      const Allocation& x) {
  const int n = x.num_agents();
  QueryCounter qc;
  for (int i = 1; i <= n; ++i) {
    const auto& spec = inst.agents[static_cast<std::size_t>(i) - 1].valuation;
    const Rational& wi = inst.agents[static_cast<std::size_t>(i) - 1].weight;
    Rational own = Rational(value(spec, x.bundles[static_cast<std::size_t>(i)],
                                  qc)) /
                   wi;
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const Bundle& other = x.bundles[static_cast<std::size_t>(j)];
      if (other.none()) continue;
      const Rational& wj = inst.agents[static_cast<std::size_t>(j) - 1].weight;
      bool ok = false;
      for (auto g = other.find_first(); g != Bundle::npos && !ok;
           g = other.find_next(g)) {
        Bundle reduced = other;
        reduced.reset(g);
        ok = own >= Rational(value(spec, reduced, qc)) / wj;
      }
      if (!ok)
        return "agent " + std::to_string(i) + " envies agent " +
               std::to_string(j) + " beyond one good";
    }
  }
  return std::nullopt;
}

namespace {

Bundle random_subset(std::mt19937_64& rng, const Bundle& within) {
  Bundle out(within.size());
  for (auto g = within.find_first(); g != Bundle::npos;
       g = within.find_next(g))
    if (rng() & 1) out.set(g);
  return out;
}

Manipulation draw_manipulation(std::mt19937_64& rng, const Instance& inst,
                               const Allocation& truthful_x, int agent) {
  const int m = inst.m;
  const auto& truth = inst.agents[static_cast<std::size_t>(agent) - 1]
                          .valuation;
  std::vector<std::string> kinds = {"f_T", "dominating"};
  if (std::holds_alternative<CappedRelevant>(truth.family)) {
    kinds.push_back("cap_reduction");
    kinds.push_back("relevant_set_edit");
  } else if (std::holds_alternative<PartitionFamily>(truth.family)) {
    kinds.push_back("cap_reduction");
  }
  if (m <= kDefaultMrfCheckLimit && m <= 10) kinds.push_back("random_table");

  Manipulation man;
  man.agent = agent;
  man.kind = kinds[rng() % kinds.size()];
  if (man.kind == "f_T") {
    // Half the time stay inside the truthful bundle (the faithfulness case).
    Bundle within = (rng() & 1)
                        ? truthful_x.bundles[static_cast<std::size_t>(agent)]
                        : Bundle(static_cast<std::size_t>(m)).set();
    man.reported = indicator_valuation(m, random_subset(rng, within));
  } else if (man.kind == "dominating") {
    // f_G(S) = |S| pointwise dominates every valuation with binary marginals.
    man.reported =
        indicator_valuation(m, Bundle(static_cast<std::size_t>(m)).set());
  } else if (man.kind == "cap_reduction") {
    man.reported = truth;
    if (auto* cr = std::get_if<CappedRelevant>(&man.reported.family)) {
      if (cr->cap > 0) cr->cap = static_cast<int>(rng() % cr->cap);
    } else if (auto* pf = std::get_if<PartitionFamily>(&man.reported.family)) {
      std::size_t k = rng() % pf->caps.size();
      if (pf->caps[k] > 0)
        pf->caps[k] = static_cast<int>(rng() % pf->caps[k]);
    }
  } else if (man.kind == "relevant_set_edit") {
    man.reported = truth;
    auto& cr = std::get<CappedRelevant>(man.reported.family);
    cr.relevant.flip(rng() % cr.relevant.size());
  } else {  // random_table
    ExplicitTable table;
    table.values.resize(std::size_t{1} << m);
    for (auto& v : table.values) v = static_cast<int>(rng() % 3);
    man.reported.m = m;
    man.reported.family = std::move(table);
  }
  return man;
}

}  // namespace

FuzzReport fuzz_strategyproofness(const Instance& inst, const Criterion& c,
                                  int trials, std::uint64_t seed,
                                  const RunOptions& opts) {
  FuzzReport report;
  report.trials = trials;
  report.seed = seed;
  const int n = static_cast<int>(inst.agents.size());
  if (n == 0 || inst.m == 0) return report;

  const RunResult truthful = run_mechanism(inst, c, opts);
  std::mt19937_64 rng(seed);
  QueryCounter qc;

  for (int t = 0; t < trials; ++t) {
    int agent = static_cast<int>(rng() % n) + 1;
    Manipulation man =
        draw_manipulation(rng, inst, truthful.allocation, agent);

    Instance manipulated = inst;
    manipulated.agents[static_cast<std::size_t>(agent) - 1].valuation =
        man.reported;
    const RunResult outcome = run_mechanism(manipulated, c, opts);

    const auto& truth_spec =
        inst.agents[static_cast<std::size_t>(agent) - 1].valuation;
    const Bundle& got = outcome.allocation.bundles[static_cast<std::size_t>(
        agent)];
    int true_util = value(truth_spec, got, qc);
    int honest_util = truthful.utilities[static_cast<std::size_t>(agent) - 1];

    auto flag = [&](const std::string& property, std::string detail) {
      FuzzViolation v;
      v.trial = t;
      v.manipulation = man;
      v.property = property;
      v.detail = std::move(detail);
      v.truthful_utility = honest_util;
      v.manipulated_utility = true_util;
      report.violations.push_back(std::move(v));
    };

    if (true_util > honest_util)
      flag("utility", "true utility improved by misreporting");
    if (man.kind == "f_T") {
      const Bundle& t_set = std::get<CappedRelevant>(man.reported.family)
                                .relevant;
      const Bundle& honest_bundle =
          truthful.allocation.bundles[static_cast<std::size_t>(agent)];
      if ((t_set & ~honest_bundle).none() && got != t_set)
        flag("faithfulness",
             "report f_T with T inside the truthful bundle did not return T");
    }
    if (man.kind == "dominating" &&
        got.count() < truthful.allocation
                          .bundles[static_cast<std::size_t>(agent)]
                          .count())
      flag("monotonicity", "dominating report shrank the bundle");
  }
  return report;
}

}  // namespace ys
