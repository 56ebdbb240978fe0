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

#include "ys/engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace ys {

namespace {

std::vector<ValuationSpec> specs_of(const Instance& inst) {
  std::vector<ValuationSpec> specs;
  specs.reserve(inst.agents.size());
  for (const auto& a : inst.agents) specs.push_back(a.valuation);
  return specs;
}

std::vector<Rational> weights_of(const Instance& inst) {
  std::vector<Rational> w;
  w.reserve(inst.agents.size());
  for (const auto& a : inst.agents) w.push_back(a.weight);
  return w;
}

int select_with_options(const std::vector<int>& active, const UtilityVector& u,
                        const Criterion& c, const std::vector<Rational>& w,
                        std::mt19937_64* tie_rng) {
  int best = select_agent(active, u, c, w);
  if (tie_rng == nullptr) return best;
  // Deliberately broken tie handling: a pseudo-random maximizer instead of
  // the least index. Exists only to demonstrate fuzzer sensitivity.
  Gain best_gain = gain(c, u, w, best);
  std::vector<int> maximizers;
  for (int a : active)
    if (compare(gain(c, u, w, a), best_gain) == 0) maximizers.push_back(a);
  return maximizers[(*tie_rng)() % maximizers.size()];
}

std::uint64_t spec_fingerprint(const std::vector<ValuationSpec>& specs) {
  std::string blob;
  for (const auto& spec : specs) {
    blob += std::to_string(spec.m) + "#" +
            std::to_string(spec.family.index()) + ":";
    std::visit(
        [&](const auto& fam) {
          using T = std::decay_t<decltype(fam)>;
          if constexpr (std::is_same_v<T, CappedRelevant>) {
            std::string bits;
            boost::to_string(fam.relevant, bits);
            blob += bits + "/" + std::to_string(fam.cap);
          } else if constexpr (std::is_same_v<T, PartitionFamily>) {
            for (std::size_t k = 0; k < fam.categories.size(); ++k) {
              std::string bits;
              boost::to_string(fam.categories[k], bits);
              blob += bits + "/" + std::to_string(fam.caps[k]) + ";";
            }
          } else if constexpr (std::is_same_v<T, Transversal>) {
            blob += std::to_string(fam.slots);
            for (const auto& [g, s] : fam.edges)
              blob += "," + std::to_string(g) + "-" + std::to_string(s);
          } else if constexpr (std::is_same_v<T, Graphic>) {
            blob += std::to_string(fam.vertices);
            for (const auto& [a, b] : fam.edge_of)
              blob += "," + std::to_string(a) + "-" + std::to_string(b);
          } else {
            for (int v : fam.values) blob += std::to_string(v) + ",";
          }
        },
        spec.family);
    blob += "|";
  }
  return std::hash<std::string>{}(blob);
}

}  // namespace

std::vector<std::string> validate(const Instance& inst, const Criterion& c) {
  std::vector<std::string> problems;
  const int n = static_cast<int>(inst.agents.size());
  if (inst.m < 0) problems.push_back("goods count is negative");
  if (n == 0) problems.push_back("instance has no agents");
  for (int i = 0; i < n; ++i) {
    const auto& a = inst.agents[static_cast<std::size_t>(i)];
    std::string who = "agent " + std::to_string(i + 1) + ": ";
    if (a.valuation.m != inst.m)
      problems.push_back(who + "valuation ground set size differs from m");
    for (const auto& p : validate_spec(a.valuation))
      problems.push_back(who + p);
    if (a.weight <= 0) problems.push_back(who + "weight must be positive");
    if (a.fair_share && *a.fair_share < 0)
      problems.push_back(who + "fair share must be nonnegative");
  }
  if (c.kind == CriterionKind::kLorenz) {
    std::vector<int> pi = c.priority;
    if (pi.empty())
      for (const auto& a : inst.agents)
        if (a.priority) pi.push_back(*a.priority);
    if (!pi.empty()) {
      std::vector<int> sorted = pi;
      std::sort(sorted.begin(), sorted.end());
      bool perm = static_cast<int>(sorted.size()) == n;
      for (int i = 0; perm && i < n; ++i) perm = sorted[i] == i + 1;
      if (!perm)
        problems.push_back("lorenz priorities must form a permutation of 1..n");
    }
  }
  if (c.kind == CriterionKind::kFairShare) {
    bool have = c.shares.size() == inst.agents.size();
    if (!have) {
      have = true;
      for (const auto& a : inst.agents) have = have && a.fair_share.has_value();
    }
    if (!have)
      problems.push_back("fair_share criterion needs a share for every agent");
  }
  if (c.kind == CriterionKind::kPMean && (c.p == 0 || c.p > 1))
    problems.push_back("pmean requires p <= 1 and p != 0");
  return problems;
}

Criterion resolve_criterion(const Instance& inst, CriterionKind kind,
                            const Rational& p) {
  Criterion c;
  c.kind = kind;
  c.p = p;
  const std::size_t n = inst.agents.size();
  if (kind == CriterionKind::kLorenz) {
    bool any = false;
    for (const auto& a : inst.agents) any = any || a.priority.has_value();
    if (any) {
      for (const auto& a : inst.agents) {
        if (!a.priority)
          throw std::invalid_argument("partial priority assignment");
        c.priority.push_back(*a.priority);
      }
    } else {
      c.priority.resize(n);
      std::iota(c.priority.begin(), c.priority.end(), 1);
    }
  }
  if (kind == CriterionKind::kFairShare) {
    for (const auto& a : inst.agents) {
      if (!a.fair_share)
        throw std::invalid_argument(
            "fair_share criterion needs a share for every agent");
      c.shares.push_back(*a.fair_share);
    }
  }
  return c;
}

RunResult run(const Instance& inst, const Criterion& c,
              const RunOptions& opts) {
  {
    auto problems = validate(inst, c);
    if (!problems.empty()) {
      std::string msg = "invalid instance:";
      for (const auto& p : problems) msg += "\n  " + p;
      throw std::invalid_argument(msg);
    }
  }
  const int n = static_cast<int>(inst.agents.size());
  const auto specs = specs_of(inst);
  const auto weights = weights_of(inst);

  RunResult r;
  r.allocation = Allocation::initial(inst.m, n);
  r.utilities.assign(static_cast<std::size_t>(n), 0);

  QueryCounter qc;
  std::vector<int> active(static_cast<std::size_t>(n));
  std::iota(active.begin(), active.end(), 1);

  std::optional<std::mt19937_64> tie_rng;
  if (opts.tie_break == RunOptions::TieBreak::kHashRandom)
    tie_rng.emplace(spec_fingerprint(specs));

  int iteration = 0;
  while (!active.empty()) {
    ++iteration;
    if (iteration > inst.m + n)
      throw std::logic_error("iteration bound m + n exceeded");

    int i = select_with_options(active, r.utilities, c, weights,
                                tie_rng ? &*tie_rng : nullptr);
    TraceStep step;
    step.iteration = iteration;
    step.active_size = static_cast<int>(active.size());
    step.agent = i;
    step.gain = render_gain(gain(c, r.utilities, weights, i));

    auto path =
        opts.path_mode == RunOptions::PathMode::kBinarySearch
            ? shortest_path_to_pool(r.allocation, i, specs, qc)
            : explicit_shortest_path_to_pool(r.allocation, i, specs, qc);
    if (path) {
      augment(r.allocation, i, *path);
      ++r.utilities[static_cast<std::size_t>(i) - 1];
      step.augmented = true;
      step.path = *path;
    } else {
      active.erase(std::find(active.begin(), active.end(), i));
    }
    r.trace.push_back(std::move(step));

    if (opts.query_limit > 0 && qc.count > opts.query_limit)
      throw QueryLimitExceeded("valuation query limit exceeded");
    if (opts.verify_invariants) {
      QueryCounter side;  // invariant checks stay off the measured budget
      if (!r.allocation.consistent() ||
          !r.allocation.non_redundant(specs, side))
        throw std::logic_error("allocation invariant violated mid-run");
    }
  }
  r.usw = std::accumulate(r.utilities.begin(), r.utilities.end(), 0);
  r.query_count = qc.count;
  return r;
}

RunResult run_mechanism(const Instance& inst, const Criterion& c,
                        const RunOptions& opts) {
  Instance screened = inst;
  for (auto& a : screened.agents) a.valuation = zero_out_if_invalid(a.valuation);
  return run(screened, c, opts);
}

std::optional<std::string> replay_check(const RunResult& result,
                                        const Instance& inst,
                                        const Criterion& c) {
  const int n = static_cast<int>(inst.agents.size());
  const auto specs = specs_of(inst);
  const auto weights = weights_of(inst);
  QueryCounter qc;

  Allocation x = Allocation::initial(inst.m, n);
  UtilityVector u(static_cast<std::size_t>(n), 0);
  std::vector<int> active(static_cast<std::size_t>(n));
  std::iota(active.begin(), active.end(), 1);

  for (const auto& step : result.trace) {
    std::string where = "iteration " + std::to_string(step.iteration) + ": ";
    if (active.empty()) return where + "trace continues past an empty U";
    if (step.active_size != static_cast<int>(active.size()))
      return where + "active set size mismatch";
    if (std::find(active.begin(), active.end(), step.agent) == active.end())
      return where + "chosen agent is not active";
    Gain chosen = gain(c, u, weights, step.agent);
    for (int a : active)
      if (compare(gain(c, u, weights, a), chosen) > 0)
        return where + "chosen agent does not maximize the gain";
    if (step.augmented) {
      const auto& p = step.path;
      if (p.empty()) return where + "augmented step with an empty path";
      if (x.owner[static_cast<std::size_t>(p.back())] != 0)
        return where + "path does not end in the pool";
      if (marginal(specs[static_cast<std::size_t>(step.agent) - 1],
                   x.bundles[step.agent], p.front(), qc) != 1)
        return where + "first path good gives no marginal value";
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        int owner = x.owner[static_cast<std::size_t>(p[k])];
        Bundle without = x.bundles[owner];
        without.reset(static_cast<std::size_t>(p[k]));
        if (marginal(owner == 0 ? pool_valuation(inst.m)
                                : specs[static_cast<std::size_t>(owner) - 1],
                     without, p[k + 1], qc) != 1)
          return where + "path step " + std::to_string(k) +
                 " is not an exchange edge";
      }
      augment(x, step.agent, p);
      ++u[static_cast<std::size_t>(step.agent) - 1];
    } else {
      if (shortest_path_to_pool(x, step.agent, specs, qc))
        return where + "agent retired although a path exists";
      active.erase(std::find(active.begin(), active.end(), step.agent));
    }
    if (!x.consistent() || !x.non_redundant(specs, qc))
      return where + "allocation invariant violated";
  }
  if (!active.empty()) return "trace ends with active agents remaining";
  if (u != result.utilities) return "replayed utilities differ from result";
  for (int i = 0; i <= n; ++i)
    if (x.bundles[i] != result.allocation.bundles[i])
      return "replayed bundles differ from result";
  return std::nullopt;
}

}  // namespace ys
