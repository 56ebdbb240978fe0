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

#include "ys/generate.hpp"

#include <algorithm>
#include <numeric>

#include "ys/oracles.hpp"

namespace ys {

namespace {

ValuationSpec random_valuation(std::mt19937_64& rng, int m) {
  ValuationSpec spec;
  spec.m = m;
  switch (rng() % 5) {
    case 0: {
      CappedRelevant cr;
      cr.relevant = Bundle(static_cast<std::size_t>(m));
      for (int g = 0; g < m; ++g)
        if (rng() % 4 != 0) cr.relevant.set(static_cast<std::size_t>(g));
      cr.cap = static_cast<int>(rng() % (m + 1));
      spec.family = std::move(cr);
      break;
    }
    case 1: {
      PartitionFamily pf;
      int k = 1 + static_cast<int>(rng() % 3);
      pf.categories.assign(static_cast<std::size_t>(k),
                           Bundle(static_cast<std::size_t>(m)));
      for (int g = 0; g < m; ++g) {
        std::size_t cat = rng() % (k + 1);  // k means "in no category"
        if (cat < pf.categories.size())
          pf.categories[cat].set(static_cast<std::size_t>(g));
      }
      for (int j = 0; j < k; ++j)
        pf.caps.push_back(static_cast<int>(rng() % (m + 1)));
      spec.family = std::move(pf);
      break;
    }
    case 2: {
      Transversal tv;
      tv.slots = 1 + static_cast<int>(rng() % std::max(m, 1));
      for (int g = 0; g < m; ++g)
        for (int s = 0; s < tv.slots; ++s)
          if (rng() % 3 == 0) tv.edges.emplace_back(g, s);
      spec.family = std::move(tv);
      break;
    }
    case 3: {
      Graphic gr;
      gr.vertices = 2 + static_cast<int>(rng() % 4);
      for (int g = 0; g < m; ++g) {
        int a = static_cast<int>(rng() % gr.vertices);
        int b = static_cast<int>(rng() % gr.vertices);
        gr.edge_of.emplace_back(a, b);  // self-loops allowed: rank 0 edges
      }
      spec.family = std::move(gr);
      break;
    }
    default: {
      // A valid explicit table: tabulate a random capped-relevant valuation.
      CappedRelevant cr;
      cr.relevant = Bundle(static_cast<std::size_t>(m));
      for (int g = 0; g < m; ++g)
        if (rng() & 1) cr.relevant.set(static_cast<std::size_t>(g));
      cr.cap = static_cast<int>(rng() % (m + 1));
      ValuationSpec base;
      base.m = m;
      base.family = cr;
      ExplicitTable table;
      table.values.resize(std::size_t{1} << m);
      QueryCounter qc;
      for (std::size_t mask = 0; mask < table.values.size(); ++mask) {
        Bundle s(static_cast<std::size_t>(m));
        for (int g = 0; g < m; ++g)
          if (mask >> g & 1) s.set(static_cast<std::size_t>(g));
        table.values[mask] = value(base, s, qc);
      }
      spec.family = std::move(table);
      break;
    }
  }
  return spec;
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, int max_agents,
                         int max_goods) {
  static const Rational kWeights[] = {Rational(1, 2), 1, 2, 3, 8};
  Instance inst;
  int n = 2 + static_cast<int>(rng() % std::max(max_agents - 1, 1));
  n = std::min(n, max_agents);
  inst.m = 1 + static_cast<int>(rng() % max_goods);

  std::vector<int> priority(static_cast<std::size_t>(n));
  std::iota(priority.begin(), priority.end(), 1);
  std::shuffle(priority.begin(), priority.end(), rng);

  for (int i = 0; i < n; ++i) {
    AgentSpec a;
    a.valuation = random_valuation(rng, inst.m);
    a.weight = kWeights[rng() % 5];
    a.priority = priority[static_cast<std::size_t>(i)];
    a.fair_share = Rational(static_cast<long long>(rng() % 3),
                            1 + static_cast<long long>(rng() % 2));
    inst.agents.push_back(std::move(a));
  }
  return inst;
}

Criterion random_criterion(std::mt19937_64& rng, const Instance& inst) {
  static const CriterionKind kKinds[] = {
      CriterionKind::kLorenz,    CriterionKind::kLeximin,
      CriterionKind::kFairShare, CriterionKind::kNash,
      CriterionKind::kPMean,     CriterionKind::kHarmonic};
  static const Rational kPs[] = {1, Rational(1, 2), -1, -2};
  CriterionKind kind = kKinds[rng() % 6];
  Rational p = kind == CriterionKind::kPMean ? kPs[rng() % 4] : Rational(0);
  return resolve_criterion(inst, kind, p);
}

Instance bench_instance(int m, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.m = m;
  for (int i = 0; i < n; ++i) {
    PartitionFamily pf;
    int k = std::max(1, m / 4);
    pf.categories.assign(static_cast<std::size_t>(k),
                         Bundle(static_cast<std::size_t>(m)));
    for (int g = 0; g < m; ++g)
      pf.categories[rng() % k].set(static_cast<std::size_t>(g));
    for (int j = 0; j < k; ++j)
      pf.caps.push_back(1 + static_cast<int>(rng() % 4));
    AgentSpec a;
    a.valuation.m = m;
    a.valuation.family = std::move(pf);
    a.weight = 1;
    a.priority = i + 1;
    inst.agents.push_back(std::move(a));
  }
  return inst;
}

}  // namespace ys
