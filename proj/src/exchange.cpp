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

#include "ys/exchange.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace ys {

Allocation Allocation::initial(int m, int n) {
  Allocation x;
  x.bundles.assign(static_cast<std::size_t>(n) + 1,
                   Bundle(static_cast<std::size_t>(m)));
  x.bundles[0].set();
  x.owner.assign(static_cast<std::size_t>(m), 0);
  return x;
}

bool Allocation::consistent() const {
  Bundle seen(static_cast<std::size_t>(num_goods()));
  for (int k = 0; k <= num_agents(); ++k) {
    if ((seen & bundles[k]).any()) return false;
    seen |= bundles[k];
  }
  if (!seen.all() && num_goods() > 0) return false;
  for (int g = 0; g < num_goods(); ++g)
    if (owner[g] < 0 || owner[g] > num_agents() ||
        !bundles[owner[g]].test(static_cast<std::size_t>(g)))
      return false;
  return true;
}

bool Allocation::non_redundant(const std::vector<ValuationSpec>& specs,
                               QueryCounter& qc) const {
  for (int i = 1; i <= num_agents(); ++i)
    if (value(specs[i - 1], bundles[i], qc) !=
        static_cast<int>(bundles[i].count()))
      return false;
  return true;
}

std::optional<int> find_desired(const ValuationSpec& spec, const Bundle& s,
                                const Bundle& b, QueryCounter& qc) {
  if (b.none()) return std::nullopt;
  int base = value(spec, s, qc);
  if (value(spec, s | b, qc) == base) return std::nullopt;
  Bundle cur = b;
  while (cur.count() > 1) {
    // Lower half: the first ceil(|B|/2) goods in index order.
    std::size_t take = (cur.count() + 1) / 2;
    Bundle lower(cur.size());
    auto g = cur.find_first();
    for (std::size_t k = 0; k < take; ++k, g = cur.find_next(g)) lower.set(g);
    if (value(spec, s | lower, qc) > base)
      cur = lower;
    else
      cur &= ~lower;
  }
  return static_cast<int>(cur.find_first());
}

DistanceMap get_distances(const Allocation& x, int agent,
                          const std::vector<ValuationSpec>& specs,
                          QueryCounter& qc) {
  const int m = x.num_goods();
  DistanceMap d;
  d.dist.assign(static_cast<std::size_t>(m), kDistUnreachable);
  d.prev.assign(static_cast<std::size_t>(m), kPrevNone);

  const ValuationSpec pool = pool_valuation(m);
  auto spec_of = [&](int k) -> const ValuationSpec& {
    return k == 0 ? pool : specs[k - 1];
  };

  Bundle candidates(static_cast<std::size_t>(m));
  candidates.set();
  std::deque<int> frontier;  // goods; the source is handled first

  // Source expansion: every good with marginal 1 for the chosen agent.
  while (auto b = find_desired(spec_of(agent), x.bundles[agent], candidates,
                               qc)) {
    d.dist[*b] = 1;
    d.prev[*b] = kPrevSource;
    frontier.push_back(*b);
    candidates.reset(static_cast<std::size_t>(*b));
  }

  while (!frontier.empty()) {
    int a = frontier.front();
    frontier.pop_front();
    int j = x.owner[a];
    Bundle without = x.bundles[j];
    without.reset(static_cast<std::size_t>(a));
    while (auto b = find_desired(spec_of(j), without, candidates, qc)) {
      d.dist[*b] = d.dist[a] + 1;
      d.prev[*b] = a;
      frontier.push_back(*b);
      candidates.reset(static_cast<std::size_t>(*b));
    }
  }
  return d;
}

std::optional<std::vector<int>> path_from_distances(const Allocation& x,
                                                    const DistanceMap& d) {
  int target = -1;
  for (auto g = x.pool().find_first(); g != Bundle::npos;
       g = x.pool().find_next(g)) {
    int gi = static_cast<int>(g);
    if (d.dist[gi] == kDistUnreachable) continue;
    if (target == -1 || d.dist[gi] < d.dist[target]) target = gi;
  }
  if (target == -1) return std::nullopt;
  std::vector<int> path;
  for (int g = target; g != kPrevSource; g = d.prev[g]) path.push_back(g);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::vector<int>> shortest_path_to_pool(
    const Allocation& x, int agent, const std::vector<ValuationSpec>& specs,
    QueryCounter& qc) {
  return path_from_distances(x, get_distances(x, agent, specs, qc));
}

void augment(Allocation& x, int agent, const std::vector<int>& path) {
  if (path.empty()) throw std::logic_error("augment with an empty path");
  if (x.owner[path.back()] != 0)
    throw std::logic_error("augment path must end in the pool");
  // Shift backwards: the owner of g_j takes g_{j+1}; the agent takes g_1.
  std::vector<int> owners(path.size());
  for (std::size_t j = 0; j < path.size(); ++j) owners[j] = x.owner[path[j]];
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    x.bundles[owners[j]].reset(static_cast<std::size_t>(path[j]));
    x.bundles[owners[j]].set(static_cast<std::size_t>(path[j + 1]));
    x.owner[path[j + 1]] = owners[j];
  }
  x.bundles[0].reset(static_cast<std::size_t>(path.back()));
  x.bundles[agent].set(static_cast<std::size_t>(path[0]));
  x.owner[path[0]] = agent;
}

std::vector<std::vector<bool>> build_explicit_graph(
    const Allocation& x, const std::vector<ValuationSpec>& specs,
    QueryCounter& qc) {
  const int m = x.num_goods();
  const ValuationSpec pool = pool_valuation(m);
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (int g = 0; g < m; ++g) {
    int j = x.owner[g];
    const ValuationSpec& spec = (j == 0) ? pool : specs[j - 1];
    int keep = static_cast<int>(x.bundles[j].count());
    Bundle without = x.bundles[j];
    without.reset(static_cast<std::size_t>(g));
    for (int h = 0; h < m; ++h) {
      if (h == g) continue;
      Bundle swapped = without;
      swapped.set(static_cast<std::size_t>(h));
      adj[g][h] = (value(spec, swapped, qc) == keep);
    }
  }
  return adj;
}

std::vector<int> explicit_graph_distances(
    const Allocation& x, int agent, const std::vector<ValuationSpec>& specs,
    QueryCounter& qc) {
  const int m = x.num_goods();
  auto adj = build_explicit_graph(x, specs, qc);
  const ValuationSpec pool = pool_valuation(m);
  const ValuationSpec& spec =
      (agent == 0) ? pool : specs[static_cast<std::size_t>(agent) - 1];
  std::vector<int> dist(m, kDistUnreachable);
  std::deque<int> q;
  for (int g = 0; g < m; ++g)
    if (!x.bundles[agent].test(static_cast<std::size_t>(g)) &&
        marginal(spec, x.bundles[agent], g, qc) == 1) {
      dist[g] = 1;
      q.push_back(g);
    }
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (int b = 0; b < m; ++b)
      if (adj[a][b] && dist[b] == kDistUnreachable) {
        dist[b] = dist[a] + 1;
        q.push_back(b);
      }
  }
  return dist;
}

std::optional<std::vector<int>> explicit_shortest_path_to_pool(
    const Allocation& x, int agent, const std::vector<ValuationSpec>& specs,
    QueryCounter& qc) {
  const int m = x.num_goods();
  auto adj = build_explicit_graph(x, specs, qc);
  DistanceMap d;
  d.dist.assign(static_cast<std::size_t>(m), kDistUnreachable);
  d.prev.assign(static_cast<std::size_t>(m), kPrevNone);
  std::deque<int> q;
  for (int g = 0; g < m; ++g)
    if (!x.bundles[agent].test(static_cast<std::size_t>(g)) &&
        marginal(specs[static_cast<std::size_t>(agent) - 1], x.bundles[agent],
                 g, qc) == 1) {
      d.dist[g] = 1;
      d.prev[g] = kPrevSource;
      q.push_back(g);
    }
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (int b = 0; b < m; ++b)
      if (adj[a][b] && d.dist[b] == kDistUnreachable) {
        d.dist[b] = d.dist[a] + 1;
        d.prev[b] = a;
        q.push_back(b);
      }
  }
  return path_from_distances(x, d);
}

}  // namespace ys
