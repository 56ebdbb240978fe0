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

#pragma once

#include <optional>
#include <vector>

#include "ys/allocation.hpp"

namespace ys {

// The exchange graph handled implicitly: binary-search membership probes and
// BFS shortest paths without constructing the graph. An explicit-graph
// reference implementation is kept alongside for testing.

constexpr int kDistUnreachable = -1;
constexpr int kPrevNone = -2;
constexpr int kPrevSource = -1;

struct DistanceMap {
  std::vector<int> dist;  // per good; kDistUnreachable when not reached
  std::vector<int> prev;  // per good; kPrevSource / kPrevNone / a good id
};

// Binary-search probe: some g in b with marginal 1 for s, or nullopt.
// Deterministic: the candidate set is halved by index order, descending into
// the lower half whenever it contains a desired good.
std::optional<int> find_desired(const ValuationSpec& spec, const Bundle& s,
                                const Bundle& b, QueryCounter& qc);

// BFS from the virtual source (edges source -> F_i(X)) over the implicit
// exchange graph. Requires a non-redundant allocation.
DistanceMap get_distances(const Allocation& x, int agent,
                          const std::vector<ValuationSpec>& specs,
                          QueryCounter& qc);

// Shortest path (g_1, ..., g_t) from F_i(X) to the pool: minimal distance,
// ties broken by the smallest pool good index. nullopt when no pool good is
// reachable.
std::optional<std::vector<int>> shortest_path_to_pool(
    const Allocation& x, int agent, const std::vector<ValuationSpec>& specs,
    QueryCounter& qc);

std::optional<std::vector<int>> path_from_distances(const Allocation& x,
                                                    const DistanceMap& d);

// Path augmentation: agent takes g_1, each good on the path shifts one step
// back, g_t leaves the pool. Preserves non-redundancy (mutates in place).
void augment(Allocation& x, int agent, const std::vector<int>& path);

// Reference oracle: the full m x m adjacency matrix, O(m^2) queries.
std::vector<std::vector<bool>> build_explicit_graph(
    const Allocation& x, const std::vector<ValuationSpec>& specs,
    QueryCounter& qc);

// Reference oracle: BFS over build_explicit_graph from the same virtual
// source. Distances must match get_distances exactly.
std::vector<int> explicit_graph_distances(
    const Allocation& x, int agent, const std::vector<ValuationSpec>& specs,
    QueryCounter& qc);

// Like shortest_path_to_pool, but driven by the explicit graph. Same path
// selection rule; far more queries. Used as the naive engine variant.
std::optional<std::vector<int>> explicit_shortest_path_to_pool(
    const Allocation& x, int agent, const std::vector<ValuationSpec>& specs,
    QueryCounter& qc);

}  // namespace ys
