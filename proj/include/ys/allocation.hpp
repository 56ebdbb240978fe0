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

#include <vector>

#include "ys/bundle.hpp"
#include "ys/valuation.hpp"

namespace ys {

// A partition of the goods into n agent bundles plus the pool (index 0),
// together with the good -> owner inverse map.
struct Allocation {
  std::vector<Bundle> bundles;  // size n + 1; bundles[0] is the pool
  std::vector<int> owner;       // size m; values in [0, n]

  static Allocation initial(int m, int n);

  int num_agents() const { return static_cast<int>(bundles.size()) - 1; }
  int num_goods() const { return static_cast<int>(owner.size()); }
  const Bundle& pool() const { return bundles[0]; }

  // Partition + inverse-map consistency.
  bool consistent() const;

  // v_i(X_i) == |X_i| for every agent (the pool is trivially non-redundant).
  bool non_redundant(const std::vector<ValuationSpec>& specs,
                     QueryCounter& qc) const;
};

}  // namespace ys
