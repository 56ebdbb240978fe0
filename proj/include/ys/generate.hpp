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

#include <cstdint>
#include <random>

#include "ys/engine.hpp"

namespace ys {

// The shared random small-instance corpus: mixed valuation families,
// weights from {1/2, 1, 2, 3, 8}, random permutation priorities, random
// fair shares. Deterministic per seed.
Instance random_instance(std::mt19937_64& rng, int max_agents = 4,
                         int max_goods = 6);

// A random criterion for the corpus; p drawn from {1, 1/2, -1, -2}.
// fair_share is produced only when the instance carries shares.
Criterion random_criterion(std::mt19937_64& rng, const Instance& inst);

// Partition-family benchmark instance of a given size: categories of a few
// goods each, caps letting most goods be taken, weights all 1.
Instance bench_instance(int m, int n, std::uint64_t seed);

}  // namespace ys
