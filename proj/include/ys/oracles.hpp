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
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ys/engine.hpp"

namespace ys {

// Desk-scale ground truth by exhaustive enumeration, plus fairness checkers
// and the strategyproofness fuzzer.

constexpr long long kEnumerationLimit = 1000000;  // assignments / partitions

struct EnumerationLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every achievable utility vector, by assigning each good to an agent or the
// pool. Refuses when (n+1)^m exceeds the limit.
std::set<UtilityVector> enumerate_utilities(const Instance& inst);

struct OptResult {
  UtilityVector best_utilities;
  int best_count = 0;          // distinct utility vectors tied at the optimum
  std::vector<int> witness;    // per-good owner, 0 = pool
};

// The criterion-maximal utility vector; among maximizers, the
// lexicographically dominating one.
OptResult brute_force_optimum(const Instance& inst, const Criterion& c);

// Exact maximin share of agent i (1-based) over all n-way partitions.
int compute_mms(const Instance& inst, int agent);

std::optional<std::string> check_mms_satisfaction(
    const UtilityVector& utilities, const std::vector<int>& mms);

// Envy-freeness up to any good: v_i(X_i) >= v_i(X_j - g) for all g in X_j.
std::optional<std::string> check_efx(const Instance& inst,
                                     const Allocation& x);

// Weighted envy-freeness up to one good: for all i != j with X_j nonempty,
// some g in X_j has v_i(X_i)/w_i >= v_i(X_j - g)/w_j.
std::optional<std::string> check_wef1(const Instance& inst,
                                      const Allocation& x);

struct Manipulation {
  int agent = 0;
  std::string kind;  // f_T | cap_reduction | relevant_set_edit |
                     // random_table | dominating
  ValuationSpec reported;
};

struct FuzzViolation {
  int trial = 0;
  Manipulation manipulation;
  std::string property;  // utility | faithfulness | monotonicity
  std::string detail;
  int truthful_utility = 0;
  int manipulated_utility = 0;
};

struct FuzzReport {
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<FuzzViolation> violations;
};

// Draws manipulations, runs the mechanism on truthful vs. manipulated
// profiles, and checks: true utility never improves; a report f_T with
// T inside the truthful bundle yields exactly T; a pointwise-dominating
// report never shrinks the bundle.
FuzzReport fuzz_strategyproofness(const Instance& inst, const Criterion& c,
                                  int trials, std::uint64_t seed,
                                  const RunOptions& opts = {});

}  // namespace ys
