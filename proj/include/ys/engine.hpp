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
#include <stdexcept>
#include <string>
#include <vector>

#include "ys/allocation.hpp"
#include "ys/criteria.hpp"
#include "ys/exchange.hpp"
#include "ys/valuation.hpp"

namespace ys {

struct AgentSpec {
  ValuationSpec valuation;
  Rational weight = 1;
  std::optional<int> priority;        // rank for the lorenz criterion
  std::optional<Rational> fair_share; // share for the fair_share criterion
};

struct Instance {
  int m = 0;
  std::vector<AgentSpec> agents;
};

// Problems found in the instance / criterion combination; empty means valid.
std::vector<std::string> validate(const Instance& inst, const Criterion& c);

// Fills criterion defaults from the instance: lorenz priority from the
// per-agent ranks (identity if absent), fair_share shares from the per-agent
// shares. Throws std::invalid_argument when a required field is missing.
Criterion resolve_criterion(const Instance& inst, CriterionKind kind,
                            const Rational& p = 0);

struct TraceStep {
  int iteration = 0;
  int active_size = 0;
  int agent = 0;
  std::string gain;        // rendered; never used for comparison
  bool augmented = false;
  std::vector<int> path;   // empty when the agent retires
};

struct RunResult {
  Allocation allocation;
  UtilityVector utilities;
  int usw = 0;
  std::vector<TraceStep> trace;
  long long query_count = 0;
};

struct QueryLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  enum class PathMode {
    kBinarySearch,   // implicit exchange graph, binary-search probing
    kExplicitGraph,  // rebuild the full adjacency each iteration (reference)
  };
  enum class TieBreak {
    kLeastIndex,  // the contract
    // Broken on purpose: ties resolved pseudo-randomly, seeded from a hash
    // of the reported valuations. Demonstrates fuzzer sensitivity.
    kHashRandom,
  };
  PathMode path_mode = PathMode::kBinarySearch;
  TieBreak tie_break = TieBreak::kLeastIndex;
  bool verify_invariants = false;  // re-check non-redundancy each iteration
  long long query_limit = 0;       // 0 = unlimited; else QueryLimitExceeded
};

RunResult run(const Instance& inst, const Criterion& c,
              const RunOptions& opts = {});

// The two-step mechanism: replace every non-MRF report with the all-zero
// valuation, then run. This is the strategyproof surface.
RunResult run_mechanism(const Instance& inst, const Criterion& c,
                        const RunOptions& opts = {});

// Re-executes a trace against the instance, re-verifying agent choice, path
// validity, and non-redundancy at each step. Returns the first divergence.
std::optional<std::string> replay_check(const RunResult& result,
                                        const Instance& inst,
                                        const Criterion& c);

}  // namespace ys
