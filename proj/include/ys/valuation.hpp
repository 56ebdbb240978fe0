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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ys/bundle.hpp"

namespace ys {

// Matroid rank valuations as declarative, serializable families. Every family
// except ExplicitTable is a matroid rank function by construction.

// v(S) = min(|S ∩ relevant|, cap)
struct CappedRelevant {
  Bundle relevant;
  int cap = 0;
};

// v(S) = sum over categories k of min(|S ∩ C_k|, cap_k); categories disjoint.
struct PartitionFamily {
  std::vector<Bundle> categories;
  std::vector<int> caps;
};

// v(S) = size of a maximum bipartite matching between S and the slots.
struct Transversal {
  int slots = 0;
  std::vector<std::pair<int, int>> edges;  // (good, slot)
};

// v(S) = graphic matroid rank of the edge set S.
struct Graphic {
  int vertices = 0;
  std::vector<std::pair<int, int>> edge_of;  // per good
};

// Arbitrary table over all 2^m bundles; must pass check_mrf before use.
struct ExplicitTable {
  std::vector<int> values;  // indexed by bundle bitmask, size 2^m
};

struct ValuationSpec {
  int m = 0;
  std::variant<CappedRelevant, PartitionFamily, Transversal, Graphic,
               ExplicitTable>
      family;
};

// Counts value() evaluations. marginal() issues two value() calls and is
// counted as such.
struct QueryCounter {
  long long count = 0;
  void reset() { count = 0; }
};

constexpr int kDefaultMrfCheckLimit = 12;

int value(const ValuationSpec& spec, const Bundle& s, QueryCounter& qc);

// Requires g not in s.
int marginal(const ValuationSpec& spec, const Bundle& s, int g,
             QueryCounter& qc);

struct MrfViolation {
  enum class Kind { EmptySetNonzero, MarginalNotBinary, NotSubmodular };
  Kind kind;
  Bundle small_set;  // S in the violated axiom
  Bundle large_set;  // T (submodularity only)
  int good = -1;
  std::string describe() const;
};

// Exhaustive check of the three MRF axioms. Throws std::invalid_argument if
// the ground set exceeds the limit; never samples.
std::optional<MrfViolation> check_mrf(const ValuationSpec& spec,
                                      int limit = kDefaultMrfCheckLimit);

// Mechanism step 1: a non-MRF report is replaced by the all-zero valuation.
ValuationSpec zero_out_if_invalid(const ValuationSpec& spec,
                                  int limit = kDefaultMrfCheckLimit);

// f_T(S) = |S ∩ T|
ValuationSpec indicator_valuation(int m, const Bundle& t);

// The pool's valuation: v0(S) = |S|.
ValuationSpec pool_valuation(int m);

// Structural validation (good ids in range, disjoint categories, cap signs,
// table size). Returns problems; empty means well formed.
std::vector<std::string> validate_spec(const ValuationSpec& spec);

}  // namespace ys
