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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ys/rational.hpp"

namespace ys {

enum class CriterionKind {
  kLorenz,     // prioritized Lorenz dominance
  kLeximin,    // weighted leximin
  kFairShare,  // per-agent fair-share fractions
  kNash,       // max weighted Nash welfare
  kPMean,      // max weighted p-mean welfare, p <= 1, p != 0
  kHarmonic,   // weighted harmonic welfare
};

std::string criterion_name(CriterionKind kind);
std::optional<CriterionKind> criterion_from_name(const std::string& name);

struct Criterion {
  CriterionKind kind = CriterionKind::kLeximin;
  Rational p = 0;                  // pmean only
  std::vector<Rational> shares;    // fair_share only, one per agent
  std::vector<int> priority;       // lorenz only, a permutation of 1..n
};

// The per-agent selection score. Sentinel classes stand in for the "large M"
// bounds: they are symbolic, never numeric, and compare outside every finite
// gain of the same criterion.
struct Gain {
  enum class Class { kBottom, kFinite, kTop };
  CriterionKind kind = CriterionKind::kLeximin;
  Class cls = Class::kFinite;
  std::vector<Rational> lex;  // lorenz / leximin / fair_share / harmonic
  int utility = 0;            // nash / pmean
  Rational weight = 0;        // nash / pmean (also the pmean top payload)
  Rational p = 0;             // pmean
};

using UtilityVector = std::vector<int>;

Gain gain(const Criterion& c, const UtilityVector& u,
          const std::vector<Rational>& weights, int agent);

// Exact total order on gains of one criterion; -1 / 0 / +1.
int compare(const Gain& a, const Gain& b);

// Renders the exact payload with a decimal approximation; display only.
std::string render_gain(const Gain& g);

// Argmax of gain over the active set; ties broken by least index. Agents are
// 1-based; active must be nonempty and sorted ascending.
int select_agent(const std::vector<int>& active, const UtilityVector& u,
                 const Criterion& c, const std::vector<Rational>& weights);

// The justice criterion itself: an exact total order on utility vectors.
// -1 / 0 / +1 for u1 worse / equivalent / better than u2.
int psi_compare(const Criterion& c, const UtilityVector& u1,
                const UtilityVector& u2, const std::vector<Rational>& weights);

// -1 / 0 / +1 lexicographic comparison of raw utility vectors.
int lex_compare(const UtilityVector& u1, const UtilityVector& u2);

using GainFn = std::function<Gain(const UtilityVector&, int)>;

// Exhaustively verifies (C1), (G1) including its iff-equality branch, and
// (G2) over {0..umax}^n. Returns a description of the first counterexample,
// or nullopt. custom overrides the gain function (for mutation tests).
std::optional<std::string> check_gain_conditions(
    const Criterion& c, int n, int umax, const std::vector<Rational>& weights,
    const GainFn& custom = nullptr);

Rational harmonic_number(int u);

}  // namespace ys
