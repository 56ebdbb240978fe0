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

#include <json.hpp>
#include <optional>

#include "ys/engine.hpp"
#include "ys/oracles.hpp"

namespace ys {

using Json = nlohmann::json;

// JSON conventions: rationals are "a/b" or integer strings; bundles are
// sorted arrays of good indices; unknown object fields are rejected.
// Parse failures throw std::invalid_argument with a field diagnostic.

Json valuation_to_json(const ValuationSpec& spec);
ValuationSpec valuation_from_json(const Json& j, int m);

Json criterion_to_json(const Criterion& c);
Criterion criterion_from_json(const Json& j);

struct InstanceFile {
  Instance instance;
  std::optional<Criterion> criterion;
};

Json instance_to_json(const InstanceFile& f);
InstanceFile instance_from_json(const Json& j);

// Merges a file-level criterion (or a bare kind) with per-agent defaults.
Criterion finalize_criterion(const Instance& inst,
                             const std::optional<Criterion>& parsed,
                             CriterionKind kind, const Rational& p);

Json run_result_to_json(const RunResult& r, const Criterion& c);
Json fuzz_report_to_json(const FuzzReport& r);

Json bundle_to_json(const Bundle& b);

}  // namespace ys
