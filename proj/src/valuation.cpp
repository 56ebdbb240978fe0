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

#include "ys/valuation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ys {

namespace {

int rank_capped(const CappedRelevant& f, const Bundle& s) {
  return std::min<int>(static_cast<int>((s & f.relevant).count()), f.cap);
}

int rank_partition(const PartitionFamily& f, const Bundle& s) {
  int total = 0;
  for (std::size_t k = 0; k < f.categories.size(); ++k)
    total += std::min<int>(static_cast<int>((s & f.categories[k]).count()),
                           f.caps[k]);
  return total;
}

// Kuhn's augmenting-path matching between the goods of s and the slots.
int rank_transversal(const Transversal& f, const Bundle& s, int m) {
  std::vector<std::vector<int>> slots_of(m);
  for (auto [g, sl] : f.edges)
    if (s.test(static_cast<std::size_t>(g))) slots_of[g].push_back(sl);
  std::vector<int> slot_match(f.slots, -1);
  std::vector<char> seen;
  auto try_augment = [&](auto&& self, int g) -> bool {
    for (int sl : slots_of[g]) {
      if (seen[sl]) continue;
      seen[sl] = 1;
      if (slot_match[sl] == -1 || self(self, slot_match[sl])) {
        slot_match[sl] = g;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (auto g = s.find_first(); g != Bundle::npos; g = s.find_next(g)) {
    seen.assign(f.slots, 0);
    if (try_augment(try_augment, static_cast<int>(g))) ++matched;
  }
  return matched;
}

int rank_graphic(const Graphic& f, const Bundle& s) {
  std::vector<int> parent(f.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int rank = 0;
  for (auto g = s.find_first(); g != Bundle::npos; g = s.find_next(g)) {
    auto [a, b] = f.edge_of[g];
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      ++rank;
    }
  }
  return rank;
}

std::uint32_t bundle_mask(const Bundle& s) {
  std::uint32_t mask = 0;
  for (auto g = s.find_first(); g != Bundle::npos; g = s.find_next(g))
    mask |= 1u << g;
  return mask;
}

}  // namespace

int value(const ValuationSpec& spec, const Bundle& s, QueryCounter& qc) {
  if (static_cast<int>(s.size()) != spec.m)
    throw std::invalid_argument("bundle size does not match ground set");
  ++qc.count;
  return std::visit(
      [&](const auto& f) -> int {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, CappedRelevant>)
          return rank_capped(f, s);
        else if constexpr (std::is_same_v<F, PartitionFamily>)
          return rank_partition(f, s);
        else if constexpr (std::is_same_v<F, Transversal>)
          return rank_transversal(f, s, spec.m);
        else if constexpr (std::is_same_v<F, Graphic>)
          return rank_graphic(f, s);
        else
          return f.values[bundle_mask(s)];
      },
      spec.family);
}

int marginal(const ValuationSpec& spec, const Bundle& s, int g,
             QueryCounter& qc) {
  if (g < 0 || g >= spec.m) throw std::invalid_argument("good out of range");
  if (s.test(static_cast<std::size_t>(g)))
    throw std::invalid_argument("marginal of a good already in the bundle");
  Bundle with = s;
  with.set(static_cast<std::size_t>(g));
  return value(spec, with, qc) - value(spec, s, qc);
}

std::string MrfViolation::describe() const {
  switch (kind) {
    case Kind::EmptySetNonzero:
      return "v(empty set) != 0";
    case Kind::MarginalNotBinary:
      return "marginal outside {0,1} at good " + std::to_string(good);
    case Kind::NotSubmodular:
      return "marginal increases from subset to superset at good " +
             std::to_string(good);
  }
  return "unknown";
}

std::optional<MrfViolation> check_mrf(const ValuationSpec& spec, int limit) {
  if (spec.m > limit)
    throw std::invalid_argument("ground set too large for exhaustive check (" +
                                std::to_string(spec.m) + " > " +
                                std::to_string(limit) + ")");
  QueryCounter qc;
  const int m = spec.m;
  const std::uint32_t full = (m >= 32) ? 0 : (1u << m);
  auto to_bundle = [&](std::uint32_t mask) {
    Bundle b(static_cast<std::size_t>(m));
    for (int g = 0; g < m; ++g)
      if (mask & (1u << g)) b.set(static_cast<std::size_t>(g));
    return b;
  };
  std::vector<int> table(full);
  for (std::uint32_t mask = 0; mask < full; ++mask)
    table[mask] = value(spec, to_bundle(mask), qc);

  if (table[0] != 0)
    return MrfViolation{MrfViolation::Kind::EmptySetNonzero, to_bundle(0),
                        Bundle(), -1};
  for (std::uint32_t mask = 0; mask < full; ++mask)
    for (int g = 0; g < m; ++g) {
      if (mask & (1u << g)) continue;
      int d = table[mask | (1u << g)] - table[mask];
      if (d != 0 && d != 1)
        return MrfViolation{MrfViolation::Kind::MarginalNotBinary,
                            to_bundle(mask), Bundle(), g};
    }
  // Submodularity via all (S, T) pairs with S ⊆ T, enumerating S as a
  // submask of T.
  for (std::uint32_t t = 0; t < full; ++t) {
    std::uint32_t s = t;
    while (true) {
      for (int g = 0; g < m; ++g) {
        if (t & (1u << g)) continue;
        int ds = table[s | (1u << g)] - table[s];
        int dt = table[t | (1u << g)] - table[t];
        if (ds < dt)
          return MrfViolation{MrfViolation::Kind::NotSubmodular, to_bundle(s),
                              to_bundle(t), g};
      }
      if (s == 0) break;
      s = (s - 1) & t;
    }
  }
  return std::nullopt;
}

ValuationSpec zero_out_if_invalid(const ValuationSpec& spec, int limit) {
  if (!std::holds_alternative<ExplicitTable>(spec.family)) return spec;
  if (!check_mrf(spec, limit)) return spec;
  return ValuationSpec{spec.m,
                       CappedRelevant{Bundle(static_cast<std::size_t>(spec.m)),
                                      0}};
}

ValuationSpec indicator_valuation(int m, const Bundle& t) {
  return ValuationSpec{m, CappedRelevant{t, static_cast<int>(t.count())}};
}

ValuationSpec pool_valuation(int m) {
  Bundle all(static_cast<std::size_t>(m));
  all.set();
  return ValuationSpec{m, CappedRelevant{all, m}};
}

std::vector<std::string> validate_spec(const ValuationSpec& spec) {
  std::vector<std::string> problems;
  if (spec.m < 0) problems.push_back("negative goods count");
  auto check_bundle = [&](const Bundle& b, const std::string& what) {
    if (static_cast<int>(b.size()) != spec.m)
      problems.push_back(what + " sized for a different ground set");
  };
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, CappedRelevant>) {
          check_bundle(f.relevant, "relevant set");
          if (f.cap < 0) problems.push_back("negative cap");
        } else if constexpr (std::is_same_v<F, PartitionFamily>) {
          if (f.categories.size() != f.caps.size())
            problems.push_back("category/cap count mismatch");
          Bundle seen(static_cast<std::size_t>(std::max(spec.m, 0)));
          for (std::size_t k = 0; k < f.categories.size(); ++k) {
            check_bundle(f.categories[k], "category");
            if (static_cast<int>(f.categories[k].size()) == spec.m) {
              if ((seen & f.categories[k]).any())
                problems.push_back("categories are not disjoint");
              seen |= f.categories[k];
            }
            if (k < f.caps.size() && f.caps[k] < 0)
              problems.push_back("negative category cap");
          }
        } else if constexpr (std::is_same_v<F, Transversal>) {
          if (f.slots < 0) problems.push_back("negative slot count");
          for (auto [g, sl] : f.edges) {
            if (g < 0 || g >= spec.m)
              problems.push_back("transversal edge good out of range");
            if (sl < 0 || sl >= f.slots)
              problems.push_back("transversal edge slot out of range");
          }
        } else if constexpr (std::is_same_v<F, Graphic>) {
          if (f.vertices < 0) problems.push_back("negative vertex count");
          if (static_cast<int>(f.edge_of.size()) != spec.m)
            problems.push_back("graphic family must map every good to an edge");
          for (auto [a, b] : f.edge_of)
            if (a < 0 || a >= f.vertices || b < 0 || b >= f.vertices)
              problems.push_back("graphic edge endpoint out of range");
        } else {
          if (spec.m > kDefaultMrfCheckLimit)
            problems.push_back("explicit table too large to verify");
          else if (f.values.size() != (std::size_t{1} << spec.m))
            problems.push_back("explicit table must cover all bundles");
          for (int v : f.values)
            if (v < 0) problems.push_back("negative table value");
        }
      },
      spec.family);
  return problems;
}

}  // namespace ys
