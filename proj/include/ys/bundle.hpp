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

#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ys {

// A bundle is a subset of the ground set [0, m). Bit g set means good g is in
// the bundle.
using Bundle = boost::dynamic_bitset<>;

inline Bundle make_bundle(std::size_t m, std::initializer_list<int> goods) {
  Bundle b(m);
  for (int g : goods) b.set(static_cast<std::size_t>(g));
  return b;
}

inline Bundle make_bundle(std::size_t m, const std::vector<int>& goods) {
  Bundle b(m);
  for (int g : goods) b.set(static_cast<std::size_t>(g));
  return b;
}

inline std::vector<int> bundle_goods(const Bundle& b) {
  std::vector<int> out;
  for (auto g = b.find_first(); g != Bundle::npos; g = b.find_next(g))
    out.push_back(static_cast<int>(g));
  return out;
}

}  // namespace ys
