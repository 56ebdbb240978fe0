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

#include <map>

#include "ys/rational.hpp"

namespace ys {

// Exact sums of the form sum_k r_k * t_k^(1/b) with rational r_k and
// positive integer t_k. Terms are canonicalized so each t_k is b-th-power
// free; distinct such radicals are linearly independent over the rationals,
// which makes the zero test exact. The sign of a certified-nonzero sum is
// resolved by refining integer-root enclosures.
class RadicalSum {
 public:
  explicit RadicalSum(unsigned root_degree) : degree_(root_degree) {}

  // Adds coeff * base^(exp_num / degree). base >= 1; exp_num may be negative.
  void add(const Rational& coeff, const BigInt& base, long long exp_num);

  // Adds a plain rational.
  void add_rational(const Rational& r) { terms_[1] += r; }

  void subtract(const RadicalSum& other);

  // -1, 0, or +1.
  int sign() const;

 private:
  unsigned degree_;
  std::map<BigInt, Rational> terms_;  // b-th-power-free radicand -> coefficient
};

}  // namespace ys
