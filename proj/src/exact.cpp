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

#include "ys/exact.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ys {

void RadicalSum::add(const Rational& coeff, const BigInt& base,
                     long long exp_num) {
  if (base < 1) throw std::invalid_argument("radical base must be positive");
  if (coeff == 0) return;
  const long long b = static_cast<long long>(degree_);
  // base^(exp_num/b) = base^q * base^(s/b) with 0 <= s < b.
  long long q = exp_num / b, s = exp_num % b;
  if (s < 0) {
    s += b;
    q -= 1;
  }
  Rational factor = coeff;
  if (q >= 0)
    factor *= Rational(pow(base, static_cast<unsigned>(q)));
  else
    factor /= Rational(pow(base, static_cast<unsigned>(-q)));
  if (s == 0 || base == 1) {
    terms_[1] += factor;
    return;
  }
  // Split base^s = c^b * t with t b-th-power free, by trial factorization.
  BigInt n = base;
  BigInt c = 1, t = 1;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    long long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    long long total = e * s;
    c *= pow(p, static_cast<unsigned>(total / b));
    t *= pow(p, static_cast<unsigned>(total % b));
  }
  if (n > 1) {  // remaining prime factor
    long long total = s;
    c *= pow(n, static_cast<unsigned>(total / b));
    t *= pow(n, static_cast<unsigned>(total % b));
  }
  if (t == 1)
    terms_[1] += factor * Rational(c);
  else
    terms_[t] += factor * Rational(c);
}

void RadicalSum::subtract(const RadicalSum& other) {
  if (degree_ != other.degree_)
    throw std::invalid_argument("mismatched radical degrees");
  for (const auto& [t, r] : other.terms_) terms_[t] -= r;
}

int RadicalSum::sign() const {
  std::vector<std::pair<BigInt, Rational>> live;
  Rational rational_part = 0;
  for (const auto& [t, r] : terms_) {
    if (r == 0) continue;
    if (t == 1)
      rational_part = r;
    else
      live.emplace_back(t, r);
  }
  if (live.empty())
    return rational_part == 0 ? 0 : (rational_part > 0 ? 1 : -1);

  // Nonzero by linear independence of the surviving radicals; refine
  // fixed-point enclosures until the sum's sign separates from zero.
  for (unsigned bits = 16;; bits *= 2) {
    BigInt scale = BigInt(1) << bits;
    Rational lo = rational_part, hi = rational_part;
    for (const auto& [t, r] : live) {
      BigInt root = integer_root(t << (bits * degree_), degree_);
      Rational below(root, scale), above(root + 1, scale);
      if (r > 0) {
        lo += r * below;
        hi += r * above;
      } else {
        lo += r * above;
        hi += r * below;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (bits > 4096)
      throw std::logic_error("radical sum sign did not separate");
  }
}

}  // namespace ys
