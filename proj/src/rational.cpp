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

#include "ys/rational.hpp"

namespace ys {

namespace {

BigInt parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer in rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad integer: " + s);
  }
  return BigInt(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("nonpositive denominator: " + text);
  return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

BigInt integer_root(const BigInt& x, unsigned b) {
  if (x < 0) throw std::invalid_argument("integer_root of negative value");
  if (b == 0) throw std::invalid_argument("integer_root with b = 0");
  if (b == 1 || x <= 1) return x;
  // Newton iteration with an over-estimate start so it decreases monotonically.
  unsigned bits = static_cast<unsigned>(msb(x)) + 1;
  BigInt r = BigInt(1) << (bits / b + 1);
  while (true) {
    BigInt rb1 = pow(r, b - 1);
    BigInt next = ((b - 1) * r + x / rb1) / b;
    if (next >= r) break;
    r = next;
  }
  while (pow(r, b) > x) --r;
  while (pow(r + 1, b) <= x) ++r;
  return r;
}

}  // namespace ys
