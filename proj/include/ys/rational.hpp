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

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ys {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "a/b" or "a". Throws std::invalid_argument on malformed input or a
// zero/negative denominator.
Rational parse_rational(const std::string& text);

// Canonical rendering: "a" when the denominator is 1, "a/b" otherwise.
std::string rational_to_string(const Rational& r);

// Floor of the b-th root of a nonnegative integer.
BigInt integer_root(const BigInt& x, unsigned b);

}  // namespace ys
