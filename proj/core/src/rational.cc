// Copyright 2026 The Polymat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polymat/rational.h"

#include <algorithm>
#include <cctype>

#include "polymat/error.h"

namespace polymat {
namespace {

bool IsIntegerLiteral(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  return s.size() > start &&
         std::all_of(s.begin() + start, s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::string RationalToString(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational ParseRational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den) || den[0] == '-' ||
      den[0] == '+') {
    throw Error(ErrorCode::kMalformedInput,
                "malformed rational \"" + text + "\"", text);
  }
  const Integer d(den);
  if (d == 0) {
    throw Error(ErrorCode::kMalformedInput, "zero denominator in \"" + text +
                                                "\"",
                text);
  }
  Integer n(num[0] == '+' ? num.substr(1) : num);
  return Rational(n, d);
}

bool IsInteger(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

}  // namespace polymat
