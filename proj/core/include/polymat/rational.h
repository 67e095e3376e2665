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

#ifndef POLYMAT_RATIONAL_H_
#define POLYMAT_RATIONAL_H_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polymat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "3", "-2", "1/6".
std::string RationalToString(const Rational& q);

// Inverse of RationalToString; throws MalformedInput.
Rational ParseRational(const std::string& text);

bool IsInteger(const Rational& q);

}  // namespace polymat

#endif  // POLYMAT_RATIONAL_H_
