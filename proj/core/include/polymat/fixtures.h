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

#ifndef POLYMAT_FIXTURES_H_
#define POLYMAT_FIXTURES_H_

#include <string>
#include <vector>

#include "polymat/polymatroid.h"

namespace polymat {

// Named polymatroids. Besides the fixed names returned by FixtureNames(),
// LoadFixture understands the composite forms
//   U(r;m1,...,mp)      uniform polymatroid with weights m and rank r
//   dual(NAME)          dual with respect to NAME's cage
//   trunc(NAME;b1,...)  base points n >= b
//   trans(NAME;b1,...)  base points n - b for n >= b
// Throws UnknownFixture.
Polymatroid LoadFixture(const std::string& name);

// Fixed built-in names (composite forms excluded).
std::vector<std::string> FixtureNames();

// The cross-check corpus: at least 20 distinct polymatroids with p <= 4 and
// cage entries <= 4, composite forms included.
std::vector<std::string> CorpusNames();

}  // namespace polymat

#endif  // POLYMAT_FIXTURES_H_
