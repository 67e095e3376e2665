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

#include "polymat/fixtures.h"

#include <functional>
#include <map>

#include "polymat/error.h"
#include "polymat/io.h"

namespace polymat {
namespace {

Polymatroid WorkedExample() {
  // rk{1} = rk{2} = 2, rk{3} = rk{1,2} = 4, the rest 5; cage (2,2,4).
  return Polymatroid::Create(3, {0, 2, 2, 4, 4, 5, 5, 5},
                             LatticePoint{2, 2, 4});
}

Polymatroid K4Restriction(std::vector<std::uint64_t> groups) {
  const Graph k4 = CompleteGraph(4);
  return RestrictionPolymatroid(
      [&k4](std::uint64_t edges) { return GraphicRank(k4, edges); }, groups);
}

const std::map<std::string, std::function<Polymatroid()>>& Builtins() {
  static const auto* builtins =
      new std::map<std::string, std::function<Polymatroid()>>{
          {"paper-example", WorkedExample},
          {"paper-example-dual", [] { return Dual(WorkedExample()); }},
          {"u12", [] { return Uniform(2, std::vector<int>{1, 1}, 1); }},
          {"rank-zero",
           [] { return Polymatroid::Create(2, {0, 0, 0, 0}); }},
          {"graphic-k3", [] { return Graphic(CompleteGraph(3)); }},
          {"graphic-k4", [] { return Graphic(CompleteGraph(4)); }},
          {"graphic-p3", [] { return Graphic(PathGraph(3)); }},
          {"graphic-p4", [] { return Graphic(PathGraph(4)); }},
          {"graphic-c4", [] { return Graphic(CycleGraph(4)); }},
          // K_4 edges in order 12,13,14,23,24,34.
          {"k4-restrict-2", [] { return K4Restriction({0b000111, 0b111000}); }},
          {"k4-restrict-3a",
           [] { return K4Restriction({0b000011, 0b001000, 0b110100}); }},
          {"k4-restrict-3b",
           [] { return K4Restriction({0b000001, 0b000110, 0b111000}); }},
          {"k4-restrict-3c",
           [] { return K4Restriction({0b000001, 0b000010, 0b111100}); }},
          {"sum-u12-u12",
           [] {
             const Polymatroid u12 = Uniform(2, std::vector<int>{1, 1}, 1);
             return DirectSum(u12, u12);
           }},
          {"sum-u12-k4r2",
           [] {
             return DirectSum(Uniform(2, std::vector<int>{1, 1}, 1),
                              K4Restriction({0b000111, 0b111000}));
           }},
      };
  return *builtins;
}

[[noreturn]] void Unknown(const std::string& name) {
  throw Error(ErrorCode::kUnknownFixture, "unknown fixture \"" + name + "\"",
              name);
}

bool Wraps(const std::string& name, const std::string& head) {
  return name.size() > head.size() + 2 && name.compare(0, head.size(), head) == 0 &&
         name[head.size()] == '(' && name.back() == ')';
}

std::string Inner(const std::string& name, const std::string& head) {
  return name.substr(head.size() + 1, name.size() - head.size() - 2);
}

// "NAME;b1,...,bp" with NAME possibly containing ';' inside parentheses.
std::pair<std::string, LatticePoint> SplitOffset(const std::string& inner,
                                                 const std::string& whole) {
  const auto semi = inner.rfind(';');
  if (semi == std::string::npos) Unknown(whole);
  try {
    return {inner.substr(0, semi), ParseIntList(inner.substr(semi + 1))};
  } catch (const Error&) {
    Unknown(whole);
  }
}

}  // namespace

Polymatroid LoadFixture(const std::string& name) {
  if (auto it = Builtins().find(name); it != Builtins().end()) {
    return it->second();
  }
  if (Wraps(name, "U")) {
    const std::string inner = Inner(name, "U");
    const auto semi = inner.find(';');
    if (semi == std::string::npos) Unknown(name);
    LatticePoint rank, weights;
    try {
      rank = ParseIntList(inner.substr(0, semi));
      weights = ParseIntList(inner.substr(semi + 1));
    } catch (const Error&) {
      Unknown(name);
    }
    if (rank.size() != 1) Unknown(name);
    return Uniform(static_cast<int>(weights.size()), weights, rank[0]);
  }
  if (Wraps(name, "dual")) return Dual(LoadFixture(Inner(name, "dual")));
  if (Wraps(name, "trunc") || Wraps(name, "trans")) {
    const bool trunc = Wraps(name, "trunc");
    auto [base_name, offset] = SplitOffset(Inner(name, trunc ? "trunc" : "trans"), name);
    const Polymatroid P = LoadFixture(base_name);
    const PointSet base = BasePoints(P);
    const PointSet cut =
        trunc ? Truncate(base, offset) : TranslateMinus(base, offset);
    if (cut.empty()) {
      throw Error(ErrorCode::kInvalidParameter,
                  "fixture \"" + name + "\" has no base points", name);
    }
    return RankFromPoints(cut);
  }
  Unknown(name);
}

std::vector<std::string> FixtureNames() {
  std::vector<std::string> names;
  for (const auto& [name, builder] : Builtins()) names.push_back(name);
  return names;
}

std::vector<std::string> CorpusNames() {
  return {
      "paper-example",
      "paper-example-dual",
      "u12",
      "rank-zero",
      "U(2;2,1,1)",
      "U(1;1,1,1)",
      "U(3;2,2,2)",
      "U(2;2,1)",
      "U(2;1,1,1,1)",
      "U(3;1,2,3)",
      "graphic-k3",
      "graphic-p3",
      "graphic-p4",
      "graphic-c4",
      "k4-restrict-2",
      "k4-restrict-3a",
      "k4-restrict-3b",
      "k4-restrict-3c",
      "sum-u12-u12",
      "sum-u12-k4r2",
      "trunc(paper-example;1,0,1)",
      "trans(paper-example;0,0,1)",
      "dual(graphic-c4)",
      "dual(k4-restrict-3b)",
      "dual(U(2;1,2,3))",
      "trunc(U(3;2,2,2);1,0,0)",
      "trans(k4-restrict-3a;1,0,0)",
  };
}

}  // namespace polymat
