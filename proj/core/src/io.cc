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

#include "polymat/io.h"

#include <map>
#include <sstream>

#include "polymat/error.h"

namespace polymat {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) Malformed("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) Malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

int AsInt(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    Malformed(std::string(what) + " must be an integer");
  }
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) {
    Malformed(std::string(what) + " is out of range");
  }
  return static_cast<int>(v);
}

LatticePoint AsIntVector(const Json& j, const char* what) {
  if (!j.is_array()) Malformed(std::string(what) + " must be an array");
  LatticePoint out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(AsInt(v, what));
  return out;
}

int AsDimension(const Json& j, const char* what) {
  const int p = AsInt(j, what);
  if (p < 0 || p > 64) Malformed(std::string(what) + " is out of range");
  return p;
}

}  // namespace

Polymatroid PolymatroidFromJson(const Json& j) {
  const int p = AsInt(Field(j, "p"), "p");
  if (p < 1 || p > kMaxGroundSet) {
    throw Error(ErrorCode::kInvalidParameter,
                "p = " + std::to_string(p) + " outside [1," +
                    std::to_string(kMaxGroundSet) + "]");
  }
  std::optional<LatticePoint> cage;
  if (j.contains("cage") && !j["cage"].is_null()) {
    cage = AsIntVector(j["cage"], "cage");
  }
  const bool has_rank = j.contains("rank");
  const bool has_points = j.contains("base_points");
  if (has_rank == has_points) {
    Malformed("exactly one of \"rank\" and \"base_points\" must be given");
  }
  if (has_rank) {
    const Json& table = j["rank"];
    if (!table.is_object()) Malformed("\"rank\" must be an object");
    std::map<SubsetMask, int> ranks;
    for (const auto& [key, value] : table.items()) {
      const SubsetMask mask = ParseSubsetKey(key, p);
      if (mask == 0 || SubsetKey(mask) != key) {
        Malformed("subset key \"" + key +
                  "\" is not an ascending list of distinct indices");
      }
      ranks[mask] = AsInt(value, "rank value");
    }
    return Polymatroid::FromRankMap(p, ranks, std::move(cage));
  }
  const Json& points = j["base_points"];
  if (!points.is_array()) Malformed("\"base_points\" must be an array");
  std::vector<LatticePoint> list;
  for (const auto& point : points) {
    list.push_back(AsIntVector(point, "base point"));
  }
  const Polymatroid P = RankFromPoints(PointSet(p, std::move(list)));
  return cage ? P.WithCage(*std::move(cage)) : P;
}

Json PolymatroidToJson(const Polymatroid& P) {
  Json rank = Json::object();
  for (SubsetMask J = 1; J <= P.full_mask(); ++J) {
    rank[SubsetKey(J)] = P.rank(J);
  }
  return Json{{"p", P.p()}, {"cage", P.cage()}, {"rank", rank}};
}

Json PolyToJson(const SparsePoly& f, int first_index) {
  Json vars = Json::array();
  for (int k = 0; k < f.nvars(); ++k) {
    vars.push_back("t" + std::to_string(k + first_index));
  }
  Json terms = Json::array();
  for (const auto& [exp, c] : f.terms()) {
    terms.push_back(Json{{"exp", exp}, {"coeff", RationalToString(c)}});
  }
  return Json{{"vars", vars}, {"terms", terms}};
}

SparsePoly PolyFromJson(const Json& j) {
  const Json& vars = Field(j, "vars");
  if (!vars.is_array()) Malformed("\"vars\" must be an array");
  SparsePoly f(static_cast<int>(vars.size()));
  const Json& terms = Field(j, "terms");
  if (!terms.is_array()) Malformed("\"terms\" must be an array");
  for (const auto& term : terms) {
    const Json& coeff = Field(term, "coeff");
    if (!coeff.is_string()) Malformed("\"coeff\" must be a string");
    f.AddTerm(AsIntVector(Field(term, "exp"), "exponent"),
              ParseRational(coeff.get<std::string>()));
  }
  return f;
}

Json PointSetToJson(const PointSet& s) {
  return Json{{"p", s.p()}, {"points", s.points()}};
}

PointSet PointSetFromJson(const Json& j) {
  const int p = AsDimension(Field(j, "p"), "p");
  const Json& points = Field(j, "points");
  if (!points.is_array()) Malformed("\"points\" must be an array");
  std::vector<LatticePoint> list;
  for (const auto& point : points) list.push_back(AsIntVector(point, "point"));
  return PointSet(p, std::move(list));
}

Json MobiusToJson(const MobiusTable& mu) {
  Json values = Json::array();
  for (const auto& [n, value] : mu.entries()) {
    values.push_back(Json{{"point", n}, {"mu", value}});
  }
  return Json{{"p", mu.p()}, {"values", values}};
}

MobiusTable MobiusFromJson(const Json& j) {
  const int p = AsDimension(Field(j, "p"), "p");
  const Json& values = Field(j, "values");
  if (!values.is_array()) Malformed("\"values\" must be an array");
  std::vector<MobiusTable::Entry> entries;
  for (const auto& v : values) {
    entries.emplace_back(AsIntVector(Field(v, "point"), "point"),
                         AsInt(Field(v, "mu"), "mu"));
  }
  return MobiusTable(p, std::move(entries));
}

Json BettiToJson(const BettiTable& betti) {
  Json entries = Json::array();
  for (const auto& [key, beta] : betti.entries()) {
    entries.push_back(
        Json{{"i", key.first}, {"degree", key.second}, {"beta", beta}});
  }
  return Json{{"nvars", betti.nvars()}, {"entries", entries}};
}

BettiTable BettiFromJson(const Json& j) {
  const int nvars = AsDimension(Field(j, "nvars"), "nvars");
  const Json& list = Field(j, "entries");
  if (!list.is_array()) Malformed("\"entries\" must be an array");
  std::map<BettiTable::Key, long long> entries;
  for (const auto& e : list) {
    entries[{AsInt(Field(e, "i"), "i"), AsIntVector(Field(e, "degree"), "degree")}] =
        AsInt(Field(e, "beta"), "beta");
  }
  return BettiTable(nvars, std::move(entries));
}

Json IdealToJson(const MonomialIdeal& ideal) {
  return Json{{"nvars", ideal.nvars()},
              {"generators", ideal.generators().points()}};
}

MonomialIdeal IdealFromJson(const Json& j) {
  const int nvars = AsDimension(Field(j, "nvars"), "nvars");
  const Json& gens = Field(j, "generators");
  if (!gens.is_array()) Malformed("\"generators\" must be an array");
  std::vector<LatticePoint> list;
  for (const auto& g : gens) list.push_back(AsIntVector(g, "generator"));
  return MonomialIdeal(nvars, std::move(list));
}

std::string MobiusToCsv(const MobiusTable& mu) {
  std::ostringstream out;
  for (int i = 0; i < mu.p(); ++i) out << 'n' << i + 1 << ',';
  out << "mu\n";
  for (const auto& [n, value] : mu.entries()) {
    for (int v : n) out << v << ',';
    out << value << '\n';
  }
  return out.str();
}

std::string BettiToCsv(const BettiTable& betti) {
  std::ostringstream out;
  out << "i,";
  for (int i = 0; i < betti.nvars(); ++i) out << 'b' << i + 1 << ',';
  out << "beta\n";
  for (const auto& [key, beta] : betti.entries()) {
    out << key.first << ',';
    for (int v : key.second) out << v << ',';
    out << beta << '\n';
  }
  return out.str();
}

LatticePoint ParseIntList(const std::string& text) {
  LatticePoint out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::kMalformedInput,
                  "malformed integer list \"" + text + "\"", text);
    }
    out.push_back(value);
  }
  if (out.empty()) {
    throw Error(ErrorCode::kMalformedInput, "empty integer list", text);
  }
  return out;
}

}  // namespace polymat
