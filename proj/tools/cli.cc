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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "polymat/error.h"
#include "polymat/fixtures.h"
#include "polymat/invariants.h"
#include "polymat/io.h"
#include "polymat/lorentzian.h"
#include "polymat/polymatroid.h"
#include "polymat/syzygy.h"
#include "polymat/valuative.h"

namespace polymat::cli {
namespace {

enum class Format { kJson, kPretty, kCsv };

struct GlobalOptions {
  std::string format = "pretty";
  std::string cage;
  int parallel = 1;
  std::optional<std::uint64_t> seed;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Format format;
  std::optional<LatticePoint> cage;
  int parallel;
  std::optional<std::uint64_t> seed;
};

// Raised for internal cross-check failures (exit code 3).
class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput:
    case ErrorCode::kUnknownFixture:
      return kExitMalformedInput;
    default:
      return kExitDomainError;
  }
}

std::string ReadAll(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// FILE is a path, "-" for standard input, or a fixture name (optionally
// written as "fixtures/NAME").
Polymatroid LoadInput(const std::string& source, const Context& ctx) {
  Polymatroid P = [&] {
    std::string text;
    if (source == "-") {
      text = ReadAll(ctx.in);
    } else if (std::filesystem::is_regular_file(source)) {
      std::ifstream file(source);
      text = ReadAll(file);
    } else {
      constexpr std::string_view kPrefix = "fixtures/";
      std::string name = source;
      if (name.starts_with(kPrefix)) name.erase(0, kPrefix.size());
      try {
        return LoadFixture(name);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kUnknownFixture) throw;
        throw Error(ErrorCode::kUnknownFixture,
                    "\"" + source + "\" is neither a readable file nor a fixture",
                    source);
      }
    }
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::kMalformedInput,
                  std::string("invalid JSON: ") + e.what());
    }
    return PolymatroidFromJson(j);
  }();
  if (ctx.cage) P = P.WithCage(*ctx.cage);
  return P;
}

void RequireFormat(const Context& ctx, std::initializer_list<Format> allowed,
                   const std::string& command) {
  for (Format f : allowed) {
    if (f == ctx.format) return;
  }
  throw Error(ErrorCode::kMalformedInput,
              "output format not supported by \"" + command + "\"");
}

void EmitJson(const Context& ctx, const Json& j) {
  ctx.out << j.dump(2) << '\n';
}

void EmitPoly(const Context& ctx, const SparsePoly& f, int first_index = 1) {
  if (ctx.format == Format::kJson) {
    EmitJson(ctx, PolyToJson(f, first_index));
  } else {
    ctx.out << FormatPoly(f, "t", first_index) << '\n';
  }
}

void EmitPoints(const Context& ctx, const PointSet& s) {
  if (ctx.format == Format::kJson) {
    EmitJson(ctx, PointSetToJson(s));
    return;
  }
  for (const auto& n : s) ctx.out << PointToString(n) << '\n';
}

void EmitIdeal(const Context& ctx, const MonomialIdeal& ideal) {
  if (ctx.format == Format::kJson) {
    EmitJson(ctx, IdealToJson(ideal));
  } else {
    ctx.out << FormatIdeal(ideal);
  }
}

std::string IdealDiff(const MonomialIdeal& a, const MonomialIdeal& b) {
  return "Möbius route:\n" + FormatIdeal(a) + "syzygy route:\n" +
         FormatIdeal(b);
}

int CmdValidate(const Context& ctx, const std::string& file) {
  RequireFormat(ctx, {Format::kJson, Format::kPretty}, "validate");
  const Polymatroid P = LoadInput(file, ctx);
  if (ctx.format == Format::kJson) {
    EmitJson(ctx, Json{{"valid", true},
                       {"p", P.p()},
                       {"total_rank", P.total_rank()},
                       {"cage", P.cage()}});
  } else {
    ctx.out << "valid polymatroid: p=" << P.p() << ", rk=" << P.total_rank()
            << ", cage=" << PointToString(P.cage()) << '\n';
  }
  return kExitOk;
}

int CmdPoints(const Context& ctx, const std::string& file, bool base) {
  RequireFormat(ctx, {Format::kJson, Format::kPretty},
                base ? "base-points" : "indep-points");
  const Polymatroid P = LoadInput(file, ctx);
  EmitPoints(ctx, base ? BasePoints(P) : IndependencePoints(P));
  return kExitOk;
}

int CmdMobius(const Context& ctx, const std::string& file) {
  const MobiusTable mu = Mobius(LoadInput(file, ctx));
  switch (ctx.format) {
    case Format::kJson:
      EmitJson(ctx, MobiusToJson(mu));
      break;
    case Format::kCsv:
      ctx.out << MobiusToCsv(mu);
      break;
    case Format::kPretty:
      for (const auto& [n, value] : mu.entries()) {
        ctx.out << PointToString(n) << ' ' << value << '\n';
      }
      break;
  }
  return kExitOk;
}

int CmdCave(const Context& ctx, const std::string& file,
            const std::string& permute) {
  RequireFormat(ctx, {Format::kJson, Format::kPretty}, "cave");
  const Polymatroid P = LoadInput(file, ctx);
  if (permute.empty()) {
    EmitPoly(ctx, Cave(P));
    return kExitOk;
  }
  LatticePoint perm = ParseIntList(permute);
  if (static_cast<int>(perm.size()) != P.p()) {
    throw Error(ErrorCode::kInvalidParameter,
                "--permute needs " + std::to_string(P.p()) + " entries",
                permute);
  }
  for (int& v : perm) --v;
  EmitPoly(ctx, CavePermuted(P, perm));
  return kExitOk;
}

int CmdSnapper(const Context& ctx, const std::string& file) {
  RequireFormat(ctx, {Format::kJson, Format::kPretty}, "snapper");
  const SparsePoly snapper = Snapper(LoadInput(file, ctx));
  for (const auto& [exp, c] : snapper.terms()) {
    if (!IsInteger(c) || c < 0) {
      throw Mismatch("Snapper coefficient " + RationalToString(c) + " at " +
                     FormatMonomial(exp, "t") +
                     " is not a nonnegative integer");
    }
  }
  EmitPoly(ctx, snapper);
  return kExitOk;
}

int CmdIdeal(const Context& ctx, const std::string& file) {
  RequireFormat(ctx, {Format::kJson, Format::kPretty}, "ideal");
  EmitIdeal(ctx, PolymatroidalIdeal(LoadInput(file, ctx)));
  return kExitOk;
}

int CmdKpoly(const Context& ctx, const std::string& file,
             const std::string& via) {
  RequireFormat(ctx, {Format::kJson, Format::kPretty}, "kpoly");
  const Polymatroid P = LoadInput(file, ctx);
  std::optional<SparsePoly> from_cave, from_betti;
  if (via != "betti") from_cave = KPolynomialFromCave(P, P.cage());
  if (via != "cave") {
    from_betti = KPolynomialFromBetti(
        ComputeBettiTable(PolymatroidalIdeal(P), ctx.parallel));
  }
  if (from_cave && from_betti && *from_cave != *from_betti) {
    throw Mismatch("K-polynomial routes disagree\ncave route:  " +
                   FormatPoly(*from_cave) +
                   "\nbetti route: " + FormatPoly(*from_betti));
  }
  EmitPoly(ctx, from_cave ? *from_cave : *from_betti);
  return kExitOk;
}

int CmdBetti(const Context& ctx, const std::string& file) {
  const BettiTable betti =
      ComputeBettiTable(PolymatroidalIdeal(LoadInput(file, ctx)), ctx.parallel);
  switch (ctx.format) {
    case Format::kJson:
      EmitJson(ctx, BettiToJson(betti));
      break;
    case Format::kCsv:
      ctx.out << BettiToCsv(betti);
      break;
    case Format::kPretty:
      for (const auto& [key, beta] : betti.entries()) {
        ctx.out << "beta_{" << key.first << ',' << PointToString(key.second)
                << "} = " << beta << '\n';
      }
      break;
  }
  return kExitOk;
}

int CmdHs(const Context& ctx, const std::string& file, int index,
          const std::string& via) {
  RequireFormat(ctx, {Format::kJson, Format::kPretty}, "hs");
  const Polymatroid P = LoadInput(file, ctx);
  std::optional<MonomialIdeal> from_mobius, from_betti;
  if (via != "betti") from_mobius = HsIdeal(P, P.cage(), index);
  if (via != "mobius") {
    from_betti = HsFromBetti(
        ComputeBettiTable(PolymatroidalIdeal(P), ctx.parallel), index);
  }
  if (from_mobius && from_betti && *from_mobius != *from_betti) {
    throw Mismatch("homological shift ideal routes disagree\n" +
                   IdealDiff(*from_mobius, *from_betti));
  }
  EmitIdeal(ctx, from_mobius ? *from_mobius : *from_betti);
  return kExitOk;
}

int CmdDual(const Context& ctx, const std::string& file) {
  RequireFormat(ctx, {Format::kJson, Format::kPretty}, "dual");
  const Polymatroid P = LoadInput(file, ctx);
  const Polymatroid D = Dual(P, P.cage());
  const PointSet reflected = ReflectPoints(BasePoints(P), P.cage());
  const PointSet base = BasePoints(D);
  if (reflected != base) {
    throw Mismatch("dual rank formula and point reflection disagree");
  }
  if (ctx.format == Format::kJson) {
    EmitJson(ctx, PolymatroidToJson(D));
    return kExitOk;
  }
  ctx.out << "cage " << PointToString(D.cage()) << '\n';
  for (SubsetMask J = 1; J <= D.full_mask(); ++J) {
    ctx.out << "rk({" << SubsetKey(J) << "}) = " << D.rank(J) << '\n';
  }
  ctx.out << "base points:\n";
  for (const auto& n : base) ctx.out << PointToString(n) << '\n';
  return kExitOk;
}

int CmdCheckGpm(const Context& ctx, const std::string& file) {
  RequireFormat(ctx, {Format::kJson, Format::kPretty}, "check-gpm");
  const SparsePoly cave = Cave(LoadInput(file, ctx));
  const bool ok = IsGeneralizedPolymatroid(cave);
  if (ctx.format == Format::kJson) {
    EmitJson(ctx, Json{{"generalized_polymatroid", ok},
                       {"cave", PolyToJson(cave)}});
  } else {
    ctx.out << (ok ? "support of the cave polynomial is a generalized "
                     "polymatroid"
                   : "support of the cave polynomial is NOT a generalized "
                     "polymatroid")
            << '\n';
  }
  return ok ? kExitOk : kExitCrossCheckMismatch;
}

int CmdLorentzian(const Context& ctx, const std::string& file,
                  const std::string& target) {
  RequireFormat(ctx, {Format::kJson, Format::kPretty}, "lorentzian");
  const Polymatroid P = LoadInput(file, ctx);
  const SparsePoly f = target == "kpoly" ? KPolynomialFromCave(P, P.cage())
                                         : Cave(Dual(P, P.cage()));
  const SparsePoly h = Homogenize(SignChange(f));
  const LorentzianVerdict verdict = IsDenormalizedLorentzian(h, ctx.parallel);
  if (ctx.format == Format::kJson) {
    EmitJson(ctx, Json{{"target", target},
                       {"polynomial", PolyToJson(h, 0)},
                       {"denormalized_lorentzian", verdict.lorentzian},
                       {"diagnostic", verdict.diagnostic}});
  } else {
    ctx.out << FormatPoly(h, "t", 0) << '\n'
            << (verdict.lorentzian ? "denormalized Lorentzian"
                                   : "not denormalized Lorentzian: " +
                                         verdict.diagnostic)
            << '\n';
  }
  return kExitOk;
}

int CmdSplit(const Context& ctx, const std::string& file,
             const std::string& subset, std::optional<int> threshold,
             bool check_valuative) {
  RequireFormat(ctx, {Format::kJson, Format::kPretty}, "split");
  const Polymatroid P = LoadInput(file, ctx);
  const PointSet base = BasePoints(P);
  SplitChoice choice;
  if (!subset.empty()) {
    if (!threshold) {
      throw Error(ErrorCode::kMalformedInput,
                  "--threshold is required together with --subset");
    }
    choice = {ParseSubsetKey(subset, P.p()), *threshold};
  } else {
    std::mt19937_64 rng(ctx.seed.value_or(0));
    const auto random = RandomSplit(base, rng);
    if (!random) {
      throw Error(ErrorCode::kEmptyPiece,
                  "the base points admit no proper hyperplane split");
    }
    choice = *random;
  }
  const Split split = HyperplaneSplit(base, choice.subset, choice.threshold);

  Json report{{"subset", SubsetKey(choice.subset)},
              {"threshold", choice.threshold},
              {"lower", PointSetToJson(split.lower)},
              {"upper", PointSetToJson(split.upper)},
              {"middle", PointSetToJson(split.middle)}};
  std::optional<std::string> failure;
  if (check_valuative) {
    const Relation relation = SplitRelation(base, split);
    const RelationCheck check = CheckRelation(relation);
    report["relation_holds"] = check.holds;
    if (!check.holds) {
      failure = "indicator relation fails: " + check.reason;
    } else {
      const ValuativeResult cave = ValuativeCheck(relation);
      const SparsePoly mobius = MobiusResidual(relation);
      report["cave_residual"] = PolyToJson(cave.residual);
      report["mobius_residual"] = PolyToJson(mobius);
      if (!cave.vanishes) {
        failure = "cave residual is " + FormatPoly(cave.residual);
      } else if (!mobius.is_zero()) {
        failure = "Möbius residual is " + FormatPoly(mobius);
      }
    }
  }
  if (ctx.format == Format::kJson) {
    EmitJson(ctx, report);
  } else {
    ctx.out << "split along {" << SubsetKey(choice.subset) << "} at "
            << choice.threshold << '\n';
    const std::pair<const char*, const PointSet*> pieces[] = {
        {"lower", &split.lower}, {"upper", &split.upper},
        {"middle", &split.middle}};
    for (const auto& [name, piece] : pieces) {
      ctx.out << name << ':';
      for (const auto& n : *piece) ctx.out << ' ' << PointToString(n);
      ctx.out << '\n';
    }
    if (check_valuative && !failure) {
      ctx.out << "valuative: cave and Möbius residuals vanish\n";
    }
  }
  if (failure) throw Mismatch(*failure);
  return kExitOk;
}

int CmdFixtures(const Context& ctx, const std::string& action,
                const std::string& name) {
  if (action == "list") {
    RequireFormat(ctx, {Format::kJson, Format::kPretty}, "fixtures list");
    if (ctx.format == Format::kJson) {
      EmitJson(ctx, Json{{"fixtures", FixtureNames()},
                         {"corpus", CorpusNames()}});
    } else {
      for (const auto& n : FixtureNames()) ctx.out << n << '\n';
      ctx.out << "U(r;m1,...,mp)\ndual(NAME)\ntrunc(NAME;b1,...,bp)\n"
                 "trans(NAME;b1,...,bp)\n";
    }
    return kExitOk;
  }
  if (name.empty()) {
    throw Error(ErrorCode::kMalformedInput, "fixtures emit needs a NAME");
  }
  EmitJson(ctx, PolymatroidToJson(LoadFixture(name)));
  return kExitOk;
}

void ReportError(const Context& ctx, std::string_view code,
                 const std::string& message, const std::string& witness) {
  if (ctx.format == Format::kJson) {
    EmitJson(ctx, Json{{"error", {{"code", code},
                                  {"message", message},
                                  {"witness", witness}}}});
  } else {
    ctx.err << "error: " << code << ": " << message << '\n';
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Polymatroid invariants: Möbius functions, cave, Snapper and "
               "K-polynomials, syzygies."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty", "csv"}));
  app.add_option("--cage", global.cage, "Cage m1,...,mp overriding the file's");
  app.add_option("--parallel", global.parallel,
                 "Worker threads for Betti tables and Hessian sweeps")
      ->check(CLI::Range(1, 256));
  app.add_option("--seed", global.seed, "Seed for randomized split selection");

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Polymatroid file, '-' or fixture name")
        ->required();
    return sub;
  };

  auto* validate = add_file(app.add_subcommand("validate", "Validate a file"));
  auto* base = add_file(app.add_subcommand("base-points", "Base lattice points"));
  auto* indep = add_file(
      app.add_subcommand("indep-points", "Independence lattice points"));
  auto* mobius = add_file(app.add_subcommand("mobius", "Möbius table"));
  std::string permute;
  auto* cave = add_file(app.add_subcommand("cave", "Cave polynomial"));
  cave->add_option("--permute", permute, "Permutation pi(1),...,pi(p)");
  auto* snapper = add_file(app.add_subcommand("snapper", "Snapper polynomial"));
  auto* ideal = add_file(app.add_subcommand("ideal", "Polymatroidal ideal"));
  std::string via_k = "cave";
  auto* kpoly = add_file(app.add_subcommand("kpoly", "K-polynomial"));
  kpoly->add_option("--via", via_k)->check(
      CLI::IsMember({"cave", "betti", "both"}));
  auto* betti = add_file(app.add_subcommand("betti", "Multigraded Betti table"));
  int hs_index = 0;
  std::string via_hs = "mobius";
  auto* hs = add_file(app.add_subcommand("hs", "Homological shift ideal"));
  hs->add_option("--index", hs_index)->required()->check(CLI::NonNegativeNumber);
  hs->add_option("--via", via_hs)->check(
      CLI::IsMember({"mobius", "betti", "both"}));
  auto* dual = add_file(app.add_subcommand("dual", "Dual polymatroid"));
  dual->add_option("--cage", global.cage, "Cage m1,...,mp");
  auto* gpm = add_file(app.add_subcommand(
      "check-gpm", "Check that the cave support is a generalized polymatroid"));
  std::string target = "kpoly";
  auto* lorentzian = add_file(app.add_subcommand(
      "lorentzian", "Denormalized Lorentzian check of a sign-changed "
                    "homogenization"));
  lorentzian->add_option("--target", target)->check(
      CLI::IsMember({"kpoly", "cave-dual"}));
  std::string subset;
  std::optional<int> threshold;
  bool check_valuative = false;
  auto* split = add_file(app.add_subcommand("split", "Hyperplane split"));
  split->add_option("--subset", subset, "Subset J, e.g. 1,3");
  split->add_option("--threshold", threshold, "Threshold c");
  split->add_flag("--check-valuative", check_valuative);
  std::string fixture_action, fixture_name;
  auto* fixtures = app.add_subcommand("fixtures", "Built-in fixtures");
  fixtures->add_option("action", fixture_action)
      ->required()
      ->check(CLI::IsMember({"list", "emit"}));
  fixtures->add_option("name", fixture_name);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformedInput;
  }

  Context ctx{in, out, err,
              global.format == "json"  ? Format::kJson
              : global.format == "csv" ? Format::kCsv
                                       : Format::kPretty,
              std::nullopt, global.parallel, global.seed};
  try {
    if (!global.cage.empty()) ctx.cage = ParseIntList(global.cage);
    if (*validate) return CmdValidate(ctx, file);
    if (*base) return CmdPoints(ctx, file, true);
    if (*indep) return CmdPoints(ctx, file, false);
    if (*mobius) return CmdMobius(ctx, file);
    if (*cave) return CmdCave(ctx, file, permute);
    if (*snapper) return CmdSnapper(ctx, file);
    if (*ideal) return CmdIdeal(ctx, file);
    if (*kpoly) return CmdKpoly(ctx, file, via_k);
    if (*betti) return CmdBetti(ctx, file);
    if (*hs) return CmdHs(ctx, file, hs_index, via_hs);
    if (*dual) return CmdDual(ctx, file);
    if (*gpm) return CmdCheckGpm(ctx, file);
    if (*lorentzian) return CmdLorentzian(ctx, file, target);
    if (*split) {
      return CmdSplit(ctx, file, subset, threshold, check_valuative);
    }
    if (*fixtures) return CmdFixtures(ctx, fixture_action, fixture_name);
  } catch (const Error& e) {
    ReportError(ctx, ErrorCodeName(e.code()), e.what(), e.witness());
    return ExitCodeFor(e.code());
  } catch (const Mismatch& e) {
    ReportError(ctx, "CrossCheckMismatch", e.what(), "");
    return kExitCrossCheckMismatch;
  } catch (const Json::exception& e) {
    ReportError(ctx, "MalformedInput", e.what(), "");
    return kExitMalformedInput;
  } catch (const std::exception& e) {
    ReportError(ctx, "Internal", e.what(), "");
    return kExitCrossCheckMismatch;
  }
  return kExitMalformedInput;
}

}  // namespace polymat::cli
