// Copyright 2026 The posetgame Authors.
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

#include "posetgame/cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "posetgame/affine_solver.h"
#include "posetgame/constraint_model.h"
#include "posetgame/errors.h"
#include "posetgame/game.h"
#include "posetgame/greedy_solver.h"
#include "posetgame/json_io.h"
#include "posetgame/oracle.h"

namespace posetgame {
namespace {

struct Flags {
  std::string input;
  std::string second;
  bool affine = false;
  bool trace = false;
  bool oracle = false;
  int64_t chain_cap = kDefaultChainCap;
  std::string format = "json";
  std::string empty_key = "\xE2\x88\x85";
};

class Command {
 public:
  Command(const Flags& flags, std::istream& in, std::ostream& out,
          std::ostream& err)
      : flags_(flags), in_(in), out_(out), err_(err) {
    style_.empty_key = flags.empty_key;
    style_.decimal = flags.format == "pretty";
  }

  int PosetSolve();
  int PosetVerify();
  int GameSolve();
  int GameVerify();
  int GameCritical();
  int GameQuantities();
  int PureNe();

 private:
  Json Read(const std::string& path) {
    if (path == "-") {
      return ParseJsonText(std::string(std::istreambuf_iterator<char>(in_),
                                        std::istreambuf_iterator<char>()));
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::kMalformedInput, "cannot read " + path);
    std::ostringstream text;
    text << file.rdbuf();
    return ParseJsonText(text.str());
  }

  void Emit(const Json& json) {
    out_ << json.dump(2, ' ', false, Json::error_handler_t::strict) << "\n";
  }

  GameOptions game_options() const {
    return {.path_cap = flags_.chain_cap};
  }

  // Writes the report to the error stream and returns false when a
  // condition fails.
  bool ConditionsHold(const ChainConstraintProblem& problem) {
    const ConditionReport report = VerifyConditions(problem);
    if (report.necessary_ok && report.conservation_ok) return true;
    err_ << "conditions violated:\n"
         << ConditionReportToJson(problem.poset(), report, style_).dump(2)
         << "\n";
    return false;
  }

  const Flags& flags_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  JsonStyle style_;
};

int Command::PosetSolve() {
  const ChainConstraintProblem problem =
      ProblemFromJson(Read(flags_.input), flags_.chain_cap);
  if (flags_.affine && !problem.is_affine()) {
    throw Error(ErrorCode::kMalformedInput,
                "--affine needs chain values in affine form");
  }
  if (!ConditionsHold(problem)) return kExitViolation;
  Json result;
  Rational total;
  if (problem.is_affine()) {
    const AffineSolution solution =
        SolveQAffine(problem, {.trace = flags_.trace});
    result = SolutionToJson(problem.poset(), solution, style_);
    total = solution.total;
  } else {
    const QSolution solution = SolveQGeneral(
        problem, {.trace = flags_.trace, .chain_cap = flags_.chain_cap});
    result = SolutionToJson(problem, solution, style_);
    total = solution.total;
  }
  if (flags_.oracle) {
    const OracleResult oracle = BruteForceQ(problem);
    result["oracle"] = OracleResultToJson(problem.poset(), oracle, style_);
    result["oracle"]["agrees"] = oracle.optimum == total;
    Emit(result);
    if (oracle.optimum != total) {
      err_ << "oracle optimum differs from the solver total\n";
      return kExitViolation;
    }
    return kExitOk;
  }
  Emit(result);
  return kExitOk;
}

int Command::PosetVerify() {
  const ChainConstraintProblem problem =
      ProblemFromJson(Read(flags_.input), flags_.chain_cap);
  const ConditionReport report = VerifyConditions(problem);
  Json result = ConditionReportToJson(problem.poset(), report, style_);
  bool ok = report.necessary_ok && report.conservation_ok;
  if (!flags_.second.empty()) {
    const Json solution = Read(flags_.second);
    if (!solution.contains("sigma")) {
      throw Error(ErrorCode::kMalformedInput, "solution has no \"sigma\"");
    }
    const std::vector<std::string> failures = CheckSubsetWeights(
        problem,
        SigmaFromJson(problem.poset(), solution.at("sigma"), flags_.empty_key),
        flags_.chain_cap);
    result["solution_ok"] = failures.empty();
    result["solution_failures"] = failures;
    ok = ok && failures.empty();
  }
  if (flags_.oracle && report.necessary_ok && report.conservation_ok) {
    result["oracle"] =
        OracleResultToJson(problem.poset(), BruteForceQ(problem), style_);
  }
  Emit(result);
  return ok ? kExitOk : kExitViolation;
}

int Command::GameSolve() {
  const FlowNetwork network = NetworkFromJson(Read(flags_.input));
  const EquilibriumProfile equilibrium = ComputeNe(network, game_options());
  for (const std::string& warning : equilibrium.warnings) {
    err_ << "warning: " << warning << "\n";
  }
  Json result = EquilibriumToJson(network, equilibrium, style_);
  if (!flags_.oracle) {
    Emit(result);
    return kExitOk;
  }
  const NeReport report =
      VerifyNe(network, equilibrium.profile, game_options());
  result["verification"] = NeReportToJson(network, report, style_);
  Emit(result);
  return report.is_ne ? kExitOk : kExitViolation;
}

int Command::GameVerify() {
  if (flags_.second.empty()) {
    throw Error(ErrorCode::kMalformedInput,
                "game-verify needs a network and a profile");
  }
  const FlowNetwork network = NetworkFromJson(Read(flags_.input));
  const StrategyProfile profile =
      ProfileFromJson(network, Read(flags_.second), flags_.empty_key);
  const NeReport report = VerifyNe(network, profile, game_options());
  Emit(NeReportToJson(network, report, style_));
  return report.is_ne ? kExitOk : kExitViolation;
}

int Command::GameCritical() {
  const FlowNetwork network = NetworkFromJson(Read(flags_.input));
  Emit(CriticalComponentsToJson(
      network, ComputeCriticalComponents(network, game_options())));
  return kExitOk;
}

int Command::GameQuantities() {
  const FlowNetwork network = NetworkFromJson(Read(flags_.input));
  const EquilibriumProfile equilibrium = ComputeNe(network, game_options());
  Emit(QuantitiesToJson(ComputeEquilibriumQuantities(network, equilibrium),
                        style_));
  return kExitOk;
}

int Command::PureNe() {
  const FlowNetwork network = NetworkFromJson(Read(flags_.input));
  const std::optional<StrategyProfile> pure =
      PureNeCheck(network, game_options());
  Json result;
  result["exists"] = pure.has_value();
  if (pure.has_value()) {
    const Json profile = ProfileToJson(network, *pure, style_);
    result["flow"] = profile.at("flow");
    result["interdiction"] = profile.at("interdiction");
  }
  Emit(result);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  Flags flags;
  CLI::App app{"Chain-constrained subset distributions and network "
               "interdiction equilibria"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--affine", flags.affine,
               "require affine chain values (poset-solve)");
  app.add_flag("--trace", flags.trace, "include per-iteration solver state");
  app.add_flag("--oracle", flags.oracle,
               "cross-check against the brute-force oracle");
  app.add_option("--chain-cap", flags.chain_cap,
                 "limit on enumerated chains and paths")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", flags.format, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--empty-key", flags.empty_key,
                 "key of the empty subset in output");

  struct Verb {
    const char* name;
    const char* help;
    const char* second;
    int (Command::*run)();
  };
  const Verb verbs[] = {
      {"poset-solve", "solve the minimum-weight subset problem", nullptr,
       &Command::PosetSolve},
      {"poset-verify", "check the necessary and conservation conditions",
       "solution", &Command::PosetVerify},
      {"game-solve", "compute an interdiction equilibrium", nullptr,
       &Command::GameSolve},
      {"game-verify", "check a profile against best responses", "profile",
       &Command::GameVerify},
      {"game-critical", "paths and edges used in some equilibrium", nullptr,
       &Command::GameCritical},
      {"game-quantities", "expected equilibrium quantities", nullptr,
       &Command::GameQuantities},
      {"pure-ne", "find an equilibrium without interdiction", nullptr,
       &Command::PureNe},
  };
  std::vector<std::pair<CLI::App*, const Verb*>> commands;
  for (const Verb& verb : verbs) {
    CLI::App* sub = app.add_subcommand(verb.name, verb.help);
    sub->add_option("input", flags.input, "input JSON file, or - for stdin")
        ->required();
    if (verb.second != nullptr) {
      sub->add_option(verb.second, flags.second,
                      std::string(verb.second) + " JSON file");
    }
    commands.emplace_back(sub, &verb);
  }

  std::vector<const char*> argv;
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  Command command(flags, in, out, err);
  try {
    for (const auto& [sub, verb] : commands) {
      if (sub->parsed()) return (command.*(verb->run))();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (IsResourceLimit(e.code())) return kExitResourceLimit;
    if (IsConditionViolation(e.code())) return kExitViolation;
    return kExitMalformed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace posetgame
