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

// JSON reading and writing for posets, chain problems, networks, solver
// results and game profiles. Rationals are written as "p/q" strings.

#ifndef POSETGAME_JSON_IO_H_
#define POSETGAME_JSON_IO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "posetgame/affine_solver.h"
#include "posetgame/constraint_model.h"
#include "posetgame/game.h"
#include "posetgame/greedy_solver.h"
#include "posetgame/network.h"
#include "posetgame/oracle.h"
#include "posetgame/poset.h"
#include "posetgame/rational.h"

namespace posetgame {

using Json = nlohmann::ordered_json;

// Parses JSON text, keeping decimal literals as their source text so that
// 0.1 reads back as exactly 1/10. Throws Error(kMalformedInput).
Json ParseJsonText(std::string_view text);

// Accepts "p/q" or decimal strings and JSON numbers.
Rational RationalFromJson(const Json& value);
Label LabelFromJson(const Json& value);

// Element keys in maps are label texts.
Poset PosetFromJson(const Json& json);
ChainConstraintProblem ProblemFromJson(const Json& json,
                                       int64_t chain_cap = kDefaultChainCap);
FlowNetwork NetworkFromJson(const Json& json);

// Reads "flow" and "interdiction" of an equilibrium or profile document.
// Edge subsets are dash-joined edge labels such as "(s,1)-(1,t)"; any of
// `empty_key`, "" and the empty-set sign denotes the empty subset.
StrategyProfile ProfileFromJson(const FlowNetwork& network, const Json& json,
                                const std::string& empty_key);

// Reads the "sigma" object of a solve result.
SubsetDistribution SigmaFromJson(const Poset& poset, const Json& json,
                                 const std::string& empty_key);

// Serialization settings. With `decimal` set, rationals render as decimal
// text (rounded when not terminating) for human reading.
struct JsonStyle {
  std::string empty_key = "\xE2\x88\x85";
  bool decimal = false;
};

Json RationalToJson(const Rational& value, const JsonStyle& style);

// The joined key of an edge subset.
std::string EdgeSubsetKey(const FlowNetwork& network,
                          const std::vector<int>& subset,
                          const std::string& empty_key);

Json SigmaToJson(const Poset& poset, const SubsetDistribution& sigma,
                 const JsonStyle& style);
Json SolutionToJson(const ChainConstraintProblem& problem,
                    const QSolution& solution, const JsonStyle& style);
Json SolutionToJson(const Poset& poset, const AffineSolution& solution,
                    const JsonStyle& style);
Json ConditionReportToJson(const Poset& poset, const ConditionReport& report,
                           const JsonStyle& style);
Json OracleResultToJson(const Poset& poset, const OracleResult& result,
                        const JsonStyle& style);

Json PathFlowToJson(const FlowNetwork& network, const PathFlow& flow,
                    const JsonStyle& style);
Json InterdictionToJson(const FlowNetwork& network,
                        const SubsetDistribution& interdiction,
                        const JsonStyle& style);
Json EquilibriumToJson(const FlowNetwork& network,
                       const EquilibriumProfile& equilibrium,
                       const JsonStyle& style);
Json ProfileToJson(const FlowNetwork& network, const StrategyProfile& profile,
                   const JsonStyle& style);
Json NeReportToJson(const FlowNetwork& network, const NeReport& report,
                    const JsonStyle& style);
Json QuantitiesToJson(const EquilibriumQuantities& quantities,
                      const JsonStyle& style);
Json CriticalComponentsToJson(const FlowNetwork& network,
                              const CriticalComponents& components);

}  // namespace posetgame

#endif  // POSETGAME_JSON_IO_H_
