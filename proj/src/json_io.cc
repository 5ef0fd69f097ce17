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

#include "posetgame/json_io.h"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "posetgame/errors.h"

namespace posetgame {
namespace {

const char kEmptySet[] = "\xE2\x88\x85";

// Stores decimal literals as strings holding their source text.
class ExactSax : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using json_sax_dom_parser::json_sax_dom_parser;

  bool number_float(Json::number_float_t /*value*/, const std::string& text) {
    std::string copy = text;
    return string(copy);
  }
};

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorCode::kMalformedInput, message);
}

const Json& Field(const Json& json, const char* name) {
  if (!json.is_object() || !json.contains(name)) {
    Malformed(std::string("missing field \"") + name + "\"");
  }
  return json.at(name);
}

const Json& ObjectField(const Json& json, const char* name) {
  const Json& value = Field(json, name);
  if (!value.is_object()) {
    Malformed(std::string("field \"") + name + "\" must be an object");
  }
  return value;
}

// Splits `text` into pieces joined by '-', each one of `candidates`;
// returns the candidate indices, or nothing when no split exists.
std::optional<std::vector<int>> SplitJoined(
    const std::string& text, const std::vector<std::string>& candidates) {
  std::vector<int> out;
  std::function<bool(size_t)> split = [&](size_t pos) {
    for (size_t i = 0; i < candidates.size(); ++i) {
      const std::string& c = candidates[i];
      if (c.empty() || text.compare(pos, c.size(), c) != 0) continue;
      const size_t end = pos + c.size();
      out.push_back(static_cast<int>(i));
      if (end == text.size()) return true;
      if (text[end] == '-' && split(end + 1)) return true;
      out.pop_back();
    }
    return false;
  };
  if (text.empty() || !split(0)) return std::nullopt;
  return out;
}

std::vector<std::string> LabelTexts(const Poset& poset) {
  std::vector<std::string> texts;
  for (const Label& label : poset.labels()) texts.push_back(label.text());
  return texts;
}

std::vector<Rational> ElementValues(const Poset& poset, const Json& json,
                                    const char* what) {
  std::vector<Rational> values(poset.size());
  std::vector<char> seen(poset.size(), 0);
  for (const auto& [key, value] : json.items()) {
    const int x = poset.IndexOfText(key);
    if (x < 0) {
      throw Error(ErrorCode::kUnknownElement,
                  std::string(what) + " names unknown element " + key);
    }
    values[x] = RationalFromJson(value);
    seen[x] = 1;
  }
  for (int x = 0; x < poset.size(); ++x) {
    if (!seen[x]) {
      Malformed(std::string(what) + " has no value for " +
                poset.label(x).text());
    }
  }
  return values;
}

std::string DecimalText(const Rational& value) {
  // A denominator 2^a 5^b terminates after max(a, b) digits.
  mpz_class den = value.get_den();
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  const bool exact = den == 1;
  const int digits = exact ? std::max(twos, fives) : 6;
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, digits);
  const Rational scaled_value = abs(value) * ten_power;
  // Round half up on the magnitude.
  mpz_class rounded = (scaled_value.get_num() * 2 + scaled_value.get_den()) /
                      (scaled_value.get_den() * 2);
  std::string text = rounded.get_str();
  if (digits > 0) {
    if (static_cast<int>(text.size()) <= digits) {
      text.insert(0, digits + 1 - text.size(), '0');
    }
    text.insert(text.size() - digits, ".");
    if (!exact) {
      while (text.back() == '0') text.pop_back();
      if (text.back() == '.') text.pop_back();
    }
  }
  if (IsNegative(value) && text.find_first_not_of("0.") != std::string::npos) {
    text.insert(0, "-");
  }
  return text;
}

Json Labels(const Poset& poset, const std::vector<int>& elements) {
  Json out = Json::array();
  for (int x : elements) out.push_back(poset.label(x).text());
  return out;
}

}  // namespace

Json ParseJsonText(std::string_view text) {
  Json result;
  ExactSax sax(result);
  try {
    Json::sax_parse(text, &sax);
  } catch (const nlohmann::json::exception& e) {
    Malformed(std::string("invalid JSON: ") + e.what());
  }
  return result;
}

Rational RationalFromJson(const Json& value) {
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number()) return ParseRational(value.dump());
  Malformed("expected a number or a \"p/q\" string, got " + value.dump());
}

Label LabelFromJson(const Json& value) {
  if (value.is_number_integer()) return Label::Integer(value.get<int64_t>());
  if (value.is_string()) return Label::String(value.get<std::string>());
  Malformed("ids must be integers or strings, got " + value.dump());
}

Poset PosetFromJson(const Json& json) {
  const Json& elements = Field(json, "elements");
  if (!elements.is_array()) Malformed("\"elements\" must be an array");
  std::vector<Label> labels;
  for (const Json& element : elements) labels.push_back(LabelFromJson(element));
  std::vector<std::pair<Label, Label>> relations;
  if (json.contains("relations")) {
    const Json& list = json.at("relations");
    if (!list.is_array()) Malformed("\"relations\" must be an array");
    for (const Json& pair : list) {
      if (!pair.is_array() || pair.size() != 2) {
        Malformed("each relation must be a pair, got " + pair.dump());
      }
      relations.emplace_back(LabelFromJson(pair[0]), LabelFromJson(pair[1]));
    }
  }
  return BuildPoset(std::move(labels), relations);
}

ChainConstraintProblem ProblemFromJson(const Json& json, int64_t chain_cap) {
  Poset poset = PosetFromJson(ObjectField(json, "poset"));
  std::vector<Rational> rho =
      ElementValues(poset, ObjectField(json, "rho"), "rho");
  const Json& pi = ObjectField(json, "pi");
  if (pi.contains("affine") == pi.contains("explicit")) {
    Malformed("\"pi\" must hold exactly one of \"explicit\" and \"affine\"");
  }
  if (pi.contains("affine")) {
    const Json& affine = ObjectField(pi, "affine");
    const Rational alpha = RationalFromJson(Field(affine, "alpha"));
    std::vector<Rational> beta =
        ElementValues(poset, ObjectField(affine, "beta"), "beta");
    return ChainConstraintProblem::Affine(std::move(poset), std::move(rho),
                                          alpha, std::move(beta));
  }
  std::map<std::string, MaximalChain> by_key;
  for (MaximalChain& chain : EnumerateMaximalChains(poset, chain_cap)) {
    by_key.emplace(poset.Key(chain), std::move(chain));
  }
  std::map<MaximalChain, Rational> values;
  for (const auto& [key, value] : ObjectField(pi, "explicit").items()) {
    const auto it = by_key.find(key);
    if (it == by_key.end()) {
      throw Error(ErrorCode::kUnknownChain, key + " is not a maximal chain");
    }
    values[it->second] = RationalFromJson(value);
  }
  return ChainConstraintProblem::Explicit(std::move(poset), std::move(rho),
                                          values, chain_cap);
}

FlowNetwork NetworkFromJson(const Json& json) {
  const Json& nodes = Field(json, "nodes");
  if (!nodes.is_array()) Malformed("\"nodes\" must be an array");
  std::vector<Label> labels;
  for (const Json& node : nodes) labels.push_back(LabelFromJson(node));
  const Json& edges = Field(json, "edges");
  if (!edges.is_array()) Malformed("\"edges\" must be an array");
  std::vector<EdgeSpec> specs;
  for (const Json& edge : edges) {
    specs.push_back({LabelFromJson(Field(edge, "from")),
                     LabelFromJson(Field(edge, "to")),
                     RationalFromJson(Field(edge, "c")),
                     RationalFromJson(Field(edge, "b")),
                     RationalFromJson(Field(edge, "d"))});
  }
  return FlowNetwork::Create(std::move(labels), LabelFromJson(Field(json, "s")),
                             LabelFromJson(Field(json, "t")), specs,
                             RationalFromJson(Field(json, "p1")),
                             RationalFromJson(Field(json, "p2")));
}

StrategyProfile ProfileFromJson(const FlowNetwork& network, const Json& json,
                                const std::string& empty_key) {
  StrategyProfile profile;
  for (const auto& [key, value] : ObjectField(json, "flow").items()) {
    profile.routing[network.ParsePathKey(key)] += RationalFromJson(value);
  }
  std::vector<std::string> edge_labels;
  for (int e = 0; e < network.num_edges(); ++e) {
    edge_labels.push_back(network.EdgeLabel(e));
  }
  for (const auto& [key, value] : ObjectField(json, "interdiction").items()) {
    std::vector<int> subset;
    if (key != empty_key && !key.empty() && key != kEmptySet) {
      const std::optional<std::vector<int>> split =
          SplitJoined(key, edge_labels);
      if (!split.has_value()) {
        throw Error(ErrorCode::kUnknownEdge, "unknown edge subset " + key);
      }
      subset = *split;
      std::sort(subset.begin(), subset.end());
    }
    profile.interdiction[subset] += RationalFromJson(value);
  }
  return profile;
}

SubsetDistribution SigmaFromJson(const Poset& poset, const Json& json,
                                 const std::string& empty_key) {
  if (!json.is_object()) Malformed("\"sigma\" must be an object");
  const std::vector<std::string> texts = LabelTexts(poset);
  SubsetDistribution sigma;
  for (const auto& [key, value] : json.items()) {
    std::vector<int> subset;
    if (key != empty_key && !key.empty() && key != kEmptySet) {
      const std::optional<std::vector<int>> split = SplitJoined(key, texts);
      if (!split.has_value()) {
        throw Error(ErrorCode::kUnknownElement, "unknown subset " + key);
      }
      subset = *split;
      std::sort(subset.begin(), subset.end());
    }
    sigma[subset] += RationalFromJson(value);
  }
  return sigma;
}

Json RationalToJson(const Rational& value, const JsonStyle& style) {
  return style.decimal ? DecimalText(value) : ToString(value);
}

std::string EdgeSubsetKey(const FlowNetwork& network,
                          const std::vector<int>& subset,
                          const std::string& empty_key) {
  if (subset.empty()) return empty_key;
  std::string key;
  for (int e : subset) {
    if (!key.empty()) key += "-";
    key += network.EdgeLabel(e);
  }
  return key;
}

Json SigmaToJson(const Poset& poset, const SubsetDistribution& sigma,
                 const JsonStyle& style) {
  Json out = Json::object();
  for (const auto& [subset, weight] : sigma) {
    out[SubsetKey(poset, subset, style.empty_key)] =
        RationalToJson(weight, style);
  }
  return out;
}

Json SolutionToJson(const ChainConstraintProblem& problem,
                    const QSolution& solution, const JsonStyle& style) {
  const Poset& poset = problem.poset();
  Json out;
  out["sigma"] = SigmaToJson(poset, solution.sigma, style);
  out["total"] = RationalToJson(solution.total, style);
  out["iterations"] = solution.iterations;
  if (solution.total <= 1) {
    out["distribution"] = SigmaToJson(
        poset, LiftToDistribution(solution.sigma, solution.total), style);
  }
  if (solution.trace.empty()) return out;
  const ChainConstraintProblem expanded = problem.ToExplicit();
  const std::vector<MaximalChain>& chains = expanded.chains();
  auto chain_keys = [&](const std::vector<int>& indices) {
    Json keys = Json::array();
    for (int c : indices) keys.push_back(poset.Key(chains[c]));
    return keys;
  };
  Json trace = Json::array();
  for (const IterationState& state : solution.trace) {
    Json entry;
    entry["k"] = state.k;
    entry["surviving_elements"] = Labels(poset, state.surviving_elements);
    entry["tight_chains"] = chain_keys(state.tight_chains);
    entry["loose_chains"] = chain_keys(state.loose_chains);
    Json rho = Json::object();
    for (int x : state.surviving_elements) {
      rho[poset.label(x).text()] = RationalToJson(state.rho[x], style);
    }
    entry["rho"] = std::move(rho);
    Json delta = Json::object();
    Json pi = Json::object();
    for (int c : state.surviving_chains) {
      delta[poset.Key(chains[c])] = RationalToJson(state.delta[c], style);
      if (!state.pi.empty()) {
        pi[poset.Key(chains[c])] = RationalToJson(state.pi[c], style);
      }
    }
    entry["delta"] = std::move(delta);
    if (!state.pi.empty()) entry["pi"] = std::move(pi);
    entry["selected"] = SubsetKey(poset, state.selected, style.empty_key);
    entry["weight"] = RationalToJson(state.weight, style);
    trace.push_back(std::move(entry));
  }
  out["trace"] = std::move(trace);
  return out;
}

Json SolutionToJson(const Poset& poset, const AffineSolution& solution,
                    const JsonStyle& style) {
  Json out;
  out["sigma"] = SigmaToJson(poset, solution.sigma, style);
  out["total"] = RationalToJson(solution.total, style);
  out["iterations"] = solution.iterations;
  if (solution.total <= 1) {
    out["distribution"] = SigmaToJson(
        poset, LiftToDistribution(solution.sigma, solution.total), style);
  }
  if (solution.trace.empty()) return out;
  Json trace = Json::array();
  for (const AffineIterationState& state : solution.trace) {
    Json entry;
    entry["k"] = state.k;
    entry["surviving_elements"] = Labels(poset, state.surviving_elements);
    Json rho = Json::object();
    for (int x : state.surviving_elements) {
      rho[poset.label(x).text()] = RationalToJson(state.rho[x], style);
    }
    entry["rho"] = std::move(rho);
    entry["beta_t"] = RationalToJson(state.beta_t, style);
    entry["selected"] = SubsetKey(poset, state.selected, style.empty_key);
    Json hops = Json::array();
    for (const std::optional<Rational>& length : state.hop_lengths) {
      hops.push_back(length.has_value() ? RationalToJson(*length, style)
                                        : Json(nullptr));
    }
    entry["hop_lengths"] = std::move(hops);
    entry["weight"] = RationalToJson(state.weight, style);
    trace.push_back(std::move(entry));
  }
  out["trace"] = std::move(trace);
  return out;
}

Json ConditionReportToJson(const Poset& poset, const ConditionReport& report,
                           const JsonStyle& style) {
  Json out;
  out["necessary_ok"] = report.necessary_ok;
  out["conservation_ok"] = report.conservation_ok;
  Json necessary = Json::array();
  for (const NecessaryViolation& v : report.necessary_violations) {
    necessary.push_back(
        {{"chain", poset.Key(v.chain)}, {"delta", RationalToJson(v.delta, style)}});
  }
  out["necessary_violations"] = std::move(necessary);
  Json conservation = Json::array();
  for (const ConservationViolation& v : report.conservation_violations) {
    conservation.push_back({{"first", poset.Key(v.first)},
                            {"second", poset.Key(v.second)},
                            {"first_second", poset.Key(v.first_second)},
                            {"second_first", poset.Key(v.second_first)},
                            {"shared", poset.label(v.shared).text()},
                            {"lhs", RationalToJson(v.lhs, style)},
                            {"rhs", RationalToJson(v.rhs, style)}});
  }
  out["conservation_violations"] = std::move(conservation);
  out["structural_errors"] = report.structural_errors;
  return out;
}

Json OracleResultToJson(const Poset& poset, const OracleResult& result,
                        const JsonStyle& style) {
  Json out;
  out["optimum"] = RationalToJson(result.optimum, style);
  out["witness"] = SigmaToJson(poset, result.witness, style);
  out["method"] = result.method;
  return out;
}

Json PathFlowToJson(const FlowNetwork& network, const PathFlow& flow,
                    const JsonStyle& style) {
  Json out = Json::object();
  for (const auto& [path, value] : flow) {
    out[network.PathKey(path)] = RationalToJson(value, style);
  }
  return out;
}

Json InterdictionToJson(const FlowNetwork& network,
                        const SubsetDistribution& interdiction,
                        const JsonStyle& style) {
  Json out = Json::object();
  for (const auto& [subset, weight] : interdiction) {
    out[EdgeSubsetKey(network, subset, style.empty_key)] =
        RationalToJson(weight, style);
  }
  return out;
}

Json EquilibriumToJson(const FlowNetwork& network,
                       const EquilibriumProfile& equilibrium,
                       const JsonStyle& style) {
  Json out = ProfileToJson(network, equilibrium.profile, style);
  Json rho = Json::object();
  Json mu = Json::object();
  for (int e = 0; e < network.num_edges(); ++e) {
    rho[network.EdgeLabel(e)] = RationalToJson(equilibrium.dual.rho[e], style);
    mu[network.EdgeLabel(e)] = RationalToJson(equilibrium.dual.mu[e], style);
  }
  out["rho"] = std::move(rho);
  out["mu"] = std::move(mu);
  Json pi = Json::object();
  for (const auto& [path, value] : equilibrium.pi_star) {
    pi[network.PathKey(path)] = RationalToJson(value, style);
  }
  out["pi_star"] = std::move(pi);
  out["u1"] = RationalToJson(equilibrium.u1, style);
  out["u2"] = RationalToJson(equilibrium.u2, style);
  if (!equilibrium.warnings.empty()) out["warnings"] = equilibrium.warnings;
  return out;
}

Json ProfileToJson(const FlowNetwork& network, const StrategyProfile& profile,
                   const JsonStyle& style) {
  Json out;
  out["flow"] = PathFlowToJson(network, profile.routing, style);
  out["interdiction"] =
      InterdictionToJson(network, profile.interdiction, style);
  return out;
}

Json NeReportToJson(const FlowNetwork& network, const NeReport& report,
                    const JsonStyle& style) {
  Json out;
  out["is_ne"] = report.is_ne;
  out["p1_value"] = RationalToJson(report.p1_value, style);
  out["p1_best"] = RationalToJson(report.p1_best, style);
  out["p1_gap"] = RationalToJson(report.p1_gap, style);
  out["p2_value"] = RationalToJson(report.p2_value, style);
  out["p2_best"] = RationalToJson(report.p2_best, style);
  out["p2_gap"] = RationalToJson(report.p2_gap, style);
  out["p1_best_response"] = PathFlowToJson(network, report.p1_witness, style);
  out["p2_best_response"] =
      EdgeSubsetKey(network, report.p2_witness, style.empty_key);
  return out;
}

Json QuantitiesToJson(const EquilibriumQuantities& quantities,
                      const JsonStyle& style) {
  Json out;
  out["flow_value"] = RationalToJson(quantities.flow_value, style);
  out["transport_cost"] = RationalToJson(quantities.transport_cost, style);
  out["interdiction_cost"] =
      RationalToJson(quantities.interdiction_cost, style);
  out["interdicted_flow"] = RationalToJson(quantities.interdicted_flow, style);
  out["effective_flow"] = RationalToJson(quantities.effective_flow, style);
  return out;
}

Json CriticalComponentsToJson(const FlowNetwork& network,
                              const CriticalComponents& components) {
  Json out;
  Json paths = Json::array();
  for (const Path& path : components.paths) {
    paths.push_back(network.PathKey(path));
  }
  Json edges = Json::array();
  for (int e : components.edges) edges.push_back(network.EdgeLabel(e));
  out["critical_paths"] = std::move(paths);
  out["critical_edges"] = std::move(edges);
  return out;
}

}  // namespace posetgame
